//! Minimal dense linear algebra with reverse-mode differentiation.
//!
//! Everything the encoder and the losses need is built from a small set of
//! primitives recorded on a [`Tape`]. Each primitive knows its own gradient
//! rule; replaying the tape backward accumulates gradients for every
//! registered parameter. A finite-difference checker ([`gradcheck`]) keeps
//! the hand-derived rules honest.

mod gradcheck;
mod matrix;
pub mod ops;
mod tape;

pub use gradcheck::{check_gradients, GradCheckReport, ParamIssue, ParamStore, ParamVars};
pub use matrix::Matrix;
pub use tape::{Gradients, Tape, Var};

use thiserror::Error;

/// Errors raised by matrix construction and tape operations.
#[derive(Debug, Error)]
pub enum NumericError {
    #[error("dimension mismatch in {op}: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimensionMismatch {
        op: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix data length {len} does not match {rows}x{cols}")]
    BadShape { rows: usize, cols: usize, len: usize },
    #[error("non-finite value at ({row}, {col}) produced by {op}")]
    NonFinite { op: &'static str, row: usize, col: usize },
    #[error("index {index} out of range for {what} of size {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },
    #[error("{op} requires a scalar (1x1) value, got {rows}x{cols}")]
    NotScalar {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("invalid argument for {op}: {reason}")]
    InvalidArgument { op: &'static str, reason: String },
}
