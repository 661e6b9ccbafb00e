//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible operand shapes for a tensor operation.
    #[error("{op}: shape mismatch, left is {lhs:?}, right is {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: (usize, usize),
        rhs: (usize, usize),
    },

    /// Class or row index outside its valid range.
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    /// Input that is structurally valid but numerically unusable
    /// (empty bag, zero row passed to a normalizer, zero class count).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Invalid dataset or experiment specification.
    #[error("invalid spec: {0}")]
    Spec(String),

    /// Invalid training configuration.
    #[error("invalid config: {0}")]
    Config(String),

    /// Missing or unreadable dataset artifacts.
    #[error("data error: {0}")]
    Data(String),

    /// File does not start with the expected magic bytes.
    #[error("{path}: bad magic {found:?}, expected {expected:?}")]
    BadMagic {
        path: PathBuf,
        found: [u8; 4],
        expected: [u8; 4],
    },

    /// File format version not understood by this build.
    #[error("{path}: unsupported format version {found} (expected {expected})")]
    UnsupportedVersion {
        path: PathBuf,
        found: u16,
        expected: u16,
    },

    /// File ends before the declared payload.
    #[error("{path}: truncated, needed {needed} more bytes")]
    Truncated { path: PathBuf, needed: usize },

    /// NaN or infinity in a binary payload.
    #[error("{path}: non-finite value at element {index}")]
    NonFinitePayload { path: PathBuf, index: usize },

    /// Training produced a NaN/inf loss; names the first bad component.
    #[error("non-finite loss: {component} = {value} at epoch {epoch}, step {step}")]
    NonFiniteLoss {
        component: &'static str,
        value: f64,
        epoch: usize,
        step: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}
