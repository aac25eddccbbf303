use thiserror::Error;

/// Errors reported by the transform, quadrature and convolution operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Shape is empty, contains a zero extent, or its element count overflows.
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    /// Data length does not match the product of the shape extents.
    #[error("data length {found} does not match shape size {expected}")]
    LengthMismatch { expected: usize, found: usize },

    /// Two arrays (or an array and a plan) disagree on shape.
    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },

    /// A NaN or infinity was found in input data.
    #[error("non-finite value at flat index {index}")]
    NonFinite { index: usize },

    /// A parity pair violates its exact even/odd symmetry.
    #[error("parity pair invariant violated: {0}")]
    ParityViolation(&'static str),

    /// Neither convolution input is parity-even; the four-term formula must
    /// be used instead of the two-term shortcut.
    #[error("neither input is parity-even; use the four-term spectral path")]
    NeitherInputEven,

    /// Hermite order outside the numerically supported range.
    #[error("hermite order {k} exceeds maximum {max}")]
    HermiteOrder { k: usize, max: usize },

    /// Grid construction with non-positive half-width or fewer than two nodes.
    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),

    /// An explicit-matrix check was requested beyond its size guard.
    #[error("size {n} exceeds limit {max}")]
    SizeLimit { n: usize, max: usize },

    /// A verification suite configuration failed validation.
    #[error("invalid suite config: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = core::result::Result<T, Error>;
