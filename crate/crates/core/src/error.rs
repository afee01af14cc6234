use thiserror::Error;

/// Errors raised by the numerical kernels.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),

    #[error("{op}: shape mismatch {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("buffer of length {len} does not fill a {rows}x{cols} matrix")]
    BadBuffer {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("operator dimension {got} does not match factor dimensions (expected {expected})")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid factor dimensions {0:?}")]
    InvalidDims(Vec<usize>),

    #[error("invalid factor selection {keep:?} for {factors} factors")]
    InvalidKeep { keep: Vec<usize>, factors: usize },

    #[error("invalid factor permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("cannot swap factors {i} and {j} of unequal dimension ({di} vs {dj})")]
    UnequalSwapDims {
        i: usize,
        j: usize,
        di: usize,
        dj: usize,
    },

    #[error("matrix is not Hermitian (defect {0:e})")]
    NotHermitian(f64),

    #[error("matrix is not unitary (defect {0:e})")]
    NotUnitary(f64),

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("deformation parameter must be finite and positive, got {0}")]
    InvalidDeformation(f64),

    #[error("unknown generator tag {0:?}")]
    UnknownGenerator(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
