//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("lambda0 = {0} is outside the open interval (-1, 0)")]
    InvalidLambda0(String),

    #[error("dimension {dim} is too small (minimum {min})")]
    DimTooSmall { dim: usize, min: usize },

    #[error("negative window {window} must be smaller than dim {dim}")]
    WindowTooLarge { window: usize, dim: usize },

    #[error("level {level} is not on the {kind} lattice")]
    LevelOutsideLattice { level: String, kind: String },

    #[error("representation kind mismatch: expected {expected}, got {got}")]
    KindMismatch { expected: String, got: String },

    #[error("basis index {index} out of range for dimension {dim}")]
    InvalidModeIndex { index: usize, dim: usize },

    #[error("matrix contains non-finite entries")]
    NonFiniteEntries,

    #[error("conditioning guard exceeded: |t|*sigma_max = {scale:.3e} > {limit}")]
    ConditioningGuard { scale: f64, limit: f64 },

    #[error("n must be nonzero")]
    ZeroParameter,

    #[error("vector is zero")]
    ZeroVector,

    #[error("vector does not lie in the requested coefficient subspace")]
    NonConformingSubspace,

    #[error("linear solve failed (matrix singular at working precision)")]
    SingularSolve,

    #[error("empty index selection")]
    EmptySelection,

    #[error("depth guard exceeded: requested {requested}, limit {limit}")]
    DepthGuardExceeded { requested: usize, limit: usize },

    #[error("no convergence certificate found within k <= {k_max} (inconclusive)")]
    InconclusiveCertificate { k_max: usize },
}
