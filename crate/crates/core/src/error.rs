//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building root systems, polytopes, or
/// evaluating degrees.
#[derive(Debug, Error)]
pub enum Error {
    /// The group specification itself is invalid (bad Cartan type/rank, empty group).
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    /// An argument violates an operation's precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A vector or polytope has the wrong ambient dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A full-dimensional polytope was required.
    #[error("polytope is not full-dimensional: affine dimension {affine_dim} in ambient dimension {ambient}")]
    NotFullDimensional { affine_dim: usize, ambient: usize },

    /// A degree computation received a lower-dimensional weight polytope.
    #[error("representation not faithful enough: weight polytope not full-dimensional (affine dimension {affine_dim} in ambient dimension {ambient})")]
    NotFaithful { affine_dim: usize, ambient: usize },

    /// A polytope that must be Weyl-invariant is not.
    #[error("polytope is not Weyl-invariant: {0}")]
    NotWeylInvariant(String),

    /// A weight does not lie in the chosen character lattice.
    #[error("weight not in character lattice: {0}")]
    WeightNotInLattice(String),

    /// A resource cap was exceeded (Weyl order, hull dimension, variable count).
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    /// An internal invariant failed; this signals a bug, not a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::InvalidGroup(_)
            | Error::InvalidArgument(_)
            | Error::DimensionMismatch { .. }
            | Error::WeightNotInLattice(_) => 2,
            Error::NotFullDimensional { .. }
            | Error::NotFaithful { .. }
            | Error::NotWeylInvariant(_) => 3,
            Error::ResourceCap(_) => 4,
            Error::Internal(_) => 1,
        }
    }
}
