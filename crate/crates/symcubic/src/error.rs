//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by the exact-arithmetic and geometry layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("polynomial is not homogeneous of the expected degree: {0}")]
    NotHomogeneous(String),

    #[error("polynomial has {found} variables, expected {expected}")]
    WrongArity { expected: usize, found: usize },

    #[error("polynomial does not lie in the declared character eigenspace")]
    NotInEigenspace,

    #[error("invalid symmetry type: {0}")]
    InvalidSymmetry(String),

    #[error("hypersurface is singular; operation requires a smooth member")]
    SingularInput,

    #[error("no smooth member found after {attempts} random draws (probabilistic)")]
    NoSmoothMember { attempts: u32 },

    #[error("orbit rank disagrees across seeds: {0:?}; no generic member certified")]
    RankDisagreement(Vec<usize>),

    #[error("verification failure: moduli dimension n = {n} differs from Hodge-side n' = {n_prime}")]
    VerificationFailure { n: usize, n_prime: usize },

    #[error("isometry order exceeds cap {cap}")]
    OrderCapExceeded { cap: u64 },

    #[error("matrix does not preserve the bilinear form")]
    NotIsometry,

    #[error("{0} is not isotropic")]
    NotIsotropic(String),

    #[error("input vectors are linearly dependent")]
    DependentVectors,

    #[error("exact rank certification did not converge after {primes_tried} primes")]
    CertificationFailed { primes_tried: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
