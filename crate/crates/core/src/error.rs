use crate::finring::Ring;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("operands live in different rings ({0} and {1})")]
    MixedRings(Ring, Ring),
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("no canonical homomorphism from {source_ring} to {target}")]
    NoCanonicalHom { source_ring: Ring, target: Ring },
    #[error("{0} is not a local ring")]
    NotLocal(Ring),
    #[error("matrix is not in SL2 (determinant {0})")]
    NotInSl2(String),
    #[error("group of size {size} exceeds the cap of {cap}")]
    GroupTooLarge { size: usize, cap: usize },
    #[error("unsupported modulus {0}; expected 2, 3 or 4")]
    UnsupportedModulus(u64),
    #[error("character kind {kind} cannot be evaluated on {ring}")]
    KindMismatch { kind: &'static str, ring: Ring },
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("polynomial must have degree at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("polynomial vanishes modulo {0}")]
    ZeroModP(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial is reducible over Q")]
    Reducible,
    #[error("{0} is not a unit of Z[x]/({1})")]
    NotAUnitOfOrder(String, String),
    #[error("group elements are not closed under the operation")]
    NotClosed,
}

pub type Result<T> = std::result::Result<T, Error>;
