use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("ring configurations differ")]
    ConfigMismatch,
    #[error("invalid ring configuration: {0}")]
    InvalidConfig(String),
    #[error("operation not supported for this ring configuration")]
    UnsupportedConfig,
    #[error("scalar extension not supported between these rings")]
    UnsupportedExtension,
    #[error("the zero ideal is not a fractional ideal")]
    ZeroIdeal,
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("element does not lie in the fraction field of the ring")]
    NotInBaseField,
    #[error("the lattice is zero")]
    ZeroLattice,
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index-module is not invertible (zero or full)")]
    NotInvertible,
    #[error("product is outside the hypotheses of the multiplicativity law")]
    HypothesisViolated,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("the second lattice is not contained in the first")]
    NotASublattice,
    #[error("the lattices have different ranks")]
    RankMismatch,
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
