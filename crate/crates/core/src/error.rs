use thiserror::Error;

use crate::poly::VarSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),

    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),

    #[error("variable-set mismatch: {0:?} vs {1:?}")]
    TagMismatch(VarSet, VarSet),

    #[error("modulus mismatch: GF({0}) vs GF({1})")]
    ModulusMismatch(u32, u32),

    #[error("polynomial is not divisible by variable {0}")]
    NotDivisible(&'static str),

    #[error("grading error: {0}")]
    Grading(String),

    #[error("integer lift is not divisible by {0}")]
    IntegerLift(u32),

    #[error("cochain is not a cocycle")]
    NotACocycle,

    #[error("cell mismatch: {0}")]
    CellMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
