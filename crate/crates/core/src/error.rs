use thiserror::Error;

use crate::quotient_ring::Context;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("discriminant {0} must be negative")]
    NonNegativeDiscriminant(i64),

    #[error("discriminant {0} is not congruent to 0 or 1 mod 4")]
    BadDiscriminantResidue(i64),

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("level must be at least {min}, got {got}")]
    LevelTooSmall { min: u64, got: u64 },

    #[error("{what} {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: u64,
        bound: u64,
    },

    #[error("ring elements from different contexts: {left:?} and {right:?}")]
    ContextMismatch { left: Context, right: Context },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("inexact division {numerator}/{denominator} while computing {what}")]
    InexactDivision {
        what: &'static str,
        numerator: u64,
        denominator: u64,
    },

    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("discriminant {0} is exceptional (-3 or -4) and has no generic answer")]
    ExceptionalDiscriminant(i64),

    #[error("discriminant {0} is not one of -3, -4")]
    NotExceptional(i64),

    #[error("invalid group shape {s}x{e}: {s} does not divide {e}")]
    BadGroupShape { s: u64, e: u64 },
}
