use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the arithmetic, form, decision and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be nonzero")]
    Zero,

    #[error("{0} is not prime")]
    NotPrime(BigInt),

    #[error("the prime 2 is not allowed here")]
    EvenPrime,

    #[error("factorization budget exceeded while factoring {0}")]
    FactorBudgetExceeded(BigInt),

    #[error("degenerate form: discriminant is zero")]
    DegenerateForm,

    #[error("form has a rational root (discriminant {0} is a perfect square)")]
    RationalRoot(BigInt),

    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),

    #[error("square class {0} is not a member of the Beh group")]
    NotBehMember(BigInt),

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("projective point must not be (0, 0)")]
    ZeroPoint,

    #[error("form vanishes at [{0}:{1}] (stacky point)")]
    StackyPoint(BigInt, BigInt),

    #[error("epsilon products disagree for witness {0}; epsilon convention bug")]
    InconsistentEpsilon(BigInt),
}

pub type Result<T> = std::result::Result<T, Error>;
