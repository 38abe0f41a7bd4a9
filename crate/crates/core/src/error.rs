use crate::poly::{Coefficient, Polynomial};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("zero denominator in rational literal at position {position}")]
    ZeroDenominator { position: usize },

    #[error("darga undefined for 0")]
    ZeroDarga,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("division is not exact: nonzero remainder {remainder}")]
    InexactDivision { remainder: Polynomial },

    #[error("polynomial {poly} is not palindromic of darga {darga}")]
    NotPalindromic { poly: Polynomial, darga: usize },

    #[error("negative coefficient {value} at q^{power}")]
    NegativeCoefficient { power: usize, value: Coefficient },

    #[error("polynomial is not real-rooted")]
    NotRealRooted,

    #[error("invalid factor specification: {0}")]
    InvalidFactorSpec(String),

    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("expected coordinates in basis {expected}, got {found}")]
    WrongBasis { expected: char, found: char },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
