use thiserror::Error;

use crate::arith::ArithError;
use crate::oracle::OracleError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("series constant term must be exactly 1")]
    ConstantTermNotOne,
    #[error("non-integer coefficient {coeff} at {monomial}")]
    NonIntegerCoefficient { monomial: String, coeff: String },
    #[error("closed form {which} needs g >= {min}, got g = {g}")]
    UnsupportedGenus { which: String, g: u32, min: u32 },
    #[error("{target} is not defined for {kind}")]
    KindMismatch { target: &'static str, kind: &'static str },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache document: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True when the error means a conjectured polynomiality or
    /// integrality statement failed on computed data.
    pub fn is_falsification(&self) -> bool {
        matches!(self, Error::Arith(ArithError::NotPolynomial { .. }) | Error::NonIntegerCoefficient { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
