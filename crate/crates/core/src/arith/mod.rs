//! Exact arithmetic: rationals, sparse Laurent polynomials and fractions
//! whose denominators are products of binomials.

mod adams;
mod binomial;
mod fraction;
mod monomial;
mod poly;

use thiserror::Error;

pub use adams::{adams_poly, adams_substitute, Flavor};
pub use binomial::BinomialFactor;
pub use fraction::{FactoredFraction, FracOp};
pub use monomial::{Monomial, Var, VarContext, MAX_VARS};
pub use poly::{fmt_rational, integer_content, parse_rational, poly_arith, PolyOp, SparsePoly, Subst};

/// Exact rational number; always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("variable context mismatch: ({left}) vs ({right})")]
    Context { left: String, right: String },
    #[error("no exact quotient exists")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not a polynomial: denominator factor {factor} does not divide the numerator")]
    NotPolynomial { factor: String },
    #[error("negative exponent evaluated at zero")]
    NegativeExponentAtZero,
    #[error("variable {0} is not in the context")]
    UnknownVariable(&'static str),
    #[error("a context holds at most 3 variables, got {0}")]
    TooManyVariables(usize),
    #[error("specialization left free variables")]
    NotFullyEvaluated,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("denominator factor must have one or two terms: {0}")]
    NotBinomial(String),
    #[error("binomial coefficient does not fit in 64 bits")]
    Overflow,
}
