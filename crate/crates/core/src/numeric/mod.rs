//! Exact scalars: big rationals and elements of a single quadratic field Q(√d).

mod quadratic;
mod rational;

pub use quadratic::{validate_radicand, QuadraticNumber};
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("invalid rational: zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed number {0:?}")]
    Malformed(String),
    #[error("radicand {0} is not a squarefree integer greater than 1")]
    BadRadicand(u64),
    #[error("cannot combine values from Q(√{0}) and Q(√{1})")]
    MixedField(u64, u64),
}
