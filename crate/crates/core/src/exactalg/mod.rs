//! Exact rational arithmetic and multivariate polynomials over formal symbols.
//!
//! Rationals are `num_rational::BigRational`; polynomials, quotients and the
//! symbol universe are implemented here. Every symbolic identity in the crate is
//! decided by subtracting two [`Poly`] values and testing for zero.

mod poly;
mod ratfn;
mod var;

use thiserror::Error;

pub use poly::{Monomial, Poly};
pub use ratfn::RatFn;
pub use var::Var;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("expression cannot be reduced: {0}")]
    NotReducible(String),
}

/// `num/den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rat_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Shorthand for a polynomial variable.
pub fn sym(v: Var) -> Poly {
    Poly::var(v)
}
