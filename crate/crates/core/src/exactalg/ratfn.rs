use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{AlgError, Poly, Rational, Var};
use std::collections::BTreeMap;

/// Quotient of two polynomials.
///
/// No polynomial GCD is taken. Construction only cancels the common monomial
/// content and normalizes the leading denominator coefficient to one, which is
/// enough to keep the frame computations for diagonal metrics polynomial.
/// Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFn { num, den: Poly::one() };
        }
        let g = num.monomial_content().gcd(&den.monomial_content());
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_monomial(&g), den.div_monomial(&g))
        };
        let lead = den.leading_coeff().cloned().unwrap_or_else(Rational::one);
        if lead.is_one() {
            RatFn { num, den }
        } else {
            let inv = lead.recip();
            RatFn { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the denominator reduced to a constant.
    pub fn as_poly(&self) -> Option<Poly> {
        self.den
            .constant_value()
            .map(|d| self.num.scale(&d.recip()))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        self.as_poly().and_then(|p| p.constant_value())
    }

    pub fn recip(&self) -> Result<RatFn, AlgError> {
        RatFn::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFn) -> Result<RatFn, AlgError> {
        Ok(self * &other.recip()?)
    }

    pub fn eval(&self, bindings: &BTreeMap<Var, Rational>) -> Result<Rational, AlgError> {
        let d = self.den.eval(bindings)?;
        if d.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.num.eval(bindings)? / d)
    }

    pub fn partial_eval(&self, bindings: &BTreeMap<Var, Rational>) -> Result<RatFn, AlgError> {
        RatFn::new(self.num.partial_eval(bindings), self.den.partial_eval(bindings))
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> Self {
        RatFn::from_poly(p)
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        (&self.num * &other.den - &other.num * &self.den).is_zero()
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        if self.den == rhs.den {
            return RatFn::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFn::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        self + &(-rhs)
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        RatFn::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, rhs: RatFn) -> RatFn {
        &self + &rhs
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, rhs: RatFn) -> RatFn {
        &self - &rhs
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, rhs: RatFn) -> RatFn {
        &self * &rhs
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den.constant_value() {
            Some(d) if d.is_one() => write!(f, "{}", self.num),
            _ => write!(f, "({}) / ({})", self.num, self.den),
        }
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        RatFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_content_cancels() {
        let a = Poly::var(Var::A);
        let r = RatFn::new(&a.pow(3) - &a, a.pow(2)).unwrap();
        assert_eq!(r.denom(), &a);
        assert_eq!(r.numer(), &(a.pow(2) - Poly::one()));
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = Poly::var(Var::A);
        let lhs = RatFn::new(Poly::int(4) - a.scale(&super::super::rat(3, 1)), a.clone()).unwrap();
        let rhs = &RatFn::new(Poly::int(4), a.clone()).unwrap() - &RatFn::from_poly(Poly::int(3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(RatFn::new(Poly::one(), Poly::zero()), Err(AlgError::DivisionByZero)));
    }
}
