use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{AlgError, Rational, Var};

/// A product of variables raised to positive powers, kept sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Returns the monomial with `v` removed, together with its exponent.
    fn split_off(&self, v: Var) -> (Monomial, u32) {
        let e = self.exponent(v);
        let rest = self.0.iter().copied().filter(|&(w, _)| w != v).collect();
        (Monomial(rest), e)
    }

    /// Componentwise minimum of exponents.
    pub(crate) fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(v, e)| {
                    let f = other.exponent(v);
                    (f > 0).then_some((v, e.min(f)))
                })
                .collect(),
        )
    }

    /// `self / other`, assuming `other` divides `self`.
    pub(crate) fn div_exact(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(v, e)| {
                    let r = e - other.exponent(v);
                    (r > 0).then_some((v, r))
                })
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in a map keyed by monomial, so the representation is
/// canonical: no zero coefficients, and structural equality is coefficient-wise
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(r: Rational) -> Self {
        let mut p = Poly::zero();
        if !r.is_zero() {
            p.terms.insert(Monomial::one(), r);
        }
        p
    }

    pub fn int(v: i64) -> Self {
        Poly::constant(Rational::from_integer(v.into()))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Poly::constant(super::rat(num, den))
    }

    pub fn var(v: Var) -> Self {
        Poly::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, coeff: Rational) -> Self {
        let mut p = Poly::zero();
        if !coeff.is_zero() {
            p.terms.insert(m, coeff);
        }
        p
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial, `None` if any variable occurs.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn scale(&self, r: &Rational) -> Poly {
        if r.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * r))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff(&self, v: Var, k: u32) -> Poly {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (rest, e) = m.split_off(v);
            (e == k).then(|| (rest, c.clone()))
        }))
    }

    pub fn substitute(&self, v: Var, value: &Poly) -> Poly {
        if self.degree_in(v) == 0 {
            return self.clone();
        }
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let term = Poly::monomial(rest, c.clone());
            out += &(&term * &powers[e as usize]);
        }
        out
    }

    pub fn substitute_all(&self, bindings: &BTreeMap<Var, Poly>) -> Poly {
        bindings
            .iter()
            .fold(self.clone(), |acc, (v, p)| acc.substitute(*v, p))
    }

    /// Exact evaluation; every variable of `self` must be bound.
    pub fn eval(&self, bindings: &BTreeMap<Var, Rational>) -> Result<Rational, AlgError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.powers() {
                let x = bindings
                    .get(&v)
                    .ok_or_else(|| AlgError::UnboundVariable(v.to_string()))?;
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Binds some variables exactly and leaves the rest symbolic.
    pub fn partial_eval(&self, bindings: &BTreeMap<Var, Rational>) -> Poly {
        let as_polys = bindings
            .iter()
            .map(|(v, r)| (*v, Poly::constant(r.clone())))
            .collect();
        self.substitute_all(&as_polys)
    }

    pub fn eval_f64(&self, value_of: impl Fn(Var) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.to_f64().unwrap_or(f64::NAN);
                for &(v, e) in m.powers() {
                    t *= value_of(v).powi(e as i32);
                }
                t
            })
            .sum()
    }

    pub fn derivative(&self, v: Var) -> Poly {
        Poly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            if e == 0 {
                return None;
            }
            let powers = m
                .powers()
                .iter()
                .map(|&(w, f)| if w == v { (w, f - 1) } else { (w, f) });
            Some((
                Monomial::from_powers(powers),
                c * Rational::from_integer(e.into()),
            ))
        }))
    }

    /// Largest monomial dividing every term (the zero polynomial gives `1`).
    pub(crate) fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    pub(crate) fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.div_exact(m), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of the largest monomial in canonical order.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }
}

impl From<Rational> for Poly {
    fn from(r: Rational) -> Self {
        Poly::constant(r)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Self {
        Poly::var(v)
    }
}

impl From<i64> for Poly {
    fn from(v: i64) -> Self {
        Poly::int(v)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl AddAssign for Poly {
    fn add_assign(&mut self, rhs: Poly) {
        *self += &rhs;
    }
}

impl SubAssign for Poly {
    fn sub_assign(&mut self, rhs: Poly) {
        *self -= &rhs;
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(mut self, rhs: Poly) -> Poly {
                self.$assign(&rhs);
                self
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(mut self, rhs: &Poly) -> Poly {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Mul<&Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        &self * rhs
    }
}

impl Mul<Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> std::iter::Sum<&'a Poly> for Poly {
    fn sum<I: Iterator<Item = &'a Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form: terms by descending total degree, then variable order;
/// coefficients printed as `p/q`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn c() -> Poly {
        Poly::var(Var::C)
    }

    #[test]
    fn product_of_linear_factors() {
        let p = (c() + Poly::int(3)) * (c() - Poly::int(1));
        let expected = c().pow(2) + c().scale(&rat(2, 1)) - Poly::int(3);
        assert_eq!(p, expected);
        assert!((&p - &expected).is_zero());
    }

    #[test]
    fn self_difference_is_zero() {
        let p = c().pow(3) - Poly::var(Var::Alpha) * Poly::frac(2, 7);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn phi_sectional_sanity_sum() {
        // (c+3)/4 + (c-1)/4 + (c-1)/2 = c
        let q = Poly::frac(1, 4);
        let s = (c() + Poly::int(3)) * &q
            + (c() - Poly::int(1)) * &q
            + (c() - Poly::int(1)) * Poly::frac(1, 2);
        assert_eq!(s, c());
    }

    #[test]
    fn eval_reports_missing_symbol() {
        let p = c() * Poly::var(Var::Alpha);
        let mut b = BTreeMap::new();
        b.insert(Var::C, rat(1, 1));
        match p.eval(&b) {
            Err(AlgError::UnboundVariable(name)) => assert_eq!(name, "alpha"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn eval_root() {
        let p = c().pow(2) + c().scale(&rat(2, 1)) - Poly::int(3);
        let b = BTreeMap::from([(Var::C, rat(1, 1))]);
        assert_eq!(p.eval(&b).unwrap(), rat(0, 1));
    }

    #[test]
    fn canonical_text() {
        let p = c().pow(2).scale(&rat(3, 4)) - c() + Poly::frac(-1, 2) + Poly::var(Var::Alpha);
        assert_eq!(p.to_string(), "3/4*c^2 - c + alpha - 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn coefficient_extraction_and_substitution() {
        let p = c() * Poly::var(Var::Alpha).pow(2) + Poly::var(Var::Alpha) - Poly::int(5);
        assert_eq!(p.coeff(Var::Alpha, 2), c());
        assert_eq!(p.coeff(Var::Alpha, 0), Poly::int(-5));
        let s = p.substitute(Var::Alpha, &Poly::int(2));
        assert_eq!(s, c().scale(&rat(4, 1)) - Poly::int(3));
    }

    #[test]
    fn derivative_of_power() {
        let x = Poly::var(Var::X(0));
        let p = x.pow(3).scale(&rat(2, 1)) + Poly::var(Var::X(1)) * &x;
        assert_eq!(
            p.derivative(Var::X(0)),
            x.pow(2).scale(&rat(6, 1)) + Poly::var(Var::X(1))
        );
    }
}
