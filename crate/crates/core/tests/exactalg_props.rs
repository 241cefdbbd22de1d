use std::collections::BTreeMap;

use legfol::exactalg::{rat, Monomial, Poly, RatFn, Rational, Var};
use num_traits::Zero;
use proptest::prelude::*;

const VARS: [Var; 4] = [Var::C, Var::A, Var::Vol, Var::Sigma(1)];

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(p, q)| rat(p, q))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=3, VARS.len())
        .prop_map(|exps| Monomial::from_powers(VARS.iter().copied().zip(exps).filter(|(_, e)| *e > 0)))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(), rational()), 0..6).prop_map(Poly::from_terms)
}

fn bindings() -> impl Strategy<Value = BTreeMap<Var, Rational>> {
    prop::collection::vec(rational(), VARS.len()).prop_map(|vals| VARS.iter().copied().zip(vals).collect())
}

proptest! {
    #[test]
    fn addition_is_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!((&p + &q) + &r, &p + (&q + &r));
    }

    #[test]
    fn multiplication_commutes(p in poly(), q in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn multiplication_distributes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &(&q + &r), &p * &q + &p * &r);
    }

    #[test]
    fn subtraction_cancels(p in poly()) {
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(), q in poly(), b in bindings()) {
        let (ep, eq) = (p.eval(&b).unwrap(), q.eval(&b).unwrap());
        prop_assert_eq!((&p * &q).eval(&b).unwrap(), &ep * &eq);
        prop_assert_eq!((&p + &q).eval(&b).unwrap(), ep + eq);
    }

    #[test]
    fn normalization_is_idempotent(p in poly()) {
        let again = Poly::from_terms(p.terms().map(|(m, c)| (m.clone(), c.clone())));
        prop_assert_eq!(&again, &p);
        prop_assert_eq!(again.to_string(), p.to_string());
    }

    #[test]
    fn substitution_then_evaluation(p in poly(), q in poly(), b in bindings()) {
        let substituted = p.substitute(Var::C, &q);
        let mut inner = b.clone();
        inner.insert(Var::C, q.eval(&b).unwrap());
        prop_assert_eq!(substituted.eval(&b).unwrap(), p.eval(&inner).unwrap());
    }

    #[test]
    fn partial_evaluation_completes_to_full(p in poly(), b in bindings()) {
        let mut first = BTreeMap::new();
        first.insert(Var::C, b[&Var::C].clone());
        prop_assert_eq!(p.partial_eval(&first).eval(&b).unwrap(), p.eval(&b).unwrap());
    }

    #[test]
    fn quotient_arithmetic_matches_rationals(p in poly(), q in poly(), b in bindings()) {
        prop_assume!(!q.eval(&b).unwrap().is_zero());
        let f = RatFn::new(p.clone(), q.clone()).unwrap();
        let g = RatFn::from(q.clone());
        let expected = p.eval(&b).unwrap() / q.eval(&b).unwrap();
        prop_assert_eq!(f.eval(&b).unwrap(), expected.clone());
        prop_assert_eq!((&f * &g).eval(&b).unwrap(), p.eval(&b).unwrap());
        prop_assert_eq!((&f + &g).eval(&b).unwrap(), expected + q.eval(&b).unwrap());
    }
}

#[test]
fn canonical_text_orders_by_degree() {
    let c = Poly::var(Var::C);
    let p = c.pow(2) * Poly::frac(3, 4) - c + Poly::int(2);
    assert_eq!(p.to_string(), "3/4*c^2 - c + 2");
}
