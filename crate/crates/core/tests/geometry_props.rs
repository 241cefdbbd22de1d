use std::collections::BTreeMap;
use std::sync::OnceLock;

use legfol::embed_geom::{
    levi_civita, lie_bracket, s3_frame_fields, sub, PolyVectorField, SasakianStructure, SphereSampler,
};
use legfol::exactalg::{rat, Poly, RatFn, Rational, Var};
use legfol::foliation::{c24_identity_residual, s3_legendre_example};
use legfol::frame_engine::{
    curvature_from_frame, koszul_connection, phi_sectional_curvature, ConnectionCoeffs, CurvTensor4, FrameAlgebra,
};
use proptest::prelude::*;

struct Berger {
    alg: FrameAlgebra,
    conn: ConnectionCoeffs,
    curv: CurvTensor4,
    phi_sectional: RatFn,
}

fn berger() -> &'static Berger {
    static CELL: OnceLock<Berger> = OnceLock::new();
    CELL.get_or_init(|| {
        let alg = FrameAlgebra::su2_round().d_homothetic_deform(&Poly::var(Var::A)).unwrap();
        let conn = koszul_connection(&alg).unwrap();
        let curv = curvature_from_frame(&alg, &conn);
        let w = [rat(1, 1), rat(0, 1), rat(0, 1)];
        let phi_sectional = phi_sectional_curvature(&alg, &curv, &w).unwrap();
        Berger { alg, conn, curv, phi_sectional }
    })
}

fn at_a(a: &Rational) -> BTreeMap<Var, Rational> {
    BTreeMap::from([(Var::A, a.clone())])
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=9).prop_map(|(p, q)| rat(p, q))
}

fn int_matrix(m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, m), m)
}

fn fields_equal(f: &PolyVectorField, g: &PolyVectorField) -> bool {
    f.components().iter().zip(g.components()).all(|(a, b)| (a - b).is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn berger_phi_sectional_matches_closed_form(a in positive_rational()) {
        let b = berger();
        let four = rat(4, 1);
        let expected = (&four - rat(3, 1) * &a) / &a;
        prop_assert_eq!(b.phi_sectional.eval(&at_a(&a)).unwrap(), expected);
    }

    #[test]
    fn berger_metric_is_positive_definite(a in positive_rational()) {
        let b = berger();
        let g: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| b.alg.metric(i, j).eval(&at_a(&a)).unwrap()).collect())
            .collect();
        // leading principal minors
        let m1 = g[0][0].clone();
        let m2 = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0];
        let m3 = &g[0][0] * (&g[1][1] * &g[2][2] - &g[1][2] * &g[2][1])
            - &g[0][1] * (&g[1][0] * &g[2][2] - &g[1][2] * &g[2][0])
            + &g[0][2] * (&g[1][0] * &g[2][1] - &g[1][1] * &g[2][0]);
        let zero = rat(0, 1);
        prop_assert!(m1 > zero && m2 > zero && m3 > zero);
    }

    #[test]
    fn bracket_is_antisymmetric_and_bilinear(m1 in int_matrix(4), m2 in int_matrix(4), m3 in int_matrix(4), s in -3i64..=3) {
        let (f, g, h) = (PolyVectorField::linear(&m1), PolyVectorField::linear(&m2), PolyVectorField::linear(&m3));
        prop_assert!(fields_equal(&lie_bracket(&f, &g), &lie_bracket(&g, &f).scaled(-1)));
        prop_assert!(lie_bracket(&f, &f).is_zero());
        let lhs = lie_bracket(&f.scaled(s).plus(&g), &h);
        let rhs = lie_bracket(&f, &h).scaled(s).plus(&lie_bracket(&g, &h));
        prop_assert!(fields_equal(&lhs, &rhs));
    }

    #[test]
    fn levi_civita_is_torsion_free(seed in any::<u64>(), n in 1usize..=3) {
        let s = SasakianStructure::standard(n);
        let xi = s.xi_field().clone();
        let other = s.phi_field(&PolyVectorField::linear(&legfol::embed_geom::complex_structure(2 * n + 2)));
        let p = SphereSampler::new(seed, 0, 2 * n + 2).point();
        let torsion = sub(
            &sub(&levi_civita(&xi, &other, &p).unwrap(), &levi_civita(&other, &xi, &p).unwrap()),
            &lie_bracket(&xi, &other).at(&p),
        );
        prop_assert!(torsion.iter().all(|t| t.abs() < 1e-10), "{:?}", torsion);
    }

    #[test]
    fn sampling_is_reproducible(seed in any::<u64>(), stream in 0u64..1000) {
        let a = SphereSampler::new(seed, stream, 6).point();
        let b = SphereSampler::new(seed, stream, 6).point();
        prop_assert_eq!(a.coords(), b.coords());
    }

    #[test]
    fn oneill_invariants_hold_pointwise(seed in any::<u64>()) {
        let ex = s3_legendre_example();
        let p = SphereSampler::new(seed, 0, 4).point();
        let jet = ex.embedded.jet_at(&p).unwrap();
        for x in 1..3 {
            for y in 1..3 {
                let (axy, ayx) = (jet.oneill_a(x, y), jet.oneill_a(y, x));
                prop_assert!(axy.iter().zip(&ayx).all(|(u, v)| (u + v).abs() < 1e-12));
            }
        }
        // A_{f_0} f_1 has no horizontal part; T_{e_1} e_1 vanishes for geodesic leaves
        prop_assert!(jet.oneill_a(1, 2)[1..].iter().all(|v| v.abs() < 1e-12));
        prop_assert!(jet.oneill_t(0, 0).iter().all(|v| v.abs() < 1e-12));
        prop_assert!(jet.a_norm_sq() >= 0.0 && jet.t_norm_sq() >= 0.0);
        prop_assert!(c24_identity_residual(&jet) < 1e-10);
    }
}

#[test]
fn berger_data_is_exactly_consistent() {
    let b = berger();
    assert!(b.conn.torsion_residuals(&b.alg).is_empty());
    assert!(b.conn.metric_residuals(&b.alg).is_empty());
    assert!(b.curv.symmetry_violations().is_empty());
    assert!(b.curv.bianchi_violations().is_empty());
}

#[test]
fn deformation_specializes_to_round_sphere() {
    let b = berger();
    let round = FrameAlgebra::su2_round();
    let round_conn = koszul_connection(&round).unwrap();
    let round_curv = curvature_from_frame(&round, &round_conn);
    let one = at_a(&rat(1, 1));
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(b.alg.metric(i, j).eval(&one).unwrap(), round.metric(i, j).eval(&one).unwrap());
            for k in 0..3 {
                let deformed = b.conn.get(i, j, k).eval(&one).unwrap();
                assert_eq!(deformed, round_conn.get(i, j, k).constant_value().unwrap());
                for l in 0..3 {
                    let deformed = b.curv.get(i, j, k, l).eval(&one).unwrap();
                    assert_eq!(deformed, round_curv.get(i, j, k, l).constant_value().unwrap());
                }
            }
        }
    }
}

#[test]
fn example_fields_are_tangent() {
    let (xi, w, y) = s3_frame_fields();
    for f in [&xi, &w, &y] {
        assert!(f.radial_component().is_zero());
    }
    for n in 1..=3 {
        let s = SasakianStructure::standard(n);
        assert!(s.xi_field().radial_component().is_zero());
    }
}
