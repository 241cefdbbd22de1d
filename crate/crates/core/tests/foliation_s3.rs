use legfol::embed_geom::{s3_frame_fields, SasakianStructure, SphereSampler};
use legfol::exactalg::{rat, Poly, Rational};
use legfol::foliation::{
    c24_identity_residual, homogeneous_integral, s3_legendre_example, s3_reference_values, s3_swapped_example,
    spread, Scalar, VOL_S3,
};

const SEED: u64 = 20;
const SAMPLES: u64 = 100;
const TOL: f64 = 1e-8;

fn exact(v: i64) -> Rational {
    rat(v, 1)
}

#[test]
fn frame_backend_values_are_exact() {
    let ex = s3_legendre_example();
    let jet = ex.frame.jet();
    for (name, got, want) in s3_reference_values(jet) {
        assert_eq!(got, exact(want), "{name}");
    }
    assert_eq!(jet.r_nabla_components(), ex.frame.bott_curvature().to_vec());
    assert_eq!(c24_identity_residual(jet), 0.0);
    let rho = jet.rho_nabla();
    assert_eq!(rho, vec![vec![exact(4), exact(0)], vec![exact(0), exact(4)]]);
    assert!(jet.oneill_t(0, 0).iter().chain(&jet.oneill_t(0, 1)).all(|v| *v == exact(0)));
}

#[test]
fn embedded_backend_matches_at_random_points() {
    let ex = s3_legendre_example();
    let frame_vals: Vec<f64> = s3_reference_values(ex.frame.jet()).iter().map(|(_, v, _)| v.to_f64()).collect();
    let mut samples: Vec<Vec<f64>> = Vec::new();
    for k in 0..SAMPLES {
        let p = SphereSampler::new(SEED, k, 4).point();
        let jet = ex.embedded.jet_at(&p).unwrap();
        let vals = s3_reference_values(&jet);
        for ((name, got, want), fv) in vals.iter().zip(&frame_vals) {
            assert!((got - *want as f64).abs() < TOL, "{name}: {got}");
            assert!((got - fv).abs() < 1e-9, "{name}: backends differ");
        }
        let bott = ex.embedded.bott_curvature_at(&p).unwrap();
        for (a, b) in bott.iter().zip(jet.r_nabla_components()) {
            assert!((a - b).abs() < TOL);
        }
        assert!(c24_identity_residual(&jet) < TOL);
        samples.push(vals.iter().map(|(_, v, _)| *v).collect());
    }
    let norm_a: Vec<f64> = samples.iter().map(|s| s[0]).collect();
    assert!(spread(&norm_a) < 1e-8);
    let int_a = homogeneous_integral(&norm_a).unwrap();
    assert!((int_a - 2.0 * VOL_S3).abs() < 1e-8);
}

#[test]
fn oneill_tensors_on_the_example() {
    let ex = s3_legendre_example();
    let jet = ex.frame.jet();
    // frame order (W, Y, ξ); with ∇_X ξ = -φX one gets A_ξ(φW) = -W
    assert_eq!(jet.oneill_a(2, 1), vec![exact(-1), exact(0), exact(0)]);
    for x in [1, 2] {
        assert!(jet.oneill_a(x, x).iter().all(|v| *v == exact(0)));
        for y in [1, 2] {
            let sum: Vec<Rational> = jet.oneill_a(x, y).iter().zip(jet.oneill_a(y, x)).map(|(a, b)| a + b).collect();
            assert!(sum.iter().all(|v| *v == exact(0)));
        }
    }
    let (a, t) = jet.pairings();
    assert_eq!(a[0], vec![exact(1), exact(0)]);
    assert!(t.iter().flatten().all(|v| *v == exact(0)));
    let y = |c: i64| vec![exact(c), exact(0)];
    let xi = vec![exact(0), exact(1)];
    assert_eq!(jet.curvature_sum_residual(&y(1), &y(1)), exact(0));
    assert_eq!(jet.curvature_sum_residual(&y(1), &xi), exact(0));
    assert_eq!(jet.curvature_sum_residual(&y(0), &xi), exact(0));
}

#[test]
fn embedded_tensor_symmetries() {
    let ex = s3_legendre_example();
    for k in 0..SAMPLES {
        let p = SphereSampler::new(SEED + 1, k, 4).point();
        let jet = ex.embedded.jet_at(&p).unwrap();
        for x in 1..3 {
            for y in 1..3 {
                let (axy, ayx) = (jet.oneill_a(x, y), jet.oneill_a(y, x));
                assert!(axy.iter().zip(&ayx).all(|(a, b)| (a + b).abs() < 1e-12));
                assert!(axy[1].abs() < 1e-12 && axy[2].abs() < 1e-12, "A_XY vertical");
            }
        }
        assert!(jet.mean_curvature().iter().all(|v| v.abs() < 1e-10));
        assert!((jet.a_pairing(1, 1) - 1.0).abs() < 1e-10);
        assert!(jet.a_pairing(1, 2).abs() < 1e-10);
        assert!(jet.curvature_sum_residual(&[1.0, 0.0], &[1.0, 0.0]).abs() < 1e-9);
        assert!(jet.curvature_sum_residual(&[1.0, 0.0], &[0.0, 1.0]).abs() < 1e-9);
    }
}

#[test]
fn legendre_condition_and_phi() {
    let (xi, w, y) = s3_frame_fields();
    let pairing: Poly = w.components().iter().zip(xi.components()).map(|(a, b)| a * b).sum();
    assert!(pairing.is_zero());
    let s = SasakianStructure::standard(1);
    let mut rng = SphereSampler::new(SEED, 999, 4);
    for _ in 0..SAMPLES {
        let p = rng.point();
        assert!(s.eta(&p, &w.at(&p)).abs() < 1e-12);
        let d: f64 = s.phi(&p, &w.at(&p)).iter().zip(y.at(&p)).map(|(a, b)| (a - b).abs()).sum();
        assert!(d < 1e-12);
    }
    assert_eq!(s3_legendre_example().frame.jet().n(), 1);
    assert_eq!(s3_legendre_example().frame.jet().dim(), 3);
}

#[test]
fn swapped_foliation_has_the_same_invariants() {
    let ex = s3_swapped_example();
    let p = SphereSampler::new(SEED, 0, 4).point();
    let jet = ex.embedded.jet_at(&p).unwrap();
    for (name, got, want) in s3_reference_values(&jet) {
        assert!((got - want as f64).abs() < TOL, "{name}");
    }
}
