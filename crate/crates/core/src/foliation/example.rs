use std::f64::consts::PI;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::embed_geom::{s3_frame_fields, SasakianStructure};
use crate::frame_engine::FrameAlgebra;

use super::{c24_contract, matrix_norm_sq, norm_sq, EmbeddedSplit, FrameJet, FrameSplit, Scalar};

/// `Vol(S³) = 2π²`.
pub const VOL_S3: f64 = 2.0 * PI * PI;

/// Largest spread of a sampled scalar accepted as constant.
pub const CONSTANCY_TOL: f64 = 1e-8;

/// The foliation of `S³` by `W`-curves, on both backends.
#[derive(Clone, Debug)]
pub struct S3Example {
    pub frame: FrameSplit,
    pub embedded: EmbeddedSplit,
}

fn build(leaf_is_w: bool) -> S3Example {
    let (_, w, y) = s3_frame_fields();
    let (leaf, horizontal) = if leaf_is_w { (w, y) } else { (y, w.scaled(-1)) };
    let structure = SasakianStructure::standard(1);
    let embedded = EmbeddedSplit::new(&structure, vec![leaf], vec![horizontal])
        .expect("example fields form an adapted frame");
    // (Y, -W, ξ) has the same brackets as (W, Y, ξ)
    let frame = FrameSplit::from_algebra(&FrameAlgebra::su2_round(), 1).expect("round frame is adapted");
    S3Example { frame, embedded }
}

/// Leaves tangent to `W`, horizontal distribution spanned by `Y = φW` and `ξ`.
pub fn s3_legendre_example() -> S3Example {
    build(true)
}

/// The second foliation, by `Y`-curves with `φY = -W`.
pub fn s3_swapped_example() -> S3Example {
    build(false)
}

/// Reference scalars of the `S³` example: `(name, computed, expected)`.
pub fn s3_reference_values<S: Scalar>(jet: &FrameJet<S>) -> Vec<(&'static str, S, i64)> {
    let h = jet.horizontal_dim();
    let v = jet.v_tensor();
    let c24_sq = matrix_norm_sq(&c24_contract(&v, h));
    let v_sq = norm_sq(&v);
    let mean = jet.mean_curvature();
    vec![
        ("norm-a", jet.a_norm_sq(), 2),
        ("norm-t", jet.t_norm_sq(), 0),
        ("norm-h", norm_sq(&mean), 0),
        ("mixed-scalar", jet.mixed_scalar(), 2),
        ("tau-nabla", jet.tau_nabla(), 8),
        ("tau-nabla-sectional", jet.tau_nabla_sectional(), 8),
        ("norm-v", v_sq.clone(), 36),
        ("norm-c24v", c24_sq.clone(), 18),
        ("v-combination", S::from_i64(6) * c24_sq - v_sq, 72),
        // entry (f_0, f_1, f_0, f_1)
        ("r-nabla-sectional", jet.r_nabla_components()[h * h + 1].clone(), 4),
        ("ranjan", jet.ranjan_residual(), 0),
        ("rho-nabla-trace", jet.rho_nabla_trace_residual(), 0),
        ("a-t-relation", jet.a_norm_sq() - jet.t_norm_sq() - S::from_i64(2), 0),
        ("rho-nabla-xi", jet.rho_nabla()[h - 1][h - 1].clone(), 4),
    ]
}

/// Max minus min of sampled values.
pub fn spread(values: &[f64]) -> f64 {
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    hi - lo
}

/// `∫ f = f · Vol(S³)` for a sampled scalar that passes the constancy check.
pub fn homogeneous_integral(values: &[f64]) -> Option<f64> {
    if values.is_empty() || spread(values) >= CONSTANCY_TOL {
        return None;
    }
    Some(values.iter().sum::<f64>() / values.len() as f64 * VOL_S3)
}

/// Hit-or-miss estimate of `Vol(S³) = 4 Vol(B⁴)` from the unit cube `[-1,1]⁴`.
pub fn estimate_sphere_volume(samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hits = (0..samples)
        .filter(|_| (0..4).map(|_| rng.random_range(-1.0..1.0_f64).powi(2)).sum::<f64>() <= 1.0)
        .count();
    4.0 * 16.0 * hits as f64 / samples as f64
}
