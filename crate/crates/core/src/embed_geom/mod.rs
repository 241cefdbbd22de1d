//! Floating-point geometry of the round `S^{2n+1} ⊂ R^{2n+2}` driven by vector
//! fields with exact polynomial components.

mod sasakian;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::exactalg::{Poly, Var};

pub use sasakian::{
    curvature_residual, identity_residuals, riemann_from_connection, riemann_point, sasakian_identity_report,
    CurvatureRoute, SasakianStructure, IDENTITIES,
};

/// Tangency tolerance for pointwise checks of field values.
pub const TANGENCY_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum EmbedError {
    #[error("point has zero norm")]
    ZeroPoint,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("field is not tangent to the sphere (residual {0:e})")]
    NotTangent(f64),
    #[error("field flagged tangent is not tangent identically")]
    TangencyFlag,
}

/// A point of the unit sphere in ambient coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct SpherePoint {
    x: Vec<f64>,
}

impl SpherePoint {
    /// Normalizes `x` onto the unit sphere.
    pub fn new(x: Vec<f64>) -> Result<Self, EmbedError> {
        let r = norm(&x);
        if r == 0.0 || !r.is_finite() {
            return Err(EmbedError::ZeroPoint);
        }
        Ok(SpherePoint { x: x.into_iter().map(|v| v / r).collect() })
    }

    pub fn coords(&self) -> &[f64] {
        &self.x
    }

    pub fn ambient_dim(&self) -> usize {
        self.x.len()
    }

    /// Orthogonal projection of an ambient vector onto `T_x S`.
    pub fn project(&self, v: &[f64]) -> Vec<f64> {
        let s = dot(v, &self.x);
        v.iter().zip(&self.x).map(|(a, b)| a - s * b).collect()
    }

    pub fn is_tangent(&self, v: &[f64]) -> bool {
        dot(v, &self.x).abs() < TANGENCY_TOL * norm(v).max(1.0)
    }
}

pub fn dot(u: &[f64], v: &[f64]) -> f64 {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

pub fn norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

pub fn sub(u: &[f64], v: &[f64]) -> Vec<f64> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn add(u: &[f64], v: &[f64]) -> Vec<f64> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn scale(v: &[f64], s: f64) -> Vec<f64> {
    v.iter().map(|a| a * s).collect()
}

/// Ambient coordinate `x_k` as a polynomial.
pub fn coord(k: usize) -> Poly {
    Poly::var(Var::X(k as u8))
}

/// Vector field on `R^N` with polynomial components in the coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    comps: Vec<Poly>,
    tangent: bool,
}

impl PolyVectorField {
    /// With `tangent = true` the identity `<F(x), x> ≡ 0` is verified exactly.
    pub fn new(comps: Vec<Poly>, tangent: bool) -> Result<Self, EmbedError> {
        let f = PolyVectorField { comps, tangent: false };
        if tangent && !f.radial_component().is_zero() {
            return Err(EmbedError::TangencyFlag);
        }
        Ok(PolyVectorField { tangent, ..f })
    }

    /// Builds `F(x) = M x` from an integer matrix.
    pub fn linear(matrix: &[Vec<i64>]) -> Self {
        let comps: Vec<Poly> = matrix
            .iter()
            .map(|row| row.iter().enumerate().map(|(k, &m)| coord(k) * Poly::int(m)).sum())
            .collect();
        let f = PolyVectorField { comps, tangent: false };
        let tangent = f.radial_component().is_zero();
        PolyVectorField { tangent, ..f }
    }

    /// Constant ambient vector `v` projected onto the tangent spaces:
    /// `v - <v,x> x`. It is tangent on the unit sphere but not identically.
    pub fn projected_constant(v: &[f64]) -> Self {
        // coefficients are stored exactly as the binary expansions of the floats
        let vp: Vec<Poly> = v
            .iter()
            .map(|&a| Poly::constant(crate::exactalg::Rational::from_float(a).unwrap_or_else(num_traits::Zero::zero)))
            .collect();
        let radial: Poly = vp.iter().enumerate().map(|(k, a)| a * coord(k)).sum();
        let comps = vp.iter().enumerate().map(|(k, a)| a - &(&radial * coord(k))).collect();
        PolyVectorField { comps, tangent: false }
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn is_flagged_tangent(&self) -> bool {
        self.tangent
    }

    /// `<F(x), x>` as a polynomial.
    pub fn radial_component(&self) -> Poly {
        self.comps.iter().enumerate().map(|(k, c)| c * coord(k)).sum()
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        let val = |v: Var| match v {
            Var::X(k) => x[k as usize],
            _ => f64::NAN,
        };
        self.comps.iter().map(|c| c.eval_f64(val)).collect()
    }

    pub fn at(&self, p: &SpherePoint) -> Vec<f64> {
        self.eval(p.coords())
    }

    /// Exact Jacobian `∂F_i/∂x_k`.
    pub fn jacobian(&self) -> Vec<Vec<Poly>> {
        let n = self.dim();
        self.comps
            .iter()
            .map(|c| (0..n).map(|k| c.derivative(Var::X(k as u8))).collect())
            .collect()
    }

    /// Ambient directional derivative `(DG) F` as a field.
    pub fn directional(&self, g: &PolyVectorField) -> PolyVectorField {
        let comps = g
            .jacobian()
            .iter()
            .map(|row| row.iter().zip(&self.comps).map(|(d, f)| d * f).sum())
            .collect();
        PolyVectorField { comps, tangent: false }
    }

    /// Ambient derivative `(DG)(x) v` along a vector.
    pub fn derivative_along(&self, x: &[f64], v: &[f64]) -> Vec<f64> {
        let val = |var: Var| match var {
            Var::X(k) => x[k as usize],
            _ => f64::NAN,
        };
        self.jacobian()
            .iter()
            .map(|row| row.iter().zip(v).map(|(d, vk)| d.eval_f64(val) * vk).sum())
            .collect()
    }

    pub fn scaled(&self, s: i64) -> PolyVectorField {
        PolyVectorField {
            comps: self.comps.iter().map(|c| c * Poly::int(s)).collect(),
            tangent: self.tangent,
        }
    }

    pub fn plus(&self, other: &PolyVectorField) -> PolyVectorField {
        PolyVectorField {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
            tangent: self.tangent && other.tangent,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    /// Checks that the field value at `p` is tangent.
    pub fn check_tangent_at(&self, p: &SpherePoint) -> Result<Vec<f64>, EmbedError> {
        let v = self.at(p);
        let r = dot(&v, p.coords());
        if r.abs() > TANGENCY_TOL * norm(&v).max(1.0) {
            return Err(EmbedError::NotTangent(r));
        }
        Ok(v)
    }
}

/// Exact bracket `[F,G] = (DG)F - (DF)G`.
pub fn lie_bracket(f: &PolyVectorField, g: &PolyVectorField) -> PolyVectorField {
    let comps: Vec<Poly> = f
        .directional(g)
        .comps
        .iter()
        .zip(&g.directional(f).comps)
        .map(|(a, b)| a - b)
        .collect();
    let b = PolyVectorField { comps, tangent: false };
    let tangent = b.radial_component().is_zero();
    PolyVectorField { tangent, ..b }
}

/// `∇_F G = (DG)F - <(DG)F, x> x` as a polynomial field (tangent on the sphere).
pub fn levi_civita_field(f: &PolyVectorField, g: &PolyVectorField) -> PolyVectorField {
    let d = f.directional(g);
    let radial = d.radial_component();
    let comps = d
        .comps
        .iter()
        .enumerate()
        .map(|(k, c)| c - &(&radial * coord(k)))
        .collect();
    PolyVectorField { comps, tangent: false }
}

/// `(∇_v G)(x)` for a tangent vector `v` at `p`.
pub fn covariant_derivative(
    p: &SpherePoint,
    v: &[f64],
    g: &PolyVectorField,
) -> Result<Vec<f64>, EmbedError> {
    if !p.is_tangent(v) {
        return Err(EmbedError::NotTangent(dot(v, p.coords())));
    }
    g.check_tangent_at(p)?;
    Ok(p.project(&g.derivative_along(p.coords(), v)))
}

/// `(∇_F G)(x)`; both fields must be tangent at `x`.
pub fn levi_civita(
    f: &PolyVectorField,
    g: &PolyVectorField,
    p: &SpherePoint,
) -> Result<Vec<f64>, EmbedError> {
    let v = f.check_tangent_at(p)?;
    covariant_derivative(p, &v, g)
}

/// Deterministic sample source: points on the sphere and tangent vectors from
/// projected Gaussian ambient vectors.
pub struct SphereSampler {
    rng: ChaCha8Rng,
    ambient: usize,
}

impl SphereSampler {
    /// Independent stream `stream` of the generator seeded by `seed`.
    pub fn new(seed: u64, stream: u64, ambient: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        SphereSampler { rng, ambient }
    }

    pub fn gaussian(&mut self) -> Vec<f64> {
        (0..self.ambient).map(|_| self.rng.sample(StandardNormal)).collect()
    }

    pub fn point(&mut self) -> SpherePoint {
        loop {
            if let Ok(p) = SpherePoint::new(self.gaussian()) {
                return p;
            }
        }
    }

    pub fn tangent(&mut self, p: &SpherePoint) -> Vec<f64> {
        p.project(&self.gaussian())
    }

    pub fn unit_tangent(&mut self, p: &SpherePoint) -> Vec<f64> {
        loop {
            let v = self.tangent(p);
            let r = norm(&v);
            if r > 1e-6 {
                return scale(&v, 1.0 / r);
            }
        }
    }
}

/// Left multiplication by `i` on each complex pair of coordinates:
/// `(x_{2k}, x_{2k+1}) ↦ (-x_{2k+1}, x_{2k})`.
pub fn complex_structure(ambient: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; ambient]; ambient];
    for k in 0..ambient / 2 {
        m[2 * k][2 * k + 1] = -1;
        m[2 * k + 1][2 * k] = 1;
    }
    m
}

/// The fields `(ξ, W, Y)` on `S³`:
/// `ξ = (x2,-x1,x4,-x3)`, `W = (x3,-x4,-x1,x2)`, `Y = (x4,x3,-x2,-x1)`.
pub fn s3_frame_fields() -> (PolyVectorField, PolyVectorField, PolyVectorField) {
    let xi = PolyVectorField::linear(&[
        vec![0, 1, 0, 0],
        vec![-1, 0, 0, 0],
        vec![0, 0, 0, 1],
        vec![0, 0, -1, 0],
    ]);
    let w = PolyVectorField::linear(&[
        vec![0, 0, 1, 0],
        vec![0, 0, 0, -1],
        vec![-1, 0, 0, 0],
        vec![0, 1, 0, 0],
    ]);
    let y = PolyVectorField::linear(&[
        vec![0, 0, 0, 1],
        vec![0, 0, 1, 0],
        vec![0, -1, 0, 0],
        vec![-1, 0, 0, 0],
    ]);
    (xi, w, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_fields_are_tangent() {
        let (xi, w, y) = s3_frame_fields();
        for f in [&xi, &w, &y] {
            assert!(f.is_flagged_tangent());
            assert!(f.radial_component().is_zero());
        }
    }

    #[test]
    fn brackets_of_frame_fields() {
        let (xi, w, y) = s3_frame_fields();
        assert_eq!(lie_bracket(&w, &xi), y.scaled(-2));
        assert_eq!(lie_bracket(&y, &xi), w.scaled(2));
        assert_eq!(lie_bracket(&w, &y), xi.scaled(2));
        assert!(lie_bracket(&w, &w).is_zero());
    }

    #[test]
    fn connection_values() {
        let (xi, w, y) = s3_frame_fields();
        let mut s = SphereSampler::new(11, 0, 4);
        for _ in 0..50 {
            let p = s.point();
            let nxx = levi_civita(&xi, &xi, &p).unwrap();
            assert!(norm(&nxx) < 1e-12);
            let nwy = levi_civita(&w, &y, &p).unwrap();
            assert!(norm(&sub(&nwy, &xi.at(&p))) < 1e-12);
        }
    }

    #[test]
    fn non_tangent_field_rejected() {
        let radial = PolyVectorField::linear(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ]);
        assert!(!radial.is_flagged_tangent());
        let (xi, _, _) = s3_frame_fields();
        let p = SpherePoint::new(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!(matches!(levi_civita(&radial, &xi, &p), Err(EmbedError::NotTangent(_))));
        assert_eq!(
            PolyVectorField::new(radial.components().to_vec(), true),
            Err(EmbedError::TangencyFlag)
        );
    }

    #[test]
    fn sphere_point_normalizes() {
        let p = SpherePoint::new(vec![3.0, 4.0]).unwrap();
        assert!((norm(p.coords()) - 1.0).abs() < 1e-15);
        assert_eq!(SpherePoint::new(vec![0.0, 0.0]), Err(EmbedError::ZeroPoint));
    }
}
