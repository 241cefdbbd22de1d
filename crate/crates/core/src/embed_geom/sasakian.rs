use rayon::prelude::*;

use crate::exactalg::Poly;
use crate::verify::CheckResult;

use super::{
    add, complex_structure, coord, covariant_derivative, dot, levi_civita, levi_civita_field,
    lie_bracket, norm, scale, sub, EmbedError, PolyVectorField, SpherePoint, SphereSampler,
};

/// Standard Sasakian structure of `S^{2n+1}`: `ξ = -I N`, `η = <·, ξ>`,
/// `φ v = I v - <I v, x> x`, with `I` the complex structure on pairs of coordinates.
#[derive(Clone, Debug)]
pub struct SasakianStructure {
    n: usize,
    complex: Vec<Vec<i64>>,
    xi: PolyVectorField,
}

impl SasakianStructure {
    pub fn standard(n: usize) -> Self {
        let ambient = 2 * n + 2;
        let complex = complex_structure(ambient);
        let minus_i: Vec<Vec<i64>> = complex.iter().map(|r| r.iter().map(|v| -v).collect()).collect();
        let xi = PolyVectorField::linear(&minus_i);
        SasakianStructure { n, complex, xi }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient_dim(&self) -> usize {
        2 * self.n + 2
    }

    pub fn xi_field(&self) -> &PolyVectorField {
        &self.xi
    }

    pub fn xi(&self, p: &SpherePoint) -> Vec<f64> {
        self.xi.at(p)
    }

    pub fn eta(&self, p: &SpherePoint, v: &[f64]) -> f64 {
        dot(v, &self.xi(p))
    }

    fn apply_complex(&self, v: &[f64]) -> Vec<f64> {
        self.complex
            .iter()
            .map(|row| row.iter().zip(v).map(|(&m, x)| m as f64 * x).sum())
            .collect()
    }

    pub fn phi(&self, p: &SpherePoint, v: &[f64]) -> Vec<f64> {
        p.project(&self.apply_complex(v))
    }

    /// `φ G` as a polynomial field, using `φ_ij(x) = I_ij - x_i Σ_k x_k I_kj`.
    pub fn phi_field(&self, g: &PolyVectorField) -> PolyVectorField {
        let m = self.ambient_dim();
        let ig: Vec<Poly> = (0..m)
            .map(|i| {
                (0..m)
                    .filter(|&j| self.complex[i][j] != 0)
                    .map(|j| &g.components()[j] * Poly::int(self.complex[i][j]))
                    .sum()
            })
            .collect();
        let radial: Poly = ig.iter().enumerate().map(|(k, c)| c * coord(k)).sum();
        let comps = ig
            .iter()
            .enumerate()
            .map(|(i, c)| c - &(&radial * coord(i)))
            .collect();
        PolyVectorField::new(comps, false).expect("untagged field")
    }

    /// `R(X,Y)Z` on a space form of φ-sectional curvature `c`, from the structure
    /// tensors at `p`.
    pub fn space_form_curvature(
        &self,
        p: &SpherePoint,
        c: f64,
        x: &[f64],
        y: &[f64],
        z: &[f64],
    ) -> Vec<f64> {
        let kappa = (c + 3.0) / 4.0;
        let mu = (c - 1.0) / 4.0;
        let xi = self.xi(p);
        let (px, py, pz) = (self.phi(p, x), self.phi(p, y), self.phi(p, z));
        let (ex, ey, ez) = (self.eta(p, x), self.eta(p, y), self.eta(p, z));
        let (gyz, gxz) = (dot(y, z), dot(x, z));
        let first = sub(&scale(x, gyz), &scale(y, gxz));
        let mut second = sub(&scale(&px, dot(z, &py)), &scale(&py, dot(z, &px)));
        second = add(&second, &scale(&pz, 2.0 * dot(x, &py)));
        second = add(&second, &scale(&xi, -gyz * ex + gxz * ey));
        second = add(&second, &scale(x, -ey * ez));
        second = add(&second, &scale(y, ex * ez));
        add(&scale(&first, kappa), &scale(&second, mu))
    }
}

fn check_tangent(p: &SpherePoint, vs: &[&[f64]]) -> Result<(), EmbedError> {
    for v in vs {
        if !p.is_tangent(v) {
            return Err(EmbedError::NotTangent(dot(v, p.coords())));
        }
    }
    Ok(())
}

/// `g(R(X,Y)Z, W) = g(Y,Z)g(X,W) - g(X,Z)g(Y,W)` on the unit sphere.
pub fn riemann_point(
    p: &SpherePoint,
    x: &[f64],
    y: &[f64],
    z: &[f64],
    w: &[f64],
) -> Result<f64, EmbedError> {
    check_tangent(p, &[x, y, z, w])?;
    Ok(dot(y, z) * dot(x, w) - dot(x, z) * dot(y, w))
}

/// `g(R(X,Y)Z, W)` from `∇_X∇_Y Z - ∇_Y∇_X Z - ∇_{[X,Y]} Z` with the vectors
/// extended by tangential projection of constant fields.
pub fn riemann_from_connection(
    p: &SpherePoint,
    x: &[f64],
    y: &[f64],
    z: &[f64],
    w: &[f64],
) -> Result<f64, EmbedError> {
    check_tangent(p, &[x, y, z, w])?;
    let (xf, yf, zf) = (
        PolyVectorField::projected_constant(x),
        PolyVectorField::projected_constant(y),
        PolyVectorField::projected_constant(z),
    );
    let nyz = levi_civita_field(&yf, &zf);
    let nxz = levi_civita_field(&xf, &zf);
    let a = levi_civita(&xf, &nyz, p)?;
    let b = levi_civita(&yf, &nxz, p)?;
    let c = levi_civita(&lie_bracket(&xf, &yf), &zf, p)?;
    Ok(dot(&sub(&sub(&a, &b), &c), w))
}

fn sample_residuals(s: &SasakianStructure, seed: u64, index: u64) -> Result<[f64; 6], EmbedError> {
    let mut rng = SphereSampler::new(seed, index, s.ambient_dim());
    let p = rng.point();
    let x = rng.tangent(&p);
    let y = rng.tangent(&p);
    let xi = s.xi(&p);
    let (ex, ey) = (s.eta(&p, &x), s.eta(&p, &y));
    let phi_x = s.phi(&p, &x);

    let phi2 = s.phi(&p, &phi_x);
    let r0 = norm(&sub(&phi2, &add(&scale(&x, -1.0), &scale(&xi, ex))));
    let r1 = (s.eta(&p, &xi) - 1.0).abs();
    let r2 = norm(&s.phi(&p, &xi));
    let r3 = (dot(&x, &y) - dot(&phi_x, &s.phi(&p, &y)) - ex * ey).abs();
    let nabla_xi = covariant_derivative(&p, &x, s.xi_field())?;
    let r4 = norm(&add(&nabla_xi, &phi_x));
    let yf = PolyVectorField::projected_constant(&y);
    let lhs = sub(
        &covariant_derivative(&p, &x, &s.phi_field(&yf))?,
        &s.phi(&p, &covariant_derivative(&p, &x, &yf)?),
    );
    let rhs = sub(&scale(&xi, dot(&x, &y)), &scale(&x, ey));
    let r5 = norm(&sub(&lhs, &rhs));
    Ok([r0, r1, r2, r3, r4, r5])
}

/// Names of the structure identities, in report order.
pub const IDENTITIES: [&str; 6] = ["phi-squared", "eta-xi", "phi-xi", "metric", "nabla-xi", "nabla-phi"];

/// Maximal residual of each structure identity over `samples` seeded random
/// points and tangent vectors; sample `k` uses stream `k` of the generator.
/// A sample whose evaluation fails contributes `NaN`.
pub fn identity_residuals(s: &SasakianStructure, samples: usize, seed: u64) -> Vec<(&'static str, f64)> {
    let per_sample: Vec<Result<[f64; 6], EmbedError>> = (0..samples.max(1) as u64)
        .into_par_iter()
        .map(|k| sample_residuals(s, seed, k))
        .collect();
    IDENTITIES
        .iter()
        .enumerate()
        .map(|(i, name)| {
            let worst = per_sample
                .iter()
                .map(|r| r.as_ref().map(|v| v[i]).unwrap_or(f64::NAN))
                .fold(0.0_f64, |a, b| if b.is_nan() || a.is_nan() { f64::NAN } else { a.max(b) });
            (*name, worst)
        })
        .collect()
}

pub fn sasakian_identity_report(
    s: &SasakianStructure,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Vec<CheckResult> {
    let dim = 2 * s.n() + 1;
    identity_residuals(s, samples, seed)
        .into_iter()
        .map(|(name, worst)| {
            CheckResult::numeric(format!("sasakian.{name}.s{dim}"), worst, tol, "Sasakian structure identities")
                .with_param("samples", samples)
                .with_param("seed", seed)
        })
        .collect()
}

/// Which curvature evaluation [`curvature_residual`] compares with the round tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurvatureRoute {
    /// The space-form expression at `c = 1`.
    ClosedForm,
    /// Second covariant derivatives of extended fields.
    Connection,
}

/// Largest deviation over `samples` seeded points of the chosen curvature route
/// from the round-sphere tensor.
pub fn curvature_residual(
    s: &SasakianStructure,
    route: CurvatureRoute,
    samples: usize,
    seed: u64,
) -> Result<f64, EmbedError> {
    let per_sample: Vec<Result<f64, EmbedError>> = (0..samples.max(1) as u64)
        .into_par_iter()
        .map(|k| {
            let mut rng = SphereSampler::new(seed, k, s.ambient_dim());
            let p = rng.point();
            let v: Vec<Vec<f64>> = (0..4).map(|_| rng.tangent(&p)).collect();
            let base = riemann_point(&p, &v[0], &v[1], &v[2], &v[3])?;
            let got = match route {
                CurvatureRoute::ClosedForm => dot(&s.space_form_curvature(&p, 1.0, &v[0], &v[1], &v[2]), &v[3]),
                CurvatureRoute::Connection => riemann_from_connection(&p, &v[0], &v[1], &v[2], &v[3])?,
            };
            Ok((got - base).abs())
        })
        .collect();
    per_sample.into_iter().try_fold(0.0_f64, |a, r| Ok(a.max(r?)))
}
