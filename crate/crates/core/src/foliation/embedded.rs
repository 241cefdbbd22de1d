use crate::embed_geom::{
    dot, lie_bracket, levi_civita_field, norm, sub, PolyVectorField, SasakianStructure, SpherePoint,
    SphereSampler,
};
use crate::exactalg::Poly;

use super::{FoliationError, FrameJet};

/// Orthonormality tolerance for frame values at a sample point.
const FRAME_TOL: f64 = 1e-10;

/// Points at which `φe_i = f_i` is checked when a split is built.
const PHI_CHECK_POINTS: u64 = 16;

fn field_dot(f: &PolyVectorField, g: &PolyVectorField) -> Poly {
    f.components().iter().zip(g.components()).map(|(a, b)| a * b).sum()
}

fn combination(coeffs: &[Poly], fields: &[&PolyVectorField]) -> PolyVectorField {
    let dim = fields[0].dim();
    let comps = (0..dim)
        .map(|k| coeffs.iter().zip(fields).map(|(c, f)| c * &f.components()[k]).sum())
        .collect();
    PolyVectorField::new(comps, false).expect("untagged field")
}

fn minus(f: &PolyVectorField, g: &PolyVectorField) -> PolyVectorField {
    f.plus(&g.scaled(-1))
}

/// Split of the embedded sphere by polynomial frame fields: leaf fields `e_i`,
/// horizontal fields `f_i = φe_i` and the Reeb field. Curvature-type data is
/// assembled once as polynomial fields and evaluated per point.
#[derive(Clone, Debug)]
pub struct EmbeddedSplit {
    n: usize,
    frame: Vec<PolyVectorField>,
    nabla: Vec<PolyVectorField>,
    curvature: Vec<PolyVectorField>,
    nabla_h: Vec<PolyVectorField>,
    mean_curvature: PolyVectorField,
    bott: Vec<PolyVectorField>,
}

impl EmbeddedSplit {
    pub fn new(
        structure: &SasakianStructure,
        leaves: Vec<PolyVectorField>,
        horizontal: Vec<PolyVectorField>,
    ) -> Result<Self, FoliationError> {
        let n = structure.n();
        for got in [leaves.len(), horizontal.len()] {
            if got != n {
                return Err(FoliationError::FrameSize { expected: n, got });
            }
        }
        let xi = structure.xi_field();
        for (i, e) in leaves.iter().enumerate() {
            if !field_dot(e, xi).is_zero() {
                return Err(FoliationError::NotLegendre(i));
            }
        }
        for k in 0..PHI_CHECK_POINTS {
            let mut rng = SphereSampler::new(0, k, structure.ambient_dim());
            let p = rng.point();
            for (i, (e, f)) in leaves.iter().zip(&horizontal).enumerate() {
                if norm(&sub(&structure.phi(&p, &e.at(&p)), &f.at(&p))) > FRAME_TOL {
                    return Err(FoliationError::PhiMismatch(i));
                }
            }
        }
        let mut frame = leaves;
        frame.extend(horizontal);
        frame.push(xi.clone());
        let m = frame.len();

        let nabla: Vec<PolyVectorField> = (0..m * m)
            .map(|k| levi_civita_field(&frame[k / m], &frame[k % m]))
            .collect();
        let mut curvature = Vec::with_capacity(m.pow(3));
        for a in 0..m {
            for b in 0..m {
                let bracket = lie_bracket(&frame[a], &frame[b]);
                for d in 0..m {
                    let r = minus(
                        &minus(
                            &levi_civita_field(&frame[a], &nabla[b * m + d]),
                            &levi_civita_field(&frame[b], &nabla[a * m + d]),
                        ),
                        &levi_civita_field(&bracket, &frame[d]),
                    );
                    curvature.push(r);
                }
            }
        }
        let horizontal_refs: Vec<&PolyVectorField> = frame[n..].iter().collect();
        let coeffs: Vec<Poly> = frame[n..]
            .iter()
            .map(|f| (0..n).map(|i| field_dot(&nabla[i * m + i], f)).sum())
            .collect();
        let mean_curvature = combination(&coeffs, &horizontal_refs);
        let nabla_h = frame.iter().map(|e| levi_civita_field(e, &mean_curvature)).collect();
        let mut split = EmbeddedSplit {
            n,
            frame,
            nabla,
            curvature,
            nabla_h,
            mean_curvature,
            bott: Vec::new(),
        };
        split.bott = split.bott_fields();
        Ok(split)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn frame(&self) -> &[PolyVectorField] {
        &self.frame
    }

    pub fn mean_curvature_field(&self) -> &PolyVectorField {
        &self.mean_curvature
    }

    fn project(&self, f: &PolyVectorField, range: std::ops::Range<usize>) -> PolyVectorField {
        let fields: Vec<&PolyVectorField> = self.frame[range].iter().collect();
        let coeffs: Vec<Poly> = fields.iter().map(|e| field_dot(f, e)).collect();
        combination(&coeffs, &fields)
    }

    fn horizontal(&self, f: &PolyVectorField) -> PolyVectorField {
        self.project(f, self.n..self.frame.len())
    }

    fn vertical(&self, f: &PolyVectorField) -> PolyVectorField {
        self.project(f, 0..self.n)
    }

    /// Bott derivative of a horizontal field `s` along a horizontal field `x`.
    fn bott_h(&self, x: &PolyVectorField, s: &PolyVectorField) -> PolyVectorField {
        self.horizontal(&levi_civita_field(x, s))
    }

    /// Bott derivative of `s` along a vertical field `u`: `h[u, s]`.
    fn bott_v(&self, u: &PolyVectorField, s: &PolyVectorField) -> PolyVectorField {
        self.horizontal(&lie_bracket(u, s))
    }

    /// Fields `R∇(f_a, f_b) f_d` for `a < b`, in lexicographic order of `(a, b, d)`.
    fn bott_fields(&self) -> Vec<PolyVectorField> {
        let h = self.n + 1;
        let f = |a: usize| &self.frame[self.n + a];
        let mut out = Vec::new();
        for a in 0..h {
            for b in a + 1..h {
                let bracket = lie_bracket(f(a), f(b));
                let (bh, bv) = (self.horizontal(&bracket), self.vertical(&bracket));
                for d in 0..h {
                    let first = self.bott_h(f(a), &self.bott_h(f(b), f(d)));
                    let second = self.bott_h(f(b), &self.bott_h(f(a), f(d)));
                    let third = self.bott_h(&bh, f(d)).plus(&self.bott_v(&bv, f(d)));
                    out.push(minus(&minus(&first, &second), &third));
                }
            }
        }
        out
    }

    fn frame_at(&self, p: &SpherePoint) -> Result<Vec<Vec<f64>>, FoliationError> {
        let vals: Vec<Vec<f64>> = self.frame.iter().map(|e| e.at(p)).collect();
        for (i, u) in vals.iter().enumerate() {
            if !p.is_tangent(u) {
                return Err(FoliationError::NotOrthonormal(i, i));
            }
            for (j, v) in vals.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                if (dot(u, v) - want).abs() > FRAME_TOL {
                    return Err(FoliationError::NotOrthonormal(i, j));
                }
            }
        }
        Ok(vals)
    }

    pub fn jet_at(&self, p: &SpherePoint) -> Result<FrameJet<f64>, FoliationError> {
        let e = self.frame_at(p)?;
        let m = e.len();
        let nabla: Vec<Vec<f64>> = self.nabla.iter().map(|f| f.at(p)).collect();
        let mut gamma = Vec::with_capacity(m.pow(3));
        for i in 0..m {
            for j in 0..m {
                for ek in &e {
                    gamma.push(dot(&nabla[i * m + j], ek));
                }
            }
        }
        let curv: Vec<Vec<f64>> = self.curvature.iter().map(|f| f.at(p)).collect();
        let mut riem = Vec::with_capacity(m.pow(4));
        for i in 0..m {
            for j in 0..m {
                for ek in &e {
                    for l in 0..m {
                        riem.push(dot(&curv[(i * m + j) * m + l], ek));
                    }
                }
            }
        }
        let mut nabla_h = Vec::with_capacity(m * m);
        for f in &self.nabla_h {
            let v = f.at(p);
            for ek in &e {
                nabla_h.push(dot(&v, ek));
            }
        }
        FrameJet::new(self.n, gamma, riem, nabla_h)
    }

    /// Bott curvature as a horizontal 4-array `g(R∇(f_a,f_b)f_d, f_c)` at `p`.
    pub fn bott_curvature_at(&self, p: &SpherePoint) -> Result<Vec<f64>, FoliationError> {
        let e = self.frame_at(p)?;
        let h = self.n + 1;
        let vals: Vec<Vec<f64>> = self.bott.iter().map(|f| f.at(p)).collect();
        let pair_index = |a: usize, b: usize| -> usize {
            // position of (a, b), a < b, among the lexicographic pairs
            (0..a).map(|r| h - 1 - r).sum::<usize>() + (b - a - 1)
        };
        let mut out = vec![0.0; h.pow(4)];
        for a in 0..h {
            for b in 0..h {
                if a == b {
                    continue;
                }
                let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
                for c in 0..h {
                    for d in 0..h {
                        let v = &vals[pair_index(lo, hi) * h + d];
                        out[((a * h + b) * h + c) * h + d] = sign * dot(v, &e[self.n + c]);
                    }
                }
            }
        }
        Ok(out)
    }
}
