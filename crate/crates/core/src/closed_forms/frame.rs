use crate::exactalg::Poly;

use super::SasakiParams;

/// Role of an adapted-frame index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameSlot {
    /// `e_i` (leaf direction), 0-based.
    Leaf(usize),
    /// `φe_i`, 0-based.
    PhiLeaf(usize),
    Reeb,
}

/// Index bookkeeping for the adapted frame `(e_1..e_n, φe_1..φe_n, ξ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdaptedFrame {
    pub n: usize,
}

impl AdaptedFrame {
    pub fn dim(&self) -> usize {
        2 * self.n + 1
    }

    pub fn leaf(&self, i: usize) -> usize {
        i
    }

    pub fn phi_leaf(&self, i: usize) -> usize {
        self.n + i
    }

    pub fn reeb(&self) -> usize {
        2 * self.n
    }

    /// Frame index of the horizontal vector `f_a`.
    pub fn horizontal(&self, a: usize) -> usize {
        if a < self.n {
            self.phi_leaf(a)
        } else {
            self.reeb()
        }
    }

    pub fn slot(&self, idx: usize) -> FrameSlot {
        if idx < self.n {
            FrameSlot::Leaf(idx)
        } else if idx < 2 * self.n {
            FrameSlot::PhiLeaf(idx - self.n)
        } else {
            FrameSlot::Reeb
        }
    }
}

/// All `(2n+1)^4` curvature components in the adapted frame.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameCurvature {
    frame: AdaptedFrame,
    comps: Vec<Poly>,
}

impl FrameCurvature {
    pub fn zero(n: usize) -> Self {
        let frame = AdaptedFrame { n };
        let m = frame.dim();
        FrameCurvature { frame, comps: vec![Poly::zero(); m.pow(4)] }
    }

    pub fn frame(&self) -> AdaptedFrame {
        self.frame
    }

    pub fn n(&self) -> usize {
        self.frame.n
    }

    fn idx(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        let m = self.frame.dim();
        ((a * m + b) * m + c) * m + d
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> &Poly {
        &self.comps[self.idx(a, b, c, d)]
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, d: usize, value: Poly) {
        let k = self.idx(a, b, c, d);
        self.comps[k] = value;
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    /// Positions where `R_abcd = -R_bacd = -R_abdc = R_cdab` fails.
    pub fn symmetry_violations(&self) -> Vec<[usize; 4]> {
        let m = self.frame.dim();
        let mut bad = Vec::new();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        let r = self.get(a, b, c, d);
                        let ok = (r + self.get(b, a, c, d)).is_zero()
                            && (r + self.get(a, b, d, c)).is_zero()
                            && (r - self.get(c, d, a, b)).is_zero();
                        if !ok {
                            bad.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        bad
    }

    /// Positions where the first Bianchi identity `R_abcd + R_bcad + R_cabd = 0` fails.
    pub fn bianchi_violations(&self) -> Vec<[usize; 4]> {
        let m = self.frame.dim();
        let mut bad = Vec::new();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    for d in 0..m {
                        let s = self.get(a, b, c, d) + self.get(b, c, a, d) + self.get(c, a, b, d);
                        if !s.is_zero() {
                            bad.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        bad
    }
}

fn delta(i: usize, j: usize) -> i64 {
    i64::from(i == j)
}

/// Value of a component whose index roles match one of the tabulated shapes
/// verbatim; `None` means the shape itself is not tabulated.
fn tabulated(kappa: &Poly, mu: &Poly, slots: [FrameSlot; 4]) -> Option<Poly> {
    use FrameSlot::*;
    let antisym = |i, j, k, m| delta(i, k) * delta(j, m) - delta(i, m) * delta(j, k);
    match slots {
        [Leaf(i), Reeb, Leaf(k), Reeb] | [PhiLeaf(i), Reeb, PhiLeaf(k), Reeb] => {
            Some(Poly::int(delta(i, k)))
        }
        [Leaf(i), Leaf(j), Leaf(k), Leaf(m)] | [PhiLeaf(i), PhiLeaf(j), PhiLeaf(k), PhiLeaf(m)] => {
            Some(kappa * Poly::int(antisym(i, j, k, m)))
        }
        [Leaf(i), Leaf(j), PhiLeaf(k), PhiLeaf(m)] | [PhiLeaf(i), PhiLeaf(j), Leaf(k), Leaf(m)] => {
            Some(mu * Poly::int(antisym(i, j, k, m)))
        }
        [Leaf(i), PhiLeaf(j), Leaf(k), PhiLeaf(m)] => Some(
            kappa * Poly::int(delta(i, k) * delta(j, m))
                + mu * Poly::int(delta(i, m) * delta(j, k))
                + mu * Poly::int(2 * delta(i, j) * delta(k, m)),
        ),
        _ => None,
    }
}

/// Adapted-frame curvature of a Sasakian space form, populated from the tabulated
/// component shapes and completed by the algebraic curvature symmetries. Shapes
/// that are not reachable from a tabulated one are zero.
pub fn frame_curvature(params: &SasakiParams) -> FrameCurvature {
    let n = params.n();
    let mut fc = FrameCurvature::zero(n);
    let frame = fc.frame();
    let m = frame.dim();
    let (kappa, mu) = (params.kappa(), params.mu());
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    let images: [([usize; 4], i64); 8] = [
                        ([a, b, c, d], 1),
                        ([b, a, c, d], -1),
                        ([a, b, d, c], -1),
                        ([b, a, d, c], 1),
                        ([c, d, a, b], 1),
                        ([d, c, a, b], -1),
                        ([c, d, b, a], -1),
                        ([d, c, b, a], 1),
                    ];
                    let value = images.iter().find_map(|(ix, sign)| {
                        let slots = ix.map(|k| frame.slot(k));
                        tabulated(&kappa, &mu, slots).map(|v| v * Poly::int(*sign))
                    });
                    if let Some(v) = value {
                        if !v.is_zero() {
                            fc.set(a, b, c, d, v);
                        }
                    }
                }
            }
        }
    }
    fc
}

/// Ricci contraction `ρ(X_a, X_b) = Σ_e R(X_a, X_e, X_b, X_e)` of a frame tensor.
pub fn frame_ricci(fc: &FrameCurvature) -> Vec<Poly> {
    let m = fc.frame().dim();
    let mut out = vec![Poly::zero(); m * m];
    for a in 0..m {
        for b in 0..m {
            out[a * m + b] = (0..m).map(|e| fc.get(a, e, b, e)).sum();
        }
    }
    out
}

/// Printed Ricci matrix (row-major over the adapted frame) and scalar curvature.
pub fn ricci_and_scalar(params: &SasakiParams) -> (Vec<Poly>, Poly) {
    let frame = AdaptedFrame { n: params.n() };
    let m = frame.dim();
    let rd = params.ricci_d();
    let mut ric = vec![Poly::zero(); m * m];
    for i in 0..params.n() {
        ric[frame.leaf(i) * m + frame.leaf(i)] = rd.clone();
        ric[frame.phi_leaf(i) * m + frame.phi_leaf(i)] = rd.clone();
    }
    ric[frame.reeb() * m + frame.reeb()] = Poly::int(2 * params.n() as i64);
    let n = params.n_poly();
    let c = params.c();
    let tau = &n * Poly::frac(1, 2) * Poly::int(2 * params.n() as i64 + 1) * (c + Poly::int(3))
        + n * Poly::frac(1, 2) * (c - Poly::int(1));
    (ric, tau)
}

/// Closed form of `‖R‖²`.
pub fn norm_r_sq(params: &SasakiParams) -> Poly {
    let n = params.n_poly();
    let c = params.c();
    let cp3 = c + Poly::int(3);
    let cm1 = c - Poly::int(1);
    let two_n = Poly::int(2 * params.n() as i64);
    cp3.pow(2) * &n * (&two_n - Poly::int(1)) * Poly::frac(1, 4)
        + cm1.pow(2) * &n * (Poly::int(6 * params.n() as i64 + 3)) * Poly::frac(1, 4)
        + &cp3 * &cm1 * &n * Poly::frac(3, 2)
        + n * Poly::int(8)
}

/// Closed form of `‖ρ‖²`.
pub fn norm_ric_sq(params: &SasakiParams) -> Poly {
    let n = params.n_poly();
    params.ricci_d().pow(2) * Poly::int(2) * &n + n.pow(2) * Poly::int(4)
}

/// Full contractions `Σ R_abcd²` and `Σ ρ_ab²` over the frame.
pub fn brute_force_norms(fc: &FrameCurvature, ricci: &[Poly]) -> (Poly, Poly) {
    let r2 = fc
        .components()
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p * p)
        .sum();
    let ric2 = ricci.iter().filter(|p| !p.is_zero()).map(|p| p * p).sum();
    (r2, ric2)
}
