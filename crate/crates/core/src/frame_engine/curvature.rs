use num_traits::Zero;

use crate::exactalg::{Poly, RatFn, Rational};

use super::{apply_phi, ConnectionCoeffs, FrameAlgebra, FrameError};

/// Frame components `R_ijkl = g(R(X_i,X_j)X_l, X_k)`, so that `R_ijij` is the
/// (unnormalized) sectional curvature of the pair.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvTensor4 {
    m: usize,
    comps: Vec<RatFn>,
}

impl CurvTensor4 {
    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &RatFn {
        &self.comps[((i * self.m + j) * self.m + k) * self.m + l]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(RatFn::is_zero)
    }

    /// `R(u,v,w,z)` for frame-coordinate vectors.
    pub fn eval(&self, u: &[RatFn], v: &[RatFn], w: &[RatFn], z: &[RatFn]) -> RatFn {
        let m = self.m;
        let mut s = RatFn::zero();
        for i in (0..m).filter(|&i| !u[i].is_zero()) {
            for j in (0..m).filter(|&j| !v[j].is_zero()) {
                let uv = &u[i] * &v[j];
                for k in (0..m).filter(|&k| !w[k].is_zero()) {
                    for l in (0..m).filter(|&l| !z[l].is_zero()) {
                        let r = self.get(i, j, k, l);
                        if !r.is_zero() {
                            s = s + &(&(&uv * &w[k]) * &z[l]) * r;
                        }
                    }
                }
            }
        }
        s
    }

    /// Index tuples where `R_ijkl = -R_jikl = -R_ijlk = R_klij` fails.
    pub fn symmetry_violations(&self) -> Vec<[usize; 4]> {
        let m = self.m;
        let mut bad = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let r = self.get(i, j, k, l);
                        let ok = (r + self.get(j, i, k, l)).is_zero()
                            && (r + self.get(i, j, l, k)).is_zero()
                            && (r - self.get(k, l, i, j)).is_zero();
                        if !ok {
                            bad.push([i, j, k, l]);
                        }
                    }
                }
            }
        }
        bad
    }

    /// Index tuples where `R_ijkl + R_jkil + R_kijl = 0` fails.
    pub fn bianchi_violations(&self) -> Vec<[usize; 4]> {
        let m = self.m;
        let mut bad = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        let s = &(self.get(i, j, k, l) + self.get(j, k, i, l)) + self.get(k, i, j, l);
                        if !s.is_zero() {
                            bad.push([i, j, k, l]);
                        }
                    }
                }
            }
        }
        bad
    }
}

/// `R(X_i,X_j)X_l = ∇_i∇_j X_l - ∇_j∇_i X_l - ∇_{[X_i,X_j]} X_l` with constant
/// coefficients: `R^q_ijl = Γ^p_jl Γ^q_ip - Γ^p_il Γ^q_jp - c^p_ij Γ^q_pl`.
pub fn curvature_from_frame(alg: &FrameAlgebra, conn: &ConnectionCoeffs) -> CurvTensor4 {
    let m = alg.dim();
    let g = |a: usize, b: usize| RatFn::from(alg.metric(a, b).clone());
    let gamma = |i: usize, j: usize, k: usize| conn.get(i, j, k);
    let mut comps = vec![RatFn::zero(); m.pow(4)];
    for i in 0..m {
        for j in 0..m {
            for l in 0..m {
                let mut up = vec![RatFn::zero(); m];
                for (q, slot) in up.iter_mut().enumerate() {
                    let mut s = RatFn::zero();
                    for p in 0..m {
                        if !gamma(j, l, p).is_zero() && !gamma(i, p, q).is_zero() {
                            s = s + gamma(j, l, p) * gamma(i, p, q);
                        }
                        if !gamma(i, l, p).is_zero() && !gamma(j, p, q).is_zero() {
                            s = s - gamma(i, l, p) * gamma(j, p, q);
                        }
                        let c = alg.structure_const(p, i, j);
                        if !c.is_zero() && !gamma(p, l, q).is_zero() {
                            s = s - &RatFn::from(Poly::constant(c.clone())) * gamma(p, l, q);
                        }
                    }
                    *slot = s;
                }
                for k in 0..m {
                    let mut v = RatFn::zero();
                    for (q, uq) in up.iter().enumerate() {
                        if !uq.is_zero() {
                            v = v + uq * &g(q, k);
                        }
                    }
                    comps[((i * m + j) * m + k) * m + l] = v;
                }
            }
        }
    }
    CurvTensor4 { m, comps }
}

/// Sectional curvature of the frame plane `(X_i, X_j)`.
pub fn sectional_curvature(
    alg: &FrameAlgebra,
    curv: &CurvTensor4,
    i: usize,
    j: usize,
) -> Result<RatFn, FrameError> {
    let g = |a: usize, b: usize| RatFn::from(alg.metric(a, b).clone());
    let area = &(&g(i, i) * &g(j, j)) - &(&g(i, j) * &g(i, j));
    Ok(curv.get(i, j, i, j).div(&area)?)
}

/// `K(X, φX) = R(X,φX,X,φX) / (g(X,X)g(φX,φX) - g(X,φX)²)` for `X ∈ Ker η`.
pub fn phi_sectional_curvature(
    alg: &FrameAlgebra,
    curv: &CurvTensor4,
    x: &[Rational],
) -> Result<RatFn, FrameError> {
    let cd = alg.contact().ok_or(FrameError::MissingContactData)?;
    let m = alg.dim();
    if x.len() != m {
        return Err(FrameError::DimensionMismatch { expected: m, got: x.len() });
    }
    let xv: Vec<RatFn> = x.iter().map(|r| RatFn::from(Poly::constant(r.clone()))).collect();
    let eta_x = cd.eta.iter().zip(&xv).fold(RatFn::zero(), |s, (e, v)| s + e * v);
    if !eta_x.is_zero() {
        return Err(FrameError::NotHorizontal);
    }
    let px = apply_phi(&cd.phi, &xv);
    let num = curv.eval(&xv, &px, &xv, &px);
    let gxx = alg.inner(&xv, &xv);
    let gpp = alg.inner(&px, &px);
    let gxp = alg.inner(&xv, &px);
    let den = &(&gxx * &gpp) - &(&gxp * &gxp);
    Ok(num.div(&den)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Var};
    use crate::frame_engine::koszul_connection;
    use std::collections::BTreeMap;

    fn pipeline(alg: &FrameAlgebra) -> CurvTensor4 {
        curvature_from_frame(alg, &koszul_connection(alg).unwrap())
    }

    #[test]
    fn round_sphere_has_unit_sectional_curvature() {
        let alg = FrameAlgebra::su2_round();
        let r = pipeline(&alg);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(sectional_curvature(&alg, &r, i, j).unwrap(), RatFn::one());
        }
        assert!(r.symmetry_violations().is_empty());
        assert!(r.bianchi_violations().is_empty());
    }

    #[test]
    fn flat_frame_is_flat() {
        let alg = FrameAlgebra::abelian(4);
        assert!(pipeline(&alg).is_zero());
    }

    #[test]
    fn berger_phi_sectional_curvature() {
        let a = Poly::var(Var::A);
        let alg = FrameAlgebra::su2_round().d_homothetic_deform(&a).unwrap();
        let r = pipeline(&alg);
        assert!(r.symmetry_violations().is_empty());
        assert!(r.bianchi_violations().is_empty());
        let w = [rat(1, 1), rat(0, 1), rat(0, 1)];
        let k = phi_sectional_curvature(&alg, &r, &w).unwrap();
        // a·K - (4 - 3a) ≡ 0
        let cleared = &(&k * &RatFn::from(a.clone())) - &RatFn::from(Poly::int(4) - a * Poly::int(3));
        assert!(cleared.is_zero());
        for (av, kv) in [(1, 1), (2, -1), (4, -2)] {
            let v = k.eval(&BTreeMap::from([(Var::A, rat(av, 1))])).unwrap();
            assert_eq!(v, rat(kv, 1));
        }
        let xi = [rat(0, 1), rat(0, 1), rat(1, 1)];
        assert_eq!(phi_sectional_curvature(&alg, &r, &xi), Err(FrameError::NotHorizontal));
    }
}
