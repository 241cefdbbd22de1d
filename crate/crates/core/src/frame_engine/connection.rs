use crate::exactalg::{Poly, RatFn, Rational};
use num_traits::Zero;

use super::{FrameAlgebra, FrameError};

/// Levi-Civita coefficients `∇_{X_i} X_j = Σ_k gamma[i][j][k] X_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionCoeffs {
    pub gamma: Vec<Vec<Vec<RatFn>>>,
}

impl ConnectionCoeffs {
    pub fn get(&self, i: usize, j: usize, k: usize) -> &RatFn {
        &self.gamma[i][j][k]
    }

    pub fn dim(&self) -> usize {
        self.gamma.len()
    }

    /// Entries of `Γ^k_ij - Γ^k_ji - c^k_ij` that do not vanish.
    pub fn torsion_residuals(&self, alg: &FrameAlgebra) -> Vec<(usize, usize, usize, RatFn)> {
        let m = self.dim();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let c = RatFn::from(Poly::constant(alg.structure_const(k, i, j).clone()));
                    let r = &(&self.gamma[i][j][k] - &self.gamma[j][i][k]) - &c;
                    if !r.is_zero() {
                        out.push((i, j, k, r));
                    }
                }
            }
        }
        out
    }

    /// Entries of `g(∇_i X_j, X_k) + g(X_j, ∇_i X_k)` that do not vanish.
    pub fn metric_residuals(&self, alg: &FrameAlgebra) -> Vec<(usize, usize, usize, RatFn)> {
        let m = self.dim();
        let g = |a: usize, b: usize| RatFn::from(alg.metric(a, b).clone());
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let mut r = RatFn::zero();
                    for p in 0..m {
                        r = r + &self.gamma[i][j][p] * &g(p, k) + &self.gamma[i][k][p] * &g(j, p);
                    }
                    if !r.is_zero() {
                        out.push((i, j, k, r));
                    }
                }
            }
        }
        out
    }
}

/// Inverse of a matrix over rational functions by Gauss-Jordan elimination.
fn invert(mut a: Vec<Vec<RatFn>>) -> Result<Vec<Vec<RatFn>>, FrameError> {
    let m = a.len();
    let mut inv: Vec<Vec<RatFn>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { RatFn::one() } else { RatFn::zero() }).collect())
        .collect();
    for col in 0..m {
        let pivot = (col..m).find(|&r| !a[r][col].is_zero()).ok_or(FrameError::SingularMetric)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..m {
            a[col][j] = a[col][j].div(&p)?;
            inv[col][j] = inv[col][j].div(&p)?;
        }
        for r in 0..m {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..m {
                let (ac, ic) = (a[col][j].clone(), inv[col][j].clone());
                a[r][j] = &a[r][j] - &(&f * &ac);
                inv[r][j] = &inv[r][j] - &(&f * &ic);
            }
        }
    }
    Ok(inv)
}

/// Koszul formula for constant data:
/// `2g(∇_{X_i}X_j, X_l) = g([X_i,X_j],X_l) - g([X_j,X_l],X_i) + g([X_l,X_i],X_j)`.
pub fn koszul_connection(alg: &FrameAlgebra) -> Result<ConnectionCoeffs, FrameError> {
    let m = alg.dim();
    let g: Vec<Vec<RatFn>> = (0..m)
        .map(|i| (0..m).map(|j| RatFn::from(alg.metric(i, j).clone())).collect())
        .collect();
    let g_inv = invert(g.clone())?;
    // bracket_lower[i][j][l] = g([X_i,X_j], X_l)
    let bracket_lower = |i: usize, j: usize, l: usize| -> RatFn {
        let mut s = RatFn::zero();
        for p in 0..m {
            let c = alg.structure_const(p, i, j);
            if !c.is_zero() {
                s = s + &g[p][l] * &RatFn::from(Poly::constant(c.clone()));
            }
        }
        s
    };
    let half = RatFn::from(Poly::constant(Rational::new(1.into(), 2.into())));
    let mut gamma = vec![vec![vec![RatFn::zero(); m]; m]; m];
    for i in 0..m {
        for j in 0..m {
            let lower: Vec<RatFn> = (0..m)
                .map(|l| {
                    let s = &(&bracket_lower(i, j, l) - &bracket_lower(j, l, i)) + &bracket_lower(l, i, j);
                    &s * &half
                })
                .collect();
            for k in 0..m {
                let mut v = RatFn::zero();
                for l in 0..m {
                    if !lower[l].is_zero() && !g_inv[k][l].is_zero() {
                        v = v + &g_inv[k][l] * &lower[l];
                    }
                }
                gamma[i][j][k] = v;
            }
        }
    }
    Ok(ConnectionCoeffs { gamma })
}
