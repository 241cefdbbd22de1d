//! O'Neill-tensor geometry of a Legendre foliation from the pointwise data of an
//! orthonormal adapted frame `(e_1..e_n, φe_1..φe_n, ξ)`.
//!
//! Frame index `i < n` is the leaf direction `e_i`, `n + i` is `φe_i` and `2n`
//! is `ξ`. Horizontal arrays are indexed by `a = 0..=n` with `f_a = X_{n+a}`.

mod embedded;
mod example;
mod frame_split;
mod scalar;

use thiserror::Error;

use crate::embed_geom::EmbedError;
use crate::frame_engine::FrameError;

pub use embedded::EmbeddedSplit;
pub use example::{
    estimate_sphere_volume, homogeneous_integral, s3_legendre_example, s3_reference_values, s3_swapped_example, spread,
    S3Example,
    CONSTANCY_TOL, VOL_S3,
};
pub use frame_split::FrameSplit;
pub use scalar::Scalar;

#[derive(Debug, Error, PartialEq)]
pub enum FoliationError {
    #[error("adapted frame needs {expected} fields, got {got}")]
    FrameSize { expected: usize, got: usize },
    #[error("frame is not orthonormal at ({0}, {1})")]
    NotOrthonormal(usize, usize),
    #[error("leaf field {0} is not Legendre")]
    NotLegendre(usize),
    #[error("horizontal field {0} is not φ of its leaf field")]
    PhiMismatch(usize),
    #[error("frame data is not constant")]
    NonConstant,
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// Connection, curvature and mean-curvature derivative in an orthonormal adapted
/// frame at one point:
/// `gamma(i,j,k) = g(∇_{X_i} X_j, X_k)`, `riem(i,j,k,l) = g(R(X_i,X_j)X_l, X_k)`,
/// `nabla_h(c,k) = g(∇_{X_c} H, X_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameJet<S> {
    n: usize,
    gamma: Vec<S>,
    riem: Vec<S>,
    nabla_h: Vec<S>,
}

impl<S: Scalar> FrameJet<S> {
    pub fn new(n: usize, gamma: Vec<S>, riem: Vec<S>, nabla_h: Vec<S>) -> Result<Self, FoliationError> {
        let m = 2 * n + 1;
        for (len, want) in [(gamma.len(), m.pow(3)), (riem.len(), m.pow(4)), (nabla_h.len(), m * m)] {
            if len != want {
                return Err(FoliationError::FrameSize { expected: want, got: len });
            }
        }
        Ok(FrameJet { n, gamma, riem, nabla_h })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n + 1
    }

    /// Number of horizontal directions, `n + 1`.
    pub fn horizontal_dim(&self) -> usize {
        self.n + 1
    }

    fn is_vertical(&self, i: usize) -> bool {
        i < self.n
    }

    /// Frame index of `f_a`.
    pub fn f(&self, a: usize) -> usize {
        self.n + a
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &S {
        let m = self.dim();
        &self.gamma[(i * m + j) * m + k]
    }

    pub fn riem(&self, i: usize, j: usize, k: usize, l: usize) -> &S {
        let m = self.dim();
        &self.riem[((i * m + j) * m + k) * m + l]
    }

    pub fn nabla_h(&self, c: usize, k: usize) -> &S {
        &self.nabla_h[c * self.dim() + k]
    }

    /// Sectional curvature of the orthonormal pair `(X_i, X_j)`.
    pub fn sectional(&self, i: usize, j: usize) -> S {
        self.riem(i, j, i, j).clone()
    }

    fn nabla_part(&self, i: usize, j: usize, vertical: bool) -> Vec<S> {
        (0..self.dim())
            .map(|k| {
                if self.is_vertical(k) == vertical {
                    self.gamma(i, j, k).clone()
                } else {
                    S::zero()
                }
            })
            .collect()
    }

    /// `A_{X_i} X_j = v∇_{hX_i} hX_j + h∇_{hX_i} vX_j`.
    pub fn oneill_a(&self, i: usize, j: usize) -> Vec<S> {
        if self.is_vertical(i) {
            return vec![S::zero(); self.dim()];
        }
        self.nabla_part(i, j, !self.is_vertical(j))
    }

    /// `T_{X_i} X_j = h∇_{vX_i} vX_j + v∇_{vX_i} hX_j`.
    pub fn oneill_t(&self, i: usize, j: usize) -> Vec<S> {
        if !self.is_vertical(i) {
            return vec![S::zero(); self.dim()];
        }
        self.nabla_part(i, j, !self.is_vertical(j))
    }

    /// `H = Σ_i T_{e_i} e_i`.
    pub fn mean_curvature(&self) -> Vec<S> {
        (0..self.n).fold(vec![S::zero(); self.dim()], |acc, i| add(&acc, &self.oneill_t(i, i)))
    }

    /// `(A_X, A_Y) = Σ_b g(A_X f_b, A_Y f_b)` for frame indices `x`, `y`.
    pub fn a_pairing(&self, x: usize, y: usize) -> S {
        (0..self.horizontal_dim())
            .map(|b| dot(&self.oneill_a(x, self.f(b)), &self.oneill_a(y, self.f(b))))
            .fold(S::zero(), |s, v| s + v)
    }

    /// `(TX, TY) = Σ_j g(T_{e_j} X, T_{e_j} Y)`.
    pub fn t_pairing(&self, x: usize, y: usize) -> S {
        (0..self.n)
            .map(|j| dot(&self.oneill_t(j, x), &self.oneill_t(j, y)))
            .fold(S::zero(), |s, v| s + v)
    }

    /// Pairing matrices `((A_{f_a}, A_{f_b}))` and `((Tf_a, Tf_b))`.
    pub fn pairings(&self) -> (Vec<Vec<S>>, Vec<Vec<S>>) {
        let h = self.horizontal_dim();
        let mat = |p: &dyn Fn(usize, usize) -> S| {
            (0..h).map(|a| (0..h).map(|b| p(self.f(a), self.f(b))).collect()).collect()
        };
        (mat(&|x, y| self.a_pairing(x, y)), mat(&|x, y| self.t_pairing(x, y)))
    }

    pub fn a_norm_sq(&self) -> S {
        (0..self.horizontal_dim()).fold(S::zero(), |s, a| s + self.a_pairing(self.f(a), self.f(a)))
    }

    pub fn t_norm_sq(&self) -> S {
        (0..self.horizontal_dim()).fold(S::zero(), |s, a| s + self.t_pairing(self.f(a), self.f(a)))
    }

    fn g_aa(&self, a: usize, b: usize, c: usize, d: usize) -> S {
        dot(&self.oneill_a(self.f(a), self.f(b)), &self.oneill_a(self.f(c), self.f(d)))
    }

    fn horizontal_array(&self, entry: impl Fn(usize, usize, usize, usize) -> S) -> Vec<S> {
        let h = self.horizontal_dim();
        let mut out = Vec::with_capacity(h.pow(4));
        for a in 0..h {
            for b in 0..h {
                for c in 0..h {
                    for d in 0..h {
                        out.push(entry(a, b, c, d));
                    }
                }
            }
        }
        out
    }

    /// `V(X,Y,Z,Z') = 2g(A_X Y, A_Z Z') - g(A_Y Z, A_X Z') - g(A_Z X, A_Y Z')`
    /// over the horizontal frame.
    pub fn v_tensor(&self) -> Vec<S> {
        self.horizontal_array(|a, b, c, d| {
            S::from_i64(2) * self.g_aa(a, b, c, d) - self.g_aa(b, c, a, d) - self.g_aa(c, a, b, d)
        })
    }

    /// `R∇(f_a,f_b,f_c,f_d) = R(f_a,f_b,f_c,f_d) + V(f_a,f_b,f_c,f_d)`.
    pub fn r_nabla_components(&self) -> Vec<S> {
        let v = self.v_tensor();
        let h = self.horizontal_dim();
        self.horizontal_array(|a, b, c, d| {
            self.riem(self.f(a), self.f(b), self.f(c), self.f(d)).clone()
                + v[((a * h + b) * h + c) * h + d].clone()
        })
    }

    /// `τ∇ = Σ_{a,b} R∇(f_a,f_b,f_a,f_b)`.
    pub fn tau_nabla(&self) -> S {
        let h = self.horizontal_dim();
        let r = self.r_nabla_components();
        let mut s = S::zero();
        for a in 0..h {
            for b in 0..h {
                s = s + r[((a * h + b) * h + a) * h + b].clone();
            }
        }
        s
    }

    /// `Σ_{i≠j} K(φe_i, φe_j) + 2 Σ_i K(φe_i, ξ) + 3‖A‖²`.
    pub fn tau_nabla_sectional(&self) -> S {
        let (n, xi) = (self.n, 2 * self.n);
        let mut s = S::from_i64(3) * self.a_norm_sq();
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i) {
                s = s + self.sectional(n + i, n + j);
            }
            s = s + S::from_i64(2) * self.sectional(n + i, xi);
        }
        s
    }

    /// `τ^mixed = Σ_{i,a} K(e_i, f_a)`.
    pub fn mixed_scalar(&self) -> S {
        let mut s = S::zero();
        for i in 0..self.n {
            for a in 0..self.horizontal_dim() {
                s = s + self.sectional(i, self.f(a));
            }
        }
        s
    }

    pub fn div_mean_curvature(&self) -> S {
        (0..self.dim()).fold(S::zero(), |s, c| s + self.nabla_h(c, c).clone())
    }

    /// `τ^mixed - div H - ‖H‖² - ‖A‖² + ‖T‖²`.
    pub fn ranjan_residual(&self) -> S {
        let h = self.mean_curvature();
        self.mixed_scalar() - self.div_mean_curvature() - dot(&h, &h) - self.a_norm_sq() + self.t_norm_sq()
    }

    /// `Σ_i R(X,e_i,Y,e_i) - ½(g(∇_Y H, X) + g(∇_X H, Y)) - (A_X,A_Y) + (TX,TY)`
    /// for horizontal `X = Σ x_a f_a` and `Y = Σ y_a f_a`.
    pub fn curvature_sum_residual(&self, x: &[S], y: &[S]) -> S {
        let h = self.horizontal_dim();
        let half = S::from_ratio(1, 2);
        let mut s = S::zero();
        for a in 0..h {
            for b in 0..h {
                let w = x[a].clone() * y[b].clone();
                if w == S::zero() {
                    continue;
                }
                let (fa, fb) = (self.f(a), self.f(b));
                let lhs = (0..self.n).fold(S::zero(), |acc, i| acc + self.riem(fa, i, fb, i).clone());
                let grad = half.clone() * (self.nabla_h(fb, fa).clone() + self.nabla_h(fa, fb).clone());
                let rhs = grad + self.a_pairing(fa, fb) - self.t_pairing(fa, fb);
                s = s + w * (lhs - rhs);
            }
        }
        s
    }

    /// `ρ(X_i, X_j) = Σ_e R(X_i, X_e, X_j, X_e)`.
    pub fn ricci(&self, i: usize, j: usize) -> S {
        (0..self.dim()).fold(S::zero(), |s, e| s + self.riem(i, e, j, e).clone())
    }

    /// `ρ∇(f_a, f_b) = ρ(f_a,f_b) + 2(A_{f_a},A_{f_b}) + (Tf_a,Tf_b)`.
    pub fn rho_nabla(&self) -> Vec<Vec<S>> {
        let h = self.horizontal_dim();
        (0..h)
            .map(|a| {
                (0..h)
                    .map(|b| {
                        let (fa, fb) = (self.f(a), self.f(b));
                        self.ricci(fa, fb) + S::from_i64(2) * self.a_pairing(fa, fb) + self.t_pairing(fa, fb)
                    })
                    .collect()
            })
            .collect()
    }

    /// `Σ_a ρ∇(f_a, f_a) - τ∇`.
    pub fn rho_nabla_trace_residual(&self) -> S {
        let r = self.rho_nabla();
        (0..self.horizontal_dim()).fold(S::zero(), |s, a| s + r[a][a].clone()) - self.tau_nabla()
    }
}

/// Contraction `(C₂₄V)(f_a, f_c) = Σ_b V(f_a, f_b, f_c, f_b)` of a horizontal 4-array.
pub fn c24_contract<S: Scalar>(v: &[S], h: usize) -> Vec<Vec<S>> {
    (0..h)
        .map(|a| {
            (0..h)
                .map(|c| (0..h).fold(S::zero(), |s, b| s + v[((a * h + b) * h + c) * h + b].clone()))
                .collect()
        })
        .collect()
}

pub fn norm_sq<S: Scalar>(entries: &[S]) -> S {
    entries.iter().fold(S::zero(), |s, v| s + v.clone() * v.clone())
}

pub fn matrix_norm_sq<S: Scalar>(m: &[Vec<S>]) -> S {
    m.iter().fold(S::zero(), |s, row| s + norm_sq(row))
}

/// Largest deviation of the contraction identity `(C₂₄V)(f_a,f_c) = 3(A_{f_a},A_{f_c})`.
pub fn c24_identity_residual<S: Scalar>(jet: &FrameJet<S>) -> f64 {
    let h = jet.horizontal_dim();
    let c = c24_contract(&jet.v_tensor(), h);
    let (a, _) = jet.pairings();
    let mut worst = 0.0_f64;
    for i in 0..h {
        for k in 0..h {
            let r = c[i][k].clone() - S::from_i64(3) * a[i][k].clone();
            worst = worst.max(r.magnitude());
        }
    }
    worst
}

fn dot<S: Scalar>(u: &[S], v: &[S]) -> S {
    u.iter().zip(v).fold(S::zero(), |s, (a, b)| s + a.clone() * b.clone())
}

fn add<S: Scalar>(u: &[S], v: &[S]) -> Vec<S> {
    u.iter().zip(v).map(|(a, b)| a.clone() + b.clone()).collect()
}

/// Bott-connection curvature `g(R∇(f_a,f_b)f_d, f_c)` from frame-constant data,
/// with `∇_X s = h∇_X s` for horizontal `X` and `∇_U s = h[U, s]` for
/// vertical `U`.
pub(crate) fn bott_curvature_constant<S: Scalar>(jet: &FrameJet<S>) -> Vec<S> {
    let m = jet.dim();
    let n = jet.n();
    // omega(c, a, b) = g(∇_{X_c} f_a, f_b), horizontal a and b given as frame indices
    let omega = |c: usize, a: usize, b: usize| -> S {
        if jet.is_vertical(c) {
            jet.gamma(c, a, b).clone() - jet.gamma(a, c, b).clone()
        } else {
            jet.gamma(c, a, b).clone()
        }
    };
    let structure = |p: usize, i: usize, j: usize| jet.gamma(i, j, p).clone() - jet.gamma(j, i, p).clone();
    jet.horizontal_array(|a, b, c, d| {
        let (i, j, k, l) = (n + a, n + b, n + c, n + d);
        let mut s = S::zero();
        for p in n..m {
            s = s + omega(j, l, p) * omega(i, p, k) - omega(i, l, p) * omega(j, p, k);
        }
        for p in 0..m {
            let cp = structure(p, i, j);
            if cp != S::zero() {
                s = s - cp * omega(p, l, k);
            }
        }
        s
    })
}
