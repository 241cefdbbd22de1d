use num_traits::{One, Zero};

use crate::exactalg::{RatFn, Rational};
use crate::frame_engine::{curvature_from_frame, koszul_connection, FrameAlgebra};

use super::{bott_curvature_constant, FoliationError, FrameJet};

/// Exact split of a constant-coefficient frame algebra whose frame is already
/// orthonormal and adapted: `X_i = e_i`, `X_{n+i} = φe_i`, `X_{2n} = ξ`.
#[derive(Clone, Debug)]
pub struct FrameSplit {
    jet: FrameJet<Rational>,
    bott: Vec<Rational>,
}

fn constant(r: &RatFn) -> Result<Rational, FoliationError> {
    r.constant_value().ok_or(FoliationError::NonConstant)
}

impl FrameSplit {
    /// Checks orthonormality and, when contact data is present, `η(e_i) = 0`,
    /// `φe_i = f_i`, and that `ξ` sits last.
    pub fn from_algebra(alg: &FrameAlgebra, n: usize) -> Result<Self, FoliationError> {
        let m = 2 * n + 1;
        if alg.dim() != m {
            return Err(FoliationError::FrameSize { expected: m, got: alg.dim() });
        }
        for i in 0..m {
            for j in 0..m {
                let g = alg.metric(i, j).constant_value().ok_or(FoliationError::NonConstant)?;
                let want = if i == j { Rational::one() } else { Rational::zero() };
                if g != want {
                    return Err(FoliationError::NotOrthonormal(i, j));
                }
            }
        }
        if let Some(cd) = alg.contact() {
            if cd.reeb_index != 2 * n {
                return Err(FoliationError::FrameSize { expected: 2 * n, got: cd.reeb_index });
            }
            for i in 0..n {
                if !cd.eta[i].is_zero() {
                    return Err(FoliationError::NotLegendre(i));
                }
                let image_ok = (0..m).all(|k| {
                    let want = if k == n + i { Rational::one() } else { Rational::zero() };
                    cd.phi[k][i] == want
                });
                if !image_ok {
                    return Err(FoliationError::PhiMismatch(i));
                }
            }
        }
        let conn = koszul_connection(alg)?;
        let curv = curvature_from_frame(alg, &conn);
        let mut gamma = Vec::with_capacity(m.pow(3));
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    gamma.push(constant(conn.get(i, j, k))?);
                }
            }
        }
        let mut riem = Vec::with_capacity(m.pow(4));
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for l in 0..m {
                        riem.push(constant(curv.get(i, j, k, l))?);
                    }
                }
            }
        }
        let zero_jet = FrameJet::new(n, gamma.clone(), riem.clone(), vec![Rational::zero(); m * m])?;
        let h = zero_jet.mean_curvature();
        // H has constant frame coefficients, so ∇_{X_c} H = Σ_p H_p ∇_{X_c} X_p
        let mut nabla_h = Vec::with_capacity(m * m);
        for c in 0..m {
            for k in 0..m {
                nabla_h.push((0..m).fold(Rational::zero(), |s, p| s + &h[p] * zero_jet.gamma(c, p, k)));
            }
        }
        let jet = FrameJet::new(n, gamma, riem, nabla_h)?;
        let bott = bott_curvature_constant(&jet);
        Ok(FrameSplit { jet, bott })
    }

    pub fn jet(&self) -> &FrameJet<Rational> {
        &self.jet
    }

    /// Curvature of the Bott connection computed directly from its connection
    /// coefficients, as a horizontal 4-array in the `riem` convention.
    pub fn bott_curvature(&self) -> &[Rational] {
        &self.bott
    }
}
