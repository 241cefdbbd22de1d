//! Exact Levi-Civita geometry of a global frame with constant structure constants
//! and constant metric coefficients, such as `SU(2) = S³` and its Berger
//! deformations.

mod connection;
mod curvature;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactalg::{rat, AlgError, Poly, RatFn, Rational, Var};

pub use connection::{koszul_connection, ConnectionCoeffs};
pub use curvature::{curvature_from_frame, phi_sectional_curvature, sectional_curvature, CurvTensor4};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrameError {
    #[error("structure constants are not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("Jacobi identity fails for ({0}, {1}, {2})")]
    JacobiFails(usize, usize, usize),
    #[error("metric is not symmetric at ({0}, {1})")]
    MetricNotSymmetric(usize, usize),
    #[error("metric is not positive definite at a = {0}")]
    NotPositiveDefinite(String),
    #[error("metric is singular")]
    SingularMetric,
    #[error("deformation parameter must be positive, got {0}")]
    NonPositiveParameter(String),
    #[error("frame algebra carries no contact data")]
    MissingContactData,
    #[error("inconsistent contact data: {0}")]
    InconsistentContact(String),
    #[error("vector is not in the kernel of eta")]
    NotHorizontal,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// Values of `a` at which positive-definiteness of an `a`-dependent metric is tested.
pub const POSITIVITY_SAMPLES: [(i64, i64); 4] = [(1, 2), (1, 1), (2, 1), (3, 1)];

/// Contact structure on the frame: Reeb field and contact form in frame
/// coordinates, and the matrix of `φ` (`φ(X_j) = Σ_i phi[i][j] X_i`).
#[derive(Clone, Debug, PartialEq)]
pub struct ContactData {
    pub reeb_index: usize,
    pub reeb: Vec<RatFn>,
    pub eta: Vec<RatFn>,
    pub phi: Vec<Vec<Rational>>,
}

/// A frame `X_0..X_{m-1}` with `[X_i, X_j] = Σ_k c^k_ij X_k` and `g_ij = g(X_i, X_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameAlgebra {
    m: usize,
    /// `structure[k][i][j] = c^k_ij`
    structure: Vec<Vec<Vec<Rational>>>,
    metric: Vec<Vec<Poly>>,
    contact: Option<ContactData>,
}

impl FrameAlgebra {
    /// Validates antisymmetry, Jacobi, metric symmetry and positive-definiteness at
    /// sampled values of `a`.
    pub fn new(
        structure: Vec<Vec<Vec<Rational>>>,
        metric: Vec<Vec<Poly>>,
        contact: Option<ContactData>,
    ) -> Result<Self, FrameError> {
        let m = metric.len();
        let check_len = |got: usize| {
            if got == m {
                Ok(())
            } else {
                Err(FrameError::DimensionMismatch { expected: m, got })
            }
        };
        check_len(structure.len())?;
        for plane in &structure {
            check_len(plane.len())?;
            for row in plane {
                check_len(row.len())?;
            }
        }
        for row in &metric {
            check_len(row.len())?;
        }
        let alg = FrameAlgebra { m, structure, metric, contact };
        alg.check_antisymmetry()?;
        alg.check_jacobi()?;
        alg.check_metric()?;
        if let Some(cd) = &alg.contact {
            alg.check_contact(cd)?;
        }
        Ok(alg)
    }

    /// `S³ = SU(2)` with frame `(W, Y, ξ)`: `[W,Y] = 2ξ`, `[Y,ξ] = 2W`, `[ξ,W] = 2Y`,
    /// orthonormal metric, `φW = Y`, `φY = -W`.
    pub fn su2_round() -> Self {
        let mut c = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        let two = rat(2, 1);
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            c[k][i][j] = two.clone();
            c[k][j][i] = -two.clone();
        }
        let metric = (0..3)
            .map(|i| (0..3).map(|j| Poly::int(i64::from(i == j))).collect())
            .collect();
        let unit = |j: usize| (0..3).map(|i| RatFn::from(Poly::int(i64::from(i == j)))).collect();
        let mut phi = vec![vec![Rational::zero(); 3]; 3];
        phi[1][0] = Rational::one();
        phi[0][1] = -Rational::one();
        let contact = ContactData { reeb_index: 2, reeb: unit(2), eta: unit(2), phi };
        FrameAlgebra::new(c, metric, Some(contact)).expect("round su(2) data is consistent")
    }

    /// Flat abelian frame of dimension `m` with the identity metric.
    pub fn abelian(m: usize) -> Self {
        let c = vec![vec![vec![Rational::zero(); m]; m]; m];
        let metric = (0..m)
            .map(|i| (0..m).map(|j| Poly::int(i64::from(i == j))).collect())
            .collect();
        FrameAlgebra::new(c, metric, None).expect("abelian data is consistent")
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn structure_const(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.structure[k][i][j]
    }

    pub fn metric(&self, i: usize, j: usize) -> &Poly {
        &self.metric[i][j]
    }

    pub fn contact(&self) -> Option<&ContactData> {
        self.contact.as_ref()
    }

    /// `g(u, v)` for frame-coordinate vectors.
    pub fn inner(&self, u: &[RatFn], v: &[RatFn]) -> RatFn {
        let mut s = RatFn::zero();
        for i in 0..self.m {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.m {
                if v[j].is_zero() || self.metric[i][j].is_zero() {
                    continue;
                }
                s = s + &(&u[i] * &RatFn::from(self.metric[i][j].clone())) * &v[j];
            }
        }
        s
    }

    fn check_antisymmetry(&self) -> Result<(), FrameError> {
        for k in 0..self.m {
            for i in 0..self.m {
                for j in 0..self.m {
                    if self.structure[k][i][j] != -&self.structure[k][j][i] {
                        return Err(FrameError::NotAntisymmetric(i, j));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_jacobi(&self) -> Result<(), FrameError> {
        let m = self.m;
        let c = &self.structure;
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    for q in 0..m {
                        let mut s = Rational::zero();
                        for p in 0..m {
                            s += &c[p][i][j] * &c[q][p][k]
                                + &c[p][j][k] * &c[q][p][i]
                                + &c[p][k][i] * &c[q][p][j];
                        }
                        if !s.is_zero() {
                            return Err(FrameError::JacobiFails(i, j, k));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_metric(&self) -> Result<(), FrameError> {
        for i in 0..self.m {
            for j in 0..self.m {
                if self.metric[i][j] != self.metric[j][i] {
                    return Err(FrameError::MetricNotSymmetric(i, j));
                }
            }
        }
        let depends_on_a = self.metric.iter().flatten().any(|p| p.degree_in(Var::A) > 0);
        let samples: Vec<Rational> = if depends_on_a {
            POSITIVITY_SAMPLES.iter().map(|&(p, q)| rat(p, q)).collect()
        } else {
            vec![Rational::one()]
        };
        for a in samples {
            let bind = std::collections::BTreeMap::from([(Var::A, a.clone())]);
            let g: Vec<Vec<Rational>> = self
                .metric
                .iter()
                .map(|row| row.iter().map(|p| p.eval(&bind)).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()?;
            if !leading_minors_positive(g) {
                return Err(FrameError::NotPositiveDefinite(a.to_string()));
            }
        }
        Ok(())
    }

    fn check_contact(&self, cd: &ContactData) -> Result<(), FrameError> {
        let m = self.m;
        let bad = |s: &str| Err(FrameError::InconsistentContact(s.to_string()));
        if cd.reeb.len() != m || cd.eta.len() != m || cd.phi.len() != m || cd.reeb_index >= m {
            return bad("dimension mismatch");
        }
        let eta_of = |v: &[RatFn]| -> RatFn {
            cd.eta.iter().zip(v).fold(RatFn::zero(), |acc, (a, b)| acc + a * b)
        };
        if eta_of(&cd.reeb) != RatFn::one() {
            return bad("eta(xi) != 1");
        }
        if self.inner(&cd.reeb, &cd.reeb) != RatFn::one() {
            return bad("g(xi, xi) != 1");
        }
        for j in 0..m {
            let ej = unit_vector(m, j);
            if self.inner(&cd.reeb, &ej) != cd.eta[j] {
                return bad("eta is not the metric dual of xi");
            }
        }
        let phi_of = |v: &[RatFn]| apply_phi(&cd.phi, v);
        if phi_of(&cd.reeb).iter().any(|x| !x.is_zero()) {
            return bad("phi(xi) != 0");
        }
        for j in 0..m {
            let ej = unit_vector(m, j);
            let phi2 = phi_of(&phi_of(&ej));
            for i in 0..m {
                let expect = &(&cd.eta[j] * &cd.reeb[i]) - &ej[i];
                if phi2[i] != expect {
                    return bad("phi^2 != -I + eta (x) xi");
                }
            }
        }
        Ok(())
    }

    /// `ḡ = a g + a(a-1) η⊗η`, `ξ̄ = ξ/a`, `η̄ = aη`, `φ̄ = φ`; structure constants
    /// are unchanged. `a` is either a positive rational or the symbol `a`.
    pub fn d_homothetic_deform(&self, a: &Poly) -> Result<FrameAlgebra, FrameError> {
        let cd = self.contact.as_ref().ok_or(FrameError::MissingContactData)?;
        match a.constant_value() {
            Some(v) if !v.is_positive() => {
                return Err(FrameError::NonPositiveParameter(v.to_string()))
            }
            Some(_) => {}
            None if *a == Poly::var(Var::A) => {}
            None => return Err(FrameError::NonPositiveParameter(a.to_string())),
        }
        let eta: Vec<Poly> = cd
            .eta
            .iter()
            .map(|e| e.as_poly().ok_or_else(|| FrameError::InconsistentContact("eta is not polynomial".into())))
            .collect::<Result<_, _>>()?;
        let a_sq_minus_a = a * &(a - Poly::one());
        let metric = (0..self.m)
            .map(|i| {
                (0..self.m)
                    .map(|j| a * &self.metric[i][j] + &a_sq_minus_a * &eta[i] * &eta[j])
                    .collect()
            })
            .collect();
        let a_fn = RatFn::from(a.clone());
        let reeb = cd
            .reeb
            .iter()
            .map(|x| x.div(&a_fn))
            .collect::<Result<Vec<_>, _>>()?;
        let eta_bar = cd.eta.iter().map(|e| e * &a_fn).collect();
        let contact = ContactData {
            reeb_index: cd.reeb_index,
            reeb,
            eta: eta_bar,
            phi: cd.phi.clone(),
        };
        FrameAlgebra::new(self.structure.clone(), metric, Some(contact))
    }
}

pub(crate) fn unit_vector(m: usize, j: usize) -> Vec<RatFn> {
    (0..m)
        .map(|i| if i == j { RatFn::one() } else { RatFn::zero() })
        .collect()
}

pub(crate) fn apply_phi(phi: &[Vec<Rational>], v: &[RatFn]) -> Vec<RatFn> {
    phi.iter()
        .map(|row| {
            row.iter().zip(v).fold(RatFn::zero(), |acc, (p, x)| {
                if p.is_zero() {
                    acc
                } else {
                    acc + x * &RatFn::from(Poly::constant(p.clone()))
                }
            })
        })
        .collect()
}

/// Sylvester's criterion by exact Gaussian elimination.
fn leading_minors_positive(mut g: Vec<Vec<Rational>>) -> bool {
    let m = g.len();
    for k in 0..m {
        if !g[k][k].is_positive() {
            return false;
        }
        for i in k + 1..m {
            let f = &g[i][k] / &g[k][k];
            for j in k..m {
                let v = &f * &g[k][j];
                g[i][j] -= v;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_su2_brackets() {
        let alg = FrameAlgebra::su2_round();
        // [W, ξ] = -2Y
        assert_eq!(alg.structure_const(1, 0, 2), &rat(-2, 1));
        assert_eq!(alg.structure_const(0, 1, 2), &rat(2, 1));
        assert_eq!(alg.structure_const(2, 0, 1), &rat(2, 1));
    }

    #[test]
    fn rejects_bad_structure() {
        let mut c = vec![vec![vec![Rational::zero(); 2]; 2]; 2];
        c[0][0][1] = rat(1, 1);
        let g = vec![vec![Poly::one(), Poly::zero()], vec![Poly::zero(), Poly::one()]];
        assert_eq!(
            FrameAlgebra::new(c.clone(), g.clone(), None),
            Err(FrameError::NotAntisymmetric(0, 1))
        );
        c[0][1][0] = rat(-1, 1);
        assert!(FrameAlgebra::new(c, g, None).is_ok());
        let c = vec![vec![vec![Rational::zero(); 2]; 2]; 2];
        let g = vec![vec![Poly::one(), Poly::int(2)], vec![Poly::int(2), Poly::one()]];
        assert!(matches!(FrameAlgebra::new(c, g, None), Err(FrameError::NotPositiveDefinite(_))));
    }

    #[test]
    fn jacobi_violation_detected() {
        // so(3)-like brackets with one sign flipped violate Jacobi
        let mut c = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        for (i, j, k, v) in [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)] {
            c[k][i][j] = rat(v, 1);
            c[k][j][i] = rat(-v, 1);
        }
        c[0][0][2] = rat(1, 1);
        c[0][2][0] = rat(-1, 1);
        let g = (0..3).map(|i| (0..3).map(|j| Poly::int(i64::from(i == j))).collect()).collect();
        assert!(matches!(FrameAlgebra::new(c, g, None), Err(FrameError::JacobiFails(..))));
    }

    #[test]
    fn deformation_metric_and_contact() {
        let round = FrameAlgebra::su2_round();
        assert_eq!(round.d_homothetic_deform(&Poly::one()).unwrap(), round);
        let a = Poly::var(Var::A);
        let b = round.d_homothetic_deform(&a).unwrap();
        assert_eq!(b.metric(0, 0), &a);
        assert_eq!(b.metric(1, 1), &a);
        assert_eq!(b.metric(2, 2), &a.pow(2));
        let cd = b.contact().unwrap();
        let eta_xi = cd.eta.iter().zip(&cd.reeb).fold(RatFn::zero(), |s, (e, x)| s + e * x);
        assert_eq!(eta_xi, RatFn::one());
        assert_eq!(b.inner(&cd.reeb, &cd.reeb), RatFn::one());
        assert!(matches!(
            round.d_homothetic_deform(&Poly::int(-1)),
            Err(FrameError::NonPositiveParameter(_))
        ));
        assert!(matches!(
            FrameAlgebra::abelian(3).d_homothetic_deform(&a),
            Err(FrameError::MissingContactData)
        ));
    }
}
