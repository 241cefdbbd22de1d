use crate::exactalg::{Poly, Rational};
use num_traits::{One, Zero};

use super::frame::{AdaptedFrame, FrameCurvature};
use super::{ClosedFormError, SasakiParams};

/// Pointwise contact-metric data on a basis `X_0..X_{m-1}`: the Gram matrix, the
/// coordinates of `ξ`, the values `η(X_j)` and the matrix of `φ`
/// (`φ(X_j) = Σ_i phi[i][j] X_i`).
#[derive(Clone, Debug, PartialEq)]
pub struct StructureData {
    pub gram: Vec<Vec<Rational>>,
    pub xi: Vec<Rational>,
    pub eta: Vec<Rational>,
    pub phi: Vec<Vec<Rational>>,
}

impl StructureData {
    /// Structure tensors expressed in the adapted orthonormal frame.
    pub fn adapted(n: usize) -> Self {
        let f = AdaptedFrame { n };
        let m = f.dim();
        let zero = Rational::zero();
        let one = Rational::one();
        let mut gram = vec![vec![zero.clone(); m]; m];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = one.clone();
        }
        let mut xi = vec![zero.clone(); m];
        xi[f.reeb()] = one.clone();
        let eta = xi.clone();
        let mut phi = vec![vec![zero.clone(); m]; m];
        for i in 0..n {
            phi[f.phi_leaf(i)][f.leaf(i)] = one.clone();
            phi[f.leaf(i)][f.phi_leaf(i)] = -one.clone();
        }
        StructureData { gram, xi, eta, phi }
    }

    pub fn dim(&self) -> usize {
        self.xi.len()
    }

    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                s += ui * &self.gram[i][j] * vj;
            }
        }
        s
    }

    pub fn eta_of(&self, v: &[Rational]) -> Rational {
        self.eta.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn phi_of(&self, v: &[Rational]) -> Vec<Rational> {
        self.phi
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Checks the contact-metric compatibility conditions exactly.
    pub fn validate(&self) -> Result<(), ClosedFormError> {
        let m = self.dim();
        let bad = |msg: &str| Err(ClosedFormError::InconsistentStructure(msg.to_string()));
        if self.gram.len() != m
            || self.gram.iter().any(|r| r.len() != m)
            || self.eta.len() != m
            || self.phi.len() != m
            || self.phi.iter().any(|r| r.len() != m)
        {
            return bad("dimension mismatch");
        }
        for i in 0..m {
            for j in 0..m {
                if self.gram[i][j] != self.gram[j][i] {
                    return bad("metric is not symmetric");
                }
            }
        }
        if !self.inner(&self.xi, &self.xi).is_one() {
            return bad("g(xi, xi) != 1");
        }
        if !self.eta_of(&self.xi).is_one() {
            return bad("eta(xi) != 1");
        }
        let basis = |j: usize| {
            let mut e = vec![Rational::zero(); m];
            e[j] = Rational::one();
            e
        };
        for j in 0..m {
            let ej = basis(j);
            if self.eta_of(&ej) != self.inner(&self.xi, &ej) {
                return bad("eta is not the metric dual of xi");
            }
        }
        if self.phi_of(&self.xi).iter().any(|v| !v.is_zero()) {
            return bad("phi(xi) != 0");
        }
        for j in 0..m {
            let ej = basis(j);
            let phi2 = self.phi_of(&self.phi_of(&ej));
            let eta_j = self.eta_of(&ej);
            for i in 0..m {
                let expect = -&ej[i] + &eta_j * &self.xi[i];
                if phi2[i] != expect {
                    return bad("phi^2 != -I + eta (x) xi");
                }
            }
            for k in 0..m {
                let ek = basis(k);
                let lhs = self.inner(&self.phi_of(&ej), &self.phi_of(&ek));
                let rhs = &self.gram[j][k] - &eta_j * self.eta_of(&ek);
                if lhs != rhs {
                    return bad("g(phi X, phi Y) != g(X, Y) - eta(X) eta(Y)");
                }
            }
        }
        Ok(())
    }
}

fn scaled(v: &[Rational], s: &Rational) -> Vec<Rational> {
    v.iter().map(|x| x * s).collect()
}

fn axpy(acc: &mut [Poly], coeff: &Poly, v: &[Rational]) {
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += coeff.scale(x);
        }
    }
}

/// `R(X,Y)Z` on a space form of constant φ-sectional curvature, expanded from the
/// metric, `η`, `ξ` and `φ` alone. The result is a coordinate vector in the basis of
/// `data`.
pub fn curvature_closed_form(
    params: &SasakiParams,
    data: &StructureData,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<Vec<Poly>, ClosedFormError> {
    data.validate()?;
    let m = data.dim();
    if x.len() != m || y.len() != m || z.len() != m {
        return Err(ClosedFormError::InconsistentStructure(
            "vector length does not match structure dimension".into(),
        ));
    }
    Ok(curvature_unchecked(params, data, x, y, z))
}

fn curvature_unchecked(
    params: &SasakiParams,
    data: &StructureData,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Vec<Poly> {
    let m = data.dim();
    let kappa = params.kappa();
    let mu = params.mu();
    let phi_x = data.phi_of(x);
    let phi_y = data.phi_of(y);
    let phi_z = data.phi_of(z);
    let gyz = data.inner(y, z);
    let gxz = data.inner(x, z);
    let (ex, ey, ez) = (data.eta_of(x), data.eta_of(y), data.eta_of(z));

    let mut out = vec![Poly::zero(); m];
    axpy(&mut out, &kappa, &scaled(x, &gyz));
    axpy(&mut out, &kappa, &scaled(y, &-&gxz));

    let mut inner = vec![Rational::zero(); m];
    let mut add = |v: &[Rational], s: Rational| {
        for (a, b) in inner.iter_mut().zip(v) {
            *a += b * &s;
        }
    };
    add(&phi_x, data.inner(z, &phi_y));
    add(&phi_y, -data.inner(z, &phi_x));
    add(&phi_z, Rational::from_integer(2.into()) * data.inner(x, &phi_y));
    add(&data.xi, -&gyz * &ex);
    add(&data.xi, &gxz * &ey);
    add(x, -&ey * &ez);
    add(y, &ex * &ez);
    axpy(&mut out, &mu, &inner);
    out
}

/// Frame tensor `R_abcd = g(R(X_a,X_b)X_d, X_c)` assembled from
/// [`curvature_closed_form`] on the adapted frame.
pub fn closed_form_frame_tensor(params: &SasakiParams) -> Result<FrameCurvature, ClosedFormError> {
    let data = StructureData::adapted(params.n());
    data.validate()?;
    let m = data.dim();
    let basis = |j: usize| {
        let mut e = vec![Rational::zero(); m];
        e[j] = Rational::one();
        e
    };
    let mut fc = FrameCurvature::zero(params.n());
    for a in 0..m {
        for b in 0..m {
            for d in 0..m {
                let v = curvature_unchecked(params, &data, &basis(a), &basis(b), &basis(d));
                for (c, comp) in v.into_iter().enumerate() {
                    if !comp.is_zero() {
                        fc.set(a, b, c, d, comp);
                    }
                }
            }
        }
    }
    Ok(fc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::frame_curvature;
    use crate::exactalg::{rat, Var};

    fn unit(m: usize, j: usize) -> Vec<Rational> {
        let mut e = vec![Rational::zero(); m];
        e[j] = Rational::one();
        e
    }

    fn dot(u: &[Poly], v: &[Rational]) -> Poly {
        u.iter().zip(v).map(|(a, b)| a.scale(b)).sum()
    }

    #[test]
    fn agrees_with_tabulated_frame_tensor() {
        for n in 1..=3 {
            let params = SasakiParams::symbolic(n).unwrap();
            assert_eq!(closed_form_frame_tensor(&params).unwrap(), frame_curvature(&params));
        }
    }

    #[test]
    fn equal_arguments_give_zero() {
        let params = SasakiParams::symbolic(2).unwrap();
        let data = StructureData::adapted(2);
        let x: Vec<Rational> = (0..5).map(|k| rat(k as i64 + 1, 3)).collect();
        let z: Vec<Rational> = (0..5).map(|k| rat(2 - k as i64, 5)).collect();
        let r = curvature_closed_form(&params, &data, &x, &x, &z).unwrap();
        assert!(r.iter().all(Poly::is_zero));
    }

    #[test]
    fn phi_sectional_and_reeb_sectional_values() {
        let params = SasakiParams::symbolic(2).unwrap();
        let data = StructureData::adapted(2);
        // a unit vector in Ker eta mixing leaf and phi-leaf directions
        let x = vec![rat(3, 5), rat(0, 1), rat(0, 1), rat(4, 5), rat(0, 1)];
        let phi_x = data.phi_of(&x);
        let r = curvature_closed_form(&params, &data, &x, &phi_x, &phi_x).unwrap();
        assert_eq!(dot(&r, &x), Poly::var(Var::C));
        let xi = unit(5, 4);
        let r = curvature_closed_form(&params, &data, &x, &xi, &xi).unwrap();
        assert_eq!(dot(&r, &x), Poly::one());
    }

    #[test]
    fn rejects_inconsistent_data() {
        let params = SasakiParams::symbolic(1).unwrap();
        let mut data = StructureData::adapted(1);
        data.gram[2][2] = rat(2, 1);
        let e = unit(3, 0);
        assert!(matches!(
            curvature_closed_form(&params, &data, &e, &e, &e),
            Err(ClosedFormError::InconsistentStructure(_))
        ));
        let mut data = StructureData::adapted(1);
        data.phi[0][1] = rat(1, 1);
        assert!(data.validate().is_err());
    }
}
