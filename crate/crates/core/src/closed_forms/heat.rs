use crate::exactalg::{Poly, Rational, Var};

use super::frame::{frame_curvature, AdaptedFrame};
use super::SasakiParams;

fn vol() -> Poly {
    Poly::var(Var::Vol)
}

/// Laplace heat coefficients `a_0, a_1, a_2` as polynomials in `c` and `Vol`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ACoeffs {
    pub a0: Poly,
    pub a1: Poly,
    pub a2: Poly,
}

/// Laplace and Jacobi-operator heat coefficients over `{c, Vol, IA, IV}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeatCoeffs {
    pub a0: Poly,
    pub a1: Poly,
    pub a2: Poly,
    pub b0: Poly,
    pub b1: Poly,
    pub b2: Poly,
}

/// Generic small-time coefficients for pointwise-constant invariants:
/// `a_1 = τ/6 Vol`, `a_2 = (2‖R‖² - 2‖ρ‖² + 5τ²)/360 Vol`.
pub fn gilkey_a_coeffs(tau: &Poly, norm_r2: &Poly, norm_ric2: &Poly) -> ACoeffs {
    let a2 = (norm_r2 * Poly::int(2) - norm_ric2 * Poly::int(2) + tau.pow(2) * Poly::int(5))
        * Poly::frac(1, 360);
    ACoeffs {
        a0: vol(),
        a1: tau * Poly::frac(1, 6) * vol(),
        a2: a2 * vol(),
    }
}

/// Integral of the transverse scalar curvature of a minimal foliation:
/// `3 IA + n((c+3)(n-1)+8)/4 Vol`.
pub fn integrated_tau_nabla(params: &SasakiParams) -> Poly {
    let pointwise = tau_nabla_minimal(params, &Poly::zero());
    Poly::var(Var::IntA) * Poly::int(3) + pointwise * vol()
}

/// Tabulated heat coefficients of a Riemannian Legendre foliation: the explicit
/// `a`-polynomials, `b_1 = (n+1)a_1 + ∫τ∇` and the fully reduced `b_2`.
pub fn space_form_heat_coeffs(params: &SasakiParams) -> HeatCoeffs {
    let n = params.n() as i64;
    let np = params.n_poly();
    let c = params.c();
    let cp3 = c + Poly::int(3);
    let cm1 = c - Poly::int(1);
    let a1 = &np * (Poly::int(2 * n + 1) * &cp3 + &cm1) * Poly::frac(1, 12) * vol();
    let a2_bracket = Poly::int(64 - 32 * n)
        + cp3.pow(2) * Poly::int(-2 + 9 * n + 16 * n * n + 20 * n.pow(3))
        + &cp3 * &cm1 * Poly::int(12 + 2 * n + 20 * n * n)
        + cm1.pow(2) * Poly::int(2 + 17 * n);
    let a2 = &np * Poly::frac(1, 1440) * a2_bracket * vol();
    let b1 = Poly::int(n + 1) * &a1 + integrated_tau_nabla(params);
    let b2 = super::jacobi_chain::printed_b2(params);
    HeatCoeffs {
        a0: vol(),
        a1,
        a2,
        b0: Poly::int(n + 1) * vol(),
        b1,
        b2,
    }
}

/// Transverse scalar curvature of a minimal foliation in terms of `‖A‖²`.
pub fn tau_nabla_minimal(params: &SasakiParams, alpha: &Poly) -> Poly {
    let n = params.n() as i64;
    alpha * Poly::int(3)
        + params.n_poly()
            * Poly::frac(1, 4)
            * ((params.c() + Poly::int(3)) * Poly::int(n - 1) + Poly::int(8))
}

/// `Σ_{i≠j} K(φe_i,φe_j) + 2 Σ_i K(φe_i,ξ) + 3‖A‖²` read off the frame tensor.
pub fn tau_nabla_frame_sum(params: &SasakiParams, alpha: &Poly) -> Poly {
    let fc = frame_curvature(params);
    let f = fc.frame();
    let n = params.n();
    let mut s = alpha * Poly::int(3);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += fc.get(f.phi_leaf(i), f.phi_leaf(j), f.phi_leaf(i), f.phi_leaf(j));
            }
        }
        s += fc.get(f.phi_leaf(i), f.reeb(), f.phi_leaf(i), f.reeb()) * Poly::int(2);
    }
    s
}

/// Closed final line `(c+3)n(n-1)/4 + 2n + 3‖A‖²` of the frame-sum evaluation.
pub fn tau_nabla_frame_line(params: &SasakiParams, alpha: &Poly) -> Poly {
    let n = params.n() as i64;
    (params.c() + Poly::int(3)) * Poly::frac(n * (n - 1), 4) + Poly::int(2 * n) + alpha * Poly::int(3)
}

/// Tabulated mixed scalar curvature `(c+1)n`.
pub fn mixed_scalar(params: &SasakiParams) -> Poly {
    (params.c() + Poly::int(1)) * params.n_poly()
}

/// Mixed scalar curvature `Σ_{i,j} R(e_i,φe_j,e_i,φe_j) + Σ_i R(e_i,ξ,e_i,ξ)`
/// summed over the frame tensor.
pub fn mixed_scalar_frame_sum(params: &SasakiParams) -> Poly {
    let fc = frame_curvature(params);
    let f: AdaptedFrame = fc.frame();
    let n = params.n();
    let mut s = Poly::zero();
    for i in 0..n {
        for j in 0..n {
            s += fc.get(f.leaf(i), f.phi_leaf(j), f.leaf(i), f.phi_leaf(j));
        }
        s += fc.get(f.leaf(i), f.reeb(), f.leaf(i), f.reeb());
    }
    s
}

/// Tabulated difference `‖A‖² - ‖T‖² = n(c+1)` for minimal leaves.
pub fn a_t_relation(params: &SasakiParams) -> Poly {
    mixed_scalar(params)
}

/// Constants claimed for totally geodesic foliations on a curvature-one ambient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotallyGeodesicConstants {
    pub c24v_sq: Rational,
    pub v_sq: Rational,
    pub combo: Rational,
}

/// Claimed values `‖C₂₄V‖² = 18n²`, `‖V‖² = 18n² + 18n` and the integrand
/// `6‖C₂₄V‖² - ‖V‖² = 90n² - 18n`.
pub fn totally_geodesic_claims(n: usize) -> TotallyGeodesicConstants {
    let n = n as i64;
    TotallyGeodesicConstants {
        c24v_sq: Rational::from_integer((18 * n * n).into()),
        v_sq: Rational::from_integer((18 * n * n + 18 * n).into()),
        combo: Rational::from_integer((90 * n * n - 18 * n).into()),
    }
}

/// The same three constants recomputed from the pairings `σ_i = n`, `σ_ij = 0`
/// and `R∇ = 4·(constant curvature)` on the horizontal distribution.
pub fn totally_geodesic_from_pairings(n: usize) -> TotallyGeodesicConstants {
    let ni = n as i64;
    // ‖C₂₄V‖² = 9Σσ_i² + 18Σσ_ij² + 9n²
    let c24 = 9 * ni * ni * ni + 9 * ni * ni;
    // V = 3(δ_ik δ_jl - δ_il δ_jk) over n+1 horizontal directions
    let h = ni + 1;
    let v = 9 * 2 * h * (h - 1);
    TotallyGeodesicConstants {
        c24v_sq: Rational::from_integer(c24.into()),
        v_sq: Rational::from_integer(v.into()),
        combo: Rational::from_integer((6 * c24 - v).into()),
    }
}

/// Quantities forced to coincide for isospectral pairs, in order
/// `(dim, Vol, c, ∫‖A‖², ∫‖T‖², ∫(6‖C₂₄V‖² - ‖V‖²))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantVector {
    pub dim: usize,
    pub vol: Rational,
    pub c: Poly,
    pub int_a: Rational,
    pub int_t: Poly,
    pub int_v: Rational,
}

/// Builds the invariant tuple; `∫‖T‖²` follows from `‖A‖² - ‖T‖² = n(c+1)`.
pub fn theorem_invariant_vector(
    params: &SasakiParams,
    int_a: Rational,
    int_v: Rational,
    vol: Rational,
) -> InvariantVector {
    let int_t = Poly::constant(int_a.clone()) - a_t_relation(params).scale(&vol);
    InvariantVector {
        dim: params.dim(),
        vol,
        c: params.c().clone(),
        int_a,
        int_t,
        int_v,
    }
}
