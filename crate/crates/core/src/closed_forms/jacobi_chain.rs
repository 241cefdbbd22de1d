//! The transverse-curvature chain leading to `b_1` and `b_2` for a minimal
//! Riemannian Legendre foliation, built twice: once from its ingredients and once
//! from the tabulated final expressions.

use std::collections::BTreeMap;


use crate::exactalg::{AlgError, Poly, Var};

use super::frame::{brute_force_norms, frame_curvature, frame_ricci, AdaptedFrame, FrameCurvature};
use super::heat::{gilkey_a_coeffs, integrated_tau_nabla, space_form_heat_coeffs, tau_nabla_minimal};
use super::{ClosedFormError, SasakiParams};

/// Formal pointwise symbols of the O'Neill tensor `A` over the horizontal frame
/// `f_0..f_n` (0-based; `f_n = ξ`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FoliationSymbols {
    pub n: usize,
}

impl FoliationSymbols {
    pub fn alpha(&self) -> Poly {
        Poly::var(Var::Alpha)
    }

    pub fn vnorm(&self) -> Poly {
        Poly::var(Var::VNorm)
    }

    /// `σ_i = (A_{φe_i}, A_{φe_i})` for 0-based `i < n`.
    pub fn sigma(&self, i: usize) -> Poly {
        Poly::var(Var::Sigma(i as u8 + 1))
    }

    /// Pairing matrix `(A_{f_a}, A_{f_b})` with `(A_ξ, A_ξ) = n`.
    pub fn pairing(&self, a: usize, b: usize) -> Poly {
        let n = self.n;
        if a == b {
            if a < n {
                self.sigma(a)
            } else {
                Poly::int(n as i64)
            }
        } else {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            Poly::var(Var::SigmaPair(i as u8 + 1, j as u8 + 1))
        }
    }

    pub fn sum_sigma(&self) -> Poly {
        (0..self.n).map(|i| self.sigma(i)).sum()
    }

    pub fn sum_sigma_sq(&self) -> Poly {
        (0..self.n).map(|i| self.sigma(i).pow(2)).sum()
    }

    pub fn sum_pair_sq(&self) -> Poly {
        let mut s = Poly::zero();
        for i in 0..=self.n {
            for j in i + 1..=self.n {
                s += self.pairing(i, j).pow(2);
            }
        }
        s
    }

    /// `‖A‖² = Σσ_i + n`.
    pub fn alpha_value(&self) -> Poly {
        self.sum_sigma() + Poly::int(self.n as i64)
    }

    pub fn eliminate_alpha(&self, p: &Poly) -> Poly {
        p.substitute(Var::Alpha, &self.alpha_value())
    }

    /// `|A_{f_a} f_b|²` for `a < b`; pairs involving `ξ` equal 1 because
    /// `A_{φe_i} ξ = -e_i`.
    fn a_pair(&self, a: usize, b: usize) -> Poly {
        if b == self.n {
            Poly::one()
        } else {
            Poly::var(Var::APair(a as u8 + 1, b as u8 + 1))
        }
    }

    /// `g(A_{f_a} f_b, A_{f_c} f_d)` when it is expressible by the pair symbols.
    fn a_inner(&self, a: usize, b: usize, c: usize, d: usize) -> Option<Poly> {
        if a == b || c == d {
            return Some(Poly::zero());
        }
        let (p, s1) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
        let (q, s2) = if c < d { ((c, d), 1) } else { ((d, c), -1) };
        (p == q).then(|| self.a_pair(p.0, p.1) * Poly::int(s1 * s2))
    }

    /// `V(f_a,f_b,f_c,f_d)` where it reduces to pair symbols.
    fn v_entry(&self, a: usize, b: usize, c: usize, d: usize) -> Option<Poly> {
        Some(
            self.a_inner(a, b, c, d)? * Poly::int(2)
                - self.a_inner(b, c, a, d)?
                - self.a_inner(c, a, b, d)?,
        )
    }
}

/// A tabulated expression, its rederivation, and `printed - derived` with `‖A‖²`
/// eliminated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedVsDerived {
    pub printed: Poly,
    pub derived: Poly,
    pub residual: Poly,
}

impl PrintedVsDerived {
    fn new(syms: &FoliationSymbols, printed: Poly, derived: Poly) -> Self {
        let residual = syms.eliminate_alpha(&(&printed - &derived));
        PrintedVsDerived { printed, derived, residual }
    }

    pub fn agrees(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiChain {
    pub n: usize,
    pub d: Poly,
    /// `Σ_{a,b} ρ(f_a,f_b)²` from the frame Ricci tensor vs its closed form.
    pub l: PrintedVsDerived,
    /// Row-major `(n+1)×(n+1)` matrix `S(f_a,f_b) = Σ_k R(f_a,e_k,f_b,e_k)`.
    pub s_matrix: Vec<Poly>,
    pub s_matrix_printed: Vec<Poly>,
    /// `ρ∇ = ρ + 2(A,A) + (T,T)` with `(T,T)` eliminated through `S`.
    pub rho_nabla: Vec<Poly>,
    pub rho_nabla_sq: PrintedVsDerived,
    /// The tabulated `‖ρ∇‖²` against the same grouping with `‖T‖²` substituted
    /// as `‖A‖² - n(c+1)`.
    pub rho_nabla_route: PrintedVsDerived,
    /// `E` summed from its definition vs its expanded form.
    pub e: PrintedVsDerived,
    /// `l + 8n² + E` vs the tabulated grouping `nd(d+6) - 6d‖A‖² + 16n² + ...`.
    pub grouping: PrintedVsDerived,
    pub l_prime: PrintedVsDerived,
    /// `Σ R(f..)·V(f..)` after reducing pair symbols.
    pub cross_term: Poly,
    pub r_nabla_sq: PrintedVsDerived,
    pub c24v_sq: PrintedVsDerived,
    pub b1: PrintedVsDerived,
    pub b2: PrintedVsDerived,
    /// The tabulated `b_2` against the assembly of the tabulated intermediates.
    pub b2_assembly: PrintedVsDerived,
}

fn horizontal_tensor(fc: &FrameCurvature, a: usize, b: usize, c: usize, d: usize) -> &Poly {
    let f = fc.frame();
    fc.get(f.horizontal(a), f.horizontal(b), f.horizontal(c), f.horizontal(d))
}

fn sum_of_squares(entries: &[Poly]) -> Poly {
    entries.iter().map(|p| p * p).sum()
}

/// Tabulated `‖ρ∇‖²`, with the coefficient of `(n(c+3)+c-1)` as given.
fn printed_rho_nabla_sq(params: &SasakiParams, syms: &FoliationSymbols, last: &Poly) -> Poly {
    let np = params.n_poly();
    let d = params.d();
    let alpha = syms.alpha();
    syms.sum_sigma_sq() * Poly::int(9)
        + syms.sum_pair_sq() * Poly::int(18)
        + &np * &d * (&d + Poly::int(6))
        - &d * &alpha * Poly::int(6)
        + np.pow(2) * Poly::int(16)
        + params.ricci_d() * Poly::int(2) * (alpha * Poly::int(3) - last)
        + np * params.ricci_d().pow(2)
}

fn printed_r_nabla_sq(params: &SasakiParams, syms: &FoliationSymbols) -> Poly {
    let n = params.n() as i64;
    let cp3 = params.c() + Poly::int(3);
    cp3.pow(2) * Poly::frac((n - 1) * n, 8) - &cp3 * Poly::int(3 * n)
        + Poly::int(28 * n)
        + cp3 * syms.alpha() * Poly::int(3)
        + syms.vnorm()
}

fn printed_c24v_sq(syms: &FoliationSymbols) -> Poly {
    let n = syms.n as i64;
    syms.sum_sigma_sq() * Poly::int(9) + syms.sum_pair_sq() * Poly::int(18) + Poly::int(9 * n * n)
}

fn printed_b1(params: &SasakiParams) -> Poly {
    let n = params.n() as i64;
    let c = params.c();
    let bracket = (c + Poly::int(3)) * Poly::int(2 * n * n + 6 * n - 2)
        + (c - Poly::int(1)) * Poly::int(3 * (n + 1))
        + Poly::int(2 * n);
    bracket * Poly::frac(n, 12) * Poly::var(Var::Vol) + Poly::var(Var::IntA) * Poly::int(3)
}

/// Tabulated fully reduced `b_2` over `{c, Vol, IA, IV}`.
pub(crate) fn printed_b2(params: &SasakiParams) -> Poly {
    let n = params.n() as i64;
    let c = params.c();
    let cp3 = c + Poly::int(3);
    let cm1 = c - Poly::int(1);
    let a2 = {
        let a2_bracket = Poly::int(64 - 32 * n)
            + cp3.pow(2) * Poly::int(-2 + 9 * n + 16 * n * n + 20 * n.pow(3))
            + &cp3 * &cm1 * Poly::int(12 + 2 * n + 20 * n * n)
            + cm1.pow(2) * Poly::int(2 + 17 * n);
        a2_bracket * Poly::frac(n, 1440) * Poly::var(Var::Vol)
    };
    let ia_coeff = (&cp3 * Poly::int(-3 + 12 * n + 6 * n * n) + &cm1 * Poly::int(-9 + 3 * n))
        * Poly::frac(1, 12);
    let vol_bracket = Poly::int(42 * n * n - 28 * n)
        + &cp3 * Poly::int(n * (3 + 11 * n + 4 * n * n))
        + cp3.pow(2) * Poly::frac(n * (-11 - 15 * n + 13 * n * n + 4 * n.pow(3)), 8)
        + &cm1 * Poly::int(n * (27 + 2 * n))
        + cm1.pow(2) * Poly::frac(-36 + 3 * n, 8)
        + &cp3 * &cm1 * Poly::frac(-6 - 24 * n + 2 * n * n + n.pow(3), 4);
    Poly::int(n + 1) * a2
        + Poly::var(Var::IntV) * Poly::frac(1, 12)
        + ia_coeff * Poly::var(Var::IntA)
        + vol_bracket * Poly::frac(1, 12) * Poly::var(Var::Vol)
}

/// Replaces the pair symbols `|A_{φe_i}φe_j|²` by their sum, using
/// `σ_i = 1 + Σ_{j≠i} |A_{φe_i}φe_j|²`. Requires a uniform coefficient.
fn reduce_pair_symbols(p: &Poly, syms: &FoliationSymbols) -> Result<Poly, ClosedFormError> {
    let n = syms.n;
    let mut coeff: Option<Poly> = None;
    let mut rest = p.clone();
    for i in 0..n {
        for j in i + 1..n {
            let v = Var::APair(i as u8 + 1, j as u8 + 1);
            if p.degree_in(v) > 1 {
                return Err(AlgError::NotReducible(format!("{v} appears nonlinearly")).into());
            }
            let k = p.coeff(v, 1);
            match &coeff {
                None => coeff = Some(k.clone()),
                Some(c0) if *c0 != k => {
                    return Err(AlgError::NotReducible(format!(
                        "pair symbol {v} has a non-uniform coefficient"
                    ))
                    .into())
                }
                _ => {}
            }
            rest = rest.substitute(v, &Poly::zero());
        }
    }
    if let Some(k) = coeff {
        rest += k * (syms.sum_sigma() - Poly::int(n as i64)) * Poly::frac(1, 2);
    }
    Ok(rest)
}

/// Integrates a pointwise foliation invariant over a compact manifold, using
/// `∫‖A‖² = IA`, `∫(6‖C₂₄V‖² - ‖V‖²) = IV` and constancy of `c`. The integrand
/// must be expressible through these integrals only.
pub fn integrate_pointwise(params: &SasakiParams, p: &Poly) -> Result<Poly, ClosedFormError> {
    let n = params.n();
    let syms = FoliationSymbols { n };
    let p = syms.eliminate_alpha(p);
    let j = -p.coeff(Var::VNorm, 1);
    if p.degree_in(Var::VNorm) > 1 || j.vars().iter().any(|v| *v != Var::C) {
        return Err(AlgError::NotReducible("vnorm enters nonlinearly".into()).into());
    }
    let rest = &p - &(&j * (printed_c24v_sq(&syms) * Poly::int(6) - syms.vnorm()));
    if rest.degree_in(Var::VNorm) > 0 {
        return Err(AlgError::NotReducible("vnorm did not cancel".into()).into());
    }
    let mut lambda: Option<Poly> = None;
    let mut constant = rest.clone();
    for i in 0..n {
        let s = Var::Sigma(i as u8 + 1);
        if rest.degree_in(s) > 1 {
            return Err(AlgError::NotReducible(format!("{s} is not paired with IV")).into());
        }
        let k = rest.coeff(s, 1);
        if k.vars().iter().any(|v| *v != Var::C) {
            return Err(AlgError::NotReducible(format!("{s} has a mixed coefficient")).into());
        }
        match &lambda {
            None => lambda = Some(k.clone()),
            Some(l) if *l != k => {
                return Err(AlgError::NotReducible(format!("{s} coefficient is not uniform")).into())
            }
            _ => {}
        }
        constant = constant.substitute(s, &Poly::zero());
    }
    if constant.vars().iter().any(|v| *v != Var::C) {
        return Err(AlgError::NotReducible(format!("leftover symbols in {constant}")).into());
    }
    let vol = Poly::var(Var::Vol);
    let lambda = lambda.unwrap_or_else(Poly::zero);
    Ok(j * Poly::var(Var::IntV)
        + lambda * (Poly::var(Var::IntA) - Poly::int(n as i64) * &vol)
        + constant * vol)
}

/// Builds both versions of every intermediate of the `b_1`, `b_2` computation.
pub fn jacobi_chain(params: &SasakiParams) -> Result<JacobiChain, ClosedFormError> {
    let n = params.n();
    let h = n + 1;
    let syms = FoliationSymbols { n };
    let frame = AdaptedFrame { n };
    let np = params.n_poly();
    let d = params.d();
    let fc = frame_curvature(params);
    let ricci = frame_ricci(&fc);
    let m = frame.dim();

    // Ricci restricted to the horizontal frame
    let rho_h: Vec<Poly> = (0..h * h)
        .map(|k| ricci[frame.horizontal(k / h) * m + frame.horizontal(k % h)].clone())
        .collect();
    let l = PrintedVsDerived::new(
        &syms,
        &np * params.ricci_d().pow(2) + np.pow(2) * Poly::int(4),
        sum_of_squares(&rho_h),
    );

    let s_matrix: Vec<Poly> = (0..h * h)
        .map(|k| {
            let (a, b) = (frame.horizontal(k / h), frame.horizontal(k % h));
            (0..n).map(|e| fc.get(a, frame.leaf(e), b, frame.leaf(e))).sum()
        })
        .collect();
    let s_matrix_printed: Vec<Poly> = (0..h * h)
        .map(|k| match (k / h, k % h) {
            (a, b) if a == b && a < n => d.clone(),
            (a, b) if a == b => np.clone(),
            _ => Poly::zero(),
        })
        .collect();

    let pairing: Vec<Poly> = (0..h * h).map(|k| syms.pairing(k / h, k % h)).collect();
    // (Tf_a,Tf_b) = (A_{f_a},A_{f_b}) - S(f_a,f_b) for minimal leaves
    let t_pairing: Vec<Poly> = pairing.iter().zip(&s_matrix).map(|(p, s)| p - s).collect();
    let rho_nabla: Vec<Poly> = (0..h * h)
        .map(|k| &rho_h[k] + &pairing[k] * Poly::int(2) + &t_pairing[k])
        .collect();
    let rho_nabla_sq = PrintedVsDerived::new(
        &syms,
        printed_rho_nabla_sq(params, &syms, &(params.c() * Poly::int(n as i64 + 1))),
        sum_of_squares(&rho_nabla),
    );
    let rho_nabla_route = PrintedVsDerived::new(
        &syms,
        rho_nabla_sq.printed.clone(),
        printed_rho_nabla_sq(params, &syms, &(&np * (params.c() + Poly::int(1)))),
    );

    let e_def: Vec<Poly> = (0..h * h)
        .map(|k| &pairing[k] * Poly::int(3) - &s_matrix[k])
        .collect();
    let e_expanded = syms.sum_sigma_sq() * Poly::int(9) + d.pow(2) * &np
        - &d * syms.sum_sigma() * Poly::int(6)
        + np.pow(2) * Poly::int(4)
        + syms.sum_pair_sq() * Poly::int(18);
    let e = PrintedVsDerived::new(&syms, e_expanded.clone(), sum_of_squares(&e_def));
    let grouping = PrintedVsDerived::new(
        &syms,
        syms.sum_sigma_sq() * Poly::int(9)
            + syms.sum_pair_sq() * Poly::int(18)
            + &np * &d * (&d + Poly::int(6))
            - &d * syms.alpha() * Poly::int(6)
            + np.pow(2) * Poly::int(16)
            + &np * params.ricci_d().pow(2),
        &l.derived + np.pow(2) * Poly::int(8) + e_expanded,
    );

    let mut l_prime_sum = Poly::zero();
    let mut cross = Poly::zero();
    for a in 0..h {
        for b in 0..h {
            for c in 0..h {
                for dd in 0..h {
                    let r = horizontal_tensor(&fc, a, b, c, dd);
                    if r.is_zero() {
                        continue;
                    }
                    l_prime_sum += r * r;
                    let v = syms.v_entry(a, b, c, dd).ok_or_else(|| {
                        AlgError::NotReducible(format!("V({a},{b},{c},{dd}) is not a pair symbol"))
                    })?;
                    cross += r * &v;
                }
            }
        }
    }
    let l_prime = PrintedVsDerived::new(
        &syms,
        (params.c() + Poly::int(3)).pow(2) * Poly::frac((n as i64 - 1) * n as i64, 8)
            + Poly::int(4 * n as i64),
        l_prime_sum,
    );
    let cross_term = reduce_pair_symbols(&cross, &syms)?;
    let r_nabla_sq = PrintedVsDerived::new(
        &syms,
        printed_r_nabla_sq(params, &syms),
        &l_prime.derived + &cross_term * Poly::int(2) + syms.vnorm(),
    );

    // (C₂₄V)(f_a,f_b) = 3(A_{f_a},A_{f_b})
    let c24: Vec<Poly> = pairing.iter().map(|p| p * Poly::int(3)).collect();
    let c24v_sq = PrintedVsDerived::new(&syms, printed_c24v_sq(&syms), sum_of_squares(&c24));

    let (r2, ric2) = brute_force_norms(&fc, &ricci);
    let tau: Poly = (0..m).map(|a| &ricci[a * m + a]).sum();
    let gilkey = gilkey_a_coeffs(&tau, &r2, &ric2);
    let np1 = Poly::int(n as i64 + 1);
    let b1_derived = &np1 * &gilkey.a1 + integrated_tau_nabla(params);
    let b1 = PrintedVsDerived::new(&syms, printed_b1(params), b1_derived);

    let tau_nabla = tau_nabla_minimal(params, &syms.alpha());
    let assemble = |rho2: &Poly, rn2: &Poly| -> Result<Poly, ClosedFormError> {
        let integrand = &tau * &tau_nabla * Poly::int(2) + rho2 * Poly::int(6) - rn2;
        Ok(&np1 * &gilkey.a2 + integrate_pointwise(params, &integrand)? * Poly::frac(1, 12))
    };
    let b2_derived = assemble(&rho_nabla_sq.derived, &r_nabla_sq.derived)?;
    let b2_from_printed = assemble(&rho_nabla_sq.printed, &r_nabla_sq.printed)?;
    let heat = space_form_heat_coeffs(params);
    let b2 = PrintedVsDerived::new(&syms, heat.b2.clone(), b2_derived);
    let b2_assembly = PrintedVsDerived::new(&syms, heat.b2, b2_from_printed);

    Ok(JacobiChain {
        n,
        d,
        l,
        s_matrix,
        s_matrix_printed,
        rho_nabla,
        rho_nabla_sq,
        rho_nabla_route,
        e,
        grouping,
        l_prime,
        cross_term,
        r_nabla_sq,
        c24v_sq,
        b1,
        b2,
        b2_assembly,
    })
}

/// Pointwise data of the round three-sphere example: `c = 1`, `σ_1 = 1`,
/// `σ_12 = 0`, `‖A‖² = 2`, `‖V‖² = 36`.
pub fn three_sphere_bindings() -> BTreeMap<Var, crate::exactalg::Rational> {
    use crate::exactalg::rat;
    BTreeMap::from([
        (Var::C, rat(1, 1)),
        (Var::Sigma(1), rat(1, 1)),
        (Var::SigmaPair(1, 2), rat(0, 1)),
        (Var::Alpha, rat(2, 1)),
        (Var::VNorm, rat(36, 1)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> JacobiChain {
        jacobi_chain(&SasakiParams::symbolic(n).unwrap()).unwrap()
    }

    fn at_s3(p: &Poly) -> Poly {
        p.partial_eval(&three_sphere_bindings())
    }

    #[test]
    fn three_sphere_spot_values() {
        let ch = chain(1);
        assert_eq!(at_s3(&ch.d), Poly::int(1));
        assert_eq!(at_s3(&ch.l.derived), Poly::int(8));
        assert_eq!(at_s3(&ch.l_prime.derived), Poly::int(4));
        assert_eq!(at_s3(&ch.c24v_sq.derived), Poly::int(18));
        assert_eq!(at_s3(&ch.rho_nabla_sq.derived), Poly::int(32));
        assert_eq!(at_s3(&ch.r_nabla_sq.derived), Poly::int(64));
        assert_eq!(at_s3(&ch.r_nabla_sq.printed), Poly::int(76));
        let b1 = ch.b1.derived.substitute(Var::IntA, &(Poly::int(2) * Poly::var(Var::Vol)));
        assert_eq!(at_s3(&b1), Poly::int(10) * Poly::var(Var::Vol));
    }

    #[test]
    fn internal_identities_hold_exactly() {
        for n in 1..=5 {
            let ch = chain(n);
            assert!(ch.l.agrees(), "l n={n}");
            assert_eq!(ch.s_matrix, ch.s_matrix_printed, "S n={n}");
            assert!(ch.e.agrees(), "E n={n}");
            assert!(ch.grouping.agrees(), "grouping n={n}");
            assert!(ch.l_prime.agrees(), "l' n={n}");
            assert!(ch.c24v_sq.agrees(), "C24V n={n}");
            assert!(ch.b2_assembly.agrees(), "b2 assembly n={n}");
        }
    }

    #[test]
    fn cross_term_closed_form() {
        for n in 1..=4 {
            let p = SasakiParams::symbolic(n).unwrap();
            let syms = FoliationSymbols { n };
            let ch = jacobi_chain(&p).unwrap();
            let mut expect = p.kappa() * (syms.sum_sigma() - p.n_poly()) * Poly::int(6)
                + Poly::int(12 * n as i64);
            if n == 1 {
                // a single leaf direction forces σ_1 = 1
                expect = expect.substitute(Var::Sigma(1), &Poly::one());
            }
            assert_eq!(ch.cross_term, expect);
        }
    }

    #[test]
    fn residual_shapes() {
        let p = SasakiParams::symbolic(2).unwrap();
        let ch = jacobi_chain(&p).unwrap();
        let cp3 = Poly::var(Var::C) + Poly::int(3);
        assert_eq!(ch.r_nabla_sq.residual, cp3 * Poly::int(3 * 2));
        let expect = p.ricci_d() * (p.n_poly() - Poly::var(Var::C)) * Poly::int(2);
        assert_eq!(ch.rho_nabla_route.residual, expect);
        assert!(!ch.b1.agrees());
        assert!(!ch.rho_nabla_sq.agrees());
    }

    #[test]
    fn b1_residual_bracket() {
        for n in 1..=4 {
            let p = SasakiParams::symbolic(n).unwrap();
            let ch = jacobi_chain(&p).unwrap();
            let ni = n as i64;
            let c = Poly::var(Var::C);
            // printed bracket 3(n+1)(c-1) + 2n vs derived (n+1)(c-1) + 24
            let expect = ((c - Poly::int(1)) * Poly::int(2 * (ni + 1)) + Poly::int(2 * ni - 24))
                * Poly::frac(ni, 12)
                * Poly::var(Var::Vol);
            assert_eq!(ch.b1.residual, expect, "n={n}");
        }
    }

    #[test]
    fn b2_at_three_sphere() {
        let ch = chain(1);
        let bind = |p: &Poly| {
            let vol = Poly::var(Var::Vol);
            at_s3(
                &p.substitute(Var::IntA, &(Poly::int(2) * &vol))
                    .substitute(Var::IntV, &(Poly::int(72) * &vol)),
            )
        };
        assert_eq!(bind(&ch.b2.derived), Poly::frac(59, 3) * Poly::var(Var::Vol));
        assert_eq!(bind(&ch.b2.printed), Poly::frac(68, 3) * Poly::var(Var::Vol));
    }

    #[test]
    fn integration_rejects_unpaired_squares() {
        let p = SasakiParams::symbolic(2).unwrap();
        let bad = Poly::var(Var::Sigma(1)).pow(2);
        assert!(integrate_pointwise(&p, &bad).is_err());
        let ok = integrate_pointwise(&p, &Poly::var(Var::Alpha)).unwrap();
        assert_eq!(ok, Poly::var(Var::IntA));
    }
}
