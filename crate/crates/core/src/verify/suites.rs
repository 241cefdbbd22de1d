use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::closed_forms::{
    brute_force_norms, closed_form_frame_tensor, frame_curvature, frame_ricci, gilkey_a_coeffs, mixed_scalar,
    mixed_scalar_frame_sum, norm_r_sq, norm_ric_sq, space_form_heat_coeffs, jacobi_chain, totally_geodesic_claims,
    totally_geodesic_from_pairings, tau_nabla_frame_line, tau_nabla_frame_sum, tau_nabla_minimal,
    theorem_invariant_vector, three_sphere_bindings, FoliationSymbols, SasakiParams, JacobiChain,
};
use crate::embed_geom::{
    curvature_residual, identity_residuals, CurvatureRoute, lie_bracket, s3_frame_fields, PolyVectorField, SasakianStructure,
    SphereSampler, IDENTITIES,
};
use crate::exactalg::{rat, Poly, RatFn, Rational, Var};
use crate::foliation::{
    c24_contract, homogeneous_integral, matrix_norm_sq, norm_sq, s3_legendre_example, s3_reference_values,
    s3_swapped_example, spread, FrameJet, S3Example, Scalar, CONSTANCY_TOL, VOL_S3,
};
use crate::frame_engine::{curvature_from_frame, koszul_connection, phi_sectional_curvature, FrameAlgebra};
use crate::spectra::{fit_heat_coeffs, log_grid, sphere_multiplicity, sphere_spectrum};

use super::check::{CheckKind, CheckResult};
use super::config::{Config, Suite};

/// Relative tolerances of the fitted heat coefficients `â0, â1, â2`.
pub const HEAT_REL_TOL: [f64; 3] = [5e-3, 1e-2, 2e-2];

/// Tolerance on the agreement of the two example backends.
pub const BACKEND_TOL: f64 = 1e-9;

/// Points used by the second-derivative curvature oracle.
const CONNECTION_SAMPLES: usize = 10;

/// Sphere dimensions carrying the structure-identity checks, as `n` in `S^{2n+1}`.
const SASAKIAN_N: [usize; 3] = [1, 2, 3];

const CITE_STRUCTURE: &str = "Sasakian structure identities";
const CITE_SPACE_FORM: &str = "curvature tensor of a Sasakian space form";
const CITE_EXAMPLE: &str = "Legendre foliations of the round S^3 by W-curves";
const CITE_NORMS: &str = "adapted-frame curvature components and norms of R and Ricci";
const CITE_HEAT_A: &str = "heat invariants a_1, a_2 of a Sasakian space form";
const CITE_TAU_NABLA: &str = "transverse scalar curvature of a minimal Legendre foliation";
const CITE_CHAIN: &str = "computation of the Jacobi-operator invariant b_2";
const CITE_BERGER: &str = "D-homothetic deformation of the round S^3";
const CITE_SPECTRUM: &str = "heat trace asymptotics of the Laplace-Beltrami operator";
const CITE_B1: &str = "Jacobi-operator invariant b_1";
const CITE_TOTALLY_GEODESIC: &str = "totally geodesic foliations on a curvature-one ambient";
const CITE_MIXED: &str = "mixed scalar curvature of a Legendre foliation";

/// Id and citation of one check, known before anything runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlannedCheck {
    pub id: String,
    pub citation: &'static str,
}

pub(crate) enum Value {
    Exact(Poly),
    Numeric { residual: f64, tol: f64 },
    Report(Poly),
    Error(CheckKind, String),
}

pub(crate) struct Outcome {
    value: Value,
    params: Vec<(String, String)>,
}

impl Outcome {
    fn exact(p: Poly) -> Self {
        Outcome { value: Value::Exact(p), params: Vec::new() }
    }

    fn numeric(residual: f64, tol: f64) -> Self {
        Outcome { value: Value::Numeric { residual, tol }, params: Vec::new() }
    }

    fn report(p: Poly) -> Self {
        Outcome { value: Value::Report(p), params: Vec::new() }
    }

    fn error(kind: CheckKind, msg: impl ToString) -> Self {
        Outcome { value: Value::Error(kind, msg.to_string()), params: Vec::new() }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    fn into_result(self, check: &PlannedCheck) -> CheckResult {
        let r = match self.value {
            Value::Exact(p) => CheckResult::exact(check.id.clone(), &p, check.citation),
            Value::Numeric { residual, tol } => CheckResult::numeric(check.id.clone(), residual, tol, check.citation),
            Value::Report(p) => CheckResult::report(check.id.clone(), &p, check.citation),
            Value::Error(kind, msg) => CheckResult::error(check.id.clone(), kind, msg, check.citation),
        };
        self.params.into_iter().fold(r, |r, (k, v)| r.with_param(k, v))
    }
}

type Runner = Box<dyn Fn(&RunContext) -> Vec<Outcome> + Send + Sync>;

/// A unit of work producing the results of `planned`, in order.
pub(crate) struct Task {
    pub(crate) planned: Vec<PlannedCheck>,
    run: Runner,
}

impl Task {
    fn new(planned: Vec<PlannedCheck>, run: impl Fn(&RunContext) -> Vec<Outcome> + Send + Sync + 'static) -> Self {
        Task { planned, run: Box::new(run) }
    }

    pub(crate) fn execute(&self, ctx: &RunContext) -> Vec<CheckResult> {
        let outcomes = (self.run)(ctx);
        assert_eq!(outcomes.len(), self.planned.len(), "task outcome count for {}", self.planned[0].id);
        outcomes.into_iter().zip(&self.planned).map(|(o, s)| o.into_result(s)).collect()
    }
}

fn check_id(id: impl Into<String>, citation: &'static str) -> PlannedCheck {
    PlannedCheck { id: id.into(), citation }
}

/// Shared, lazily built inputs of a run.
pub(crate) struct RunContext {
    pub(crate) config: Config,
    chains: Vec<OnceLock<Result<JacobiChain, String>>>,
    example: OnceLock<S3Example>,
    embedded_jets: OnceLock<Result<Vec<FrameJet<f64>>, String>>,
}

impl RunContext {
    pub(crate) fn new(config: Config) -> Self {
        let chains = (0..=config.n_max).map(|_| OnceLock::new()).collect();
        RunContext { config, chains, example: OnceLock::new(), embedded_jets: OnceLock::new() }
    }

    fn chain(&self, n: usize) -> Result<&JacobiChain, String> {
        self.chains[n]
            .get_or_init(|| {
                let params = SasakiParams::symbolic(n).map_err(|e| e.to_string())?;
                jacobi_chain(&params).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn example(&self) -> &S3Example {
        self.example.get_or_init(s3_legendre_example)
    }

    fn embedded_jets(&self) -> Result<&[FrameJet<f64>], String> {
        self.embedded_jets
            .get_or_init(|| {
                let ex = self.example();
                (0..self.config.samples as u64)
                    .into_par_iter()
                    .map(|k| {
                        let p = SphereSampler::new(self.config.seed, k, 4).point();
                        ex.embedded.jet_at(&p).map_err(|e| e.to_string())
                    })
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }
}

fn int(v: i64) -> Poly {
    Poly::int(v)
}

fn constant(r: Rational) -> Poly {
    Poly::constant(r)
}

fn sum_sq_diff(a: &[Poly], b: &[Poly]) -> Poly {
    a.iter().zip(b).map(|(x, y)| (x - y).pow(2)).sum()
}

fn params_for(n: usize) -> SasakiParams {
    SasakiParams::symbolic(n).expect("n >= 1")
}

/// All tasks of the selected suites.
pub(crate) fn tasks(config: &Config) -> Vec<Task> {
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    suites
        .into_iter()
        .flat_map(|s| match s {
            Suite::SasakianIdentities => sasakian_tasks(),
            Suite::Example1S3 => example_tasks(config),
            Suite::ExactIdentities => exact_tasks(config),
            Suite::Berger => berger_tasks(),
            Suite::HeatTrace => heat_tasks(),
            Suite::Errata => errata_tasks(config),
        })
        .collect()
}

fn sasakian_tasks() -> Vec<Task> {
    let mut out = Vec::new();
    for n in SASAKIAN_N {
        let dim = 2 * n + 1;
        let planned = IDENTITIES.iter().map(|name| check_id(format!("sasakian.{name}.s{dim}"), CITE_STRUCTURE)).collect();
        out.push(Task::new(planned, move |ctx| {
            let c = &ctx.config;
            identity_residuals(&SasakianStructure::standard(n), c.samples, c.seed)
                .into_iter()
                .map(|(_, r)| Outcome::numeric(r, c.tol).param("samples", c.samples).param("seed", c.seed))
                .collect()
        }));
        let planned = vec![
            check_id(format!("sasakian.curvature-closed-form.s{dim}"), CITE_SPACE_FORM),
            check_id(format!("sasakian.curvature-connection.s{dim}"), CITE_SPACE_FORM),
        ];
        out.push(Task::new(planned, move |ctx| {
            let s = SasakianStructure::standard(n);
            let c = &ctx.config;
            let conn_samples = CONNECTION_SAMPLES.min(c.samples);
            [
                (CurvatureRoute::ClosedForm, c.samples, c.tol),
                (CurvatureRoute::Connection, conn_samples, c.example_tol),
            ]
            .into_iter()
            .map(|(route, samples, tol)| match curvature_residual(&s, route, samples, c.seed) {
                Ok(r) => Outcome::numeric(r, tol).param("samples", samples).param("seed", c.seed),
                Err(e) => Outcome::error(CheckKind::NumericResidual, e),
            })
            .collect()
        }));
    }
    out
}

fn field_residual(f: &PolyVectorField, g: &PolyVectorField) -> Poly {
    sum_sq_diff(f.components(), g.components())
}

fn reference_names() -> Vec<&'static str> {
    let ex = s3_legendre_example();
    s3_reference_values(ex.frame.jet()).into_iter().map(|(n, _, _)| n).collect()
}

fn exact_example_extras(jet: &FrameJet<Rational>, bott: &[Rational]) -> Vec<Outcome> {
    let h = jet.horizontal_dim();
    let rn = jet.r_nabla_components();
    let bott_res: Rational = rn.iter().zip(bott).map(|(a, b)| (a - b) * (a - b)).sum();
    let c24 = c24_contract(&jet.v_tensor(), h);
    let (pairs, _) = jet.pairings();
    let c24_res: Rational = (0..h)
        .flat_map(|i| (0..h).map(move |k| (i, k)))
        .map(|(i, k)| {
            let d = &c24[i][k] - &pairs[i][k] * rat(3, 1);
            &d * &d
        })
        .sum();
    // A_ξ(φe_1) = -e_1 with ∇_X ξ = -φX
    let a_xi: Rational = jet
        .oneill_a(2, 1)
        .iter()
        .zip([rat(-1, 1), rat(0, 1), rat(0, 1)])
        .map(|(a, b)| (a - &b) * (a - &b))
        .sum();
    vec![
        Outcome::exact(constant(bott_res)),
        Outcome::exact(constant(c24_res)),
        Outcome::exact(constant(a_xi)),
    ]
}

fn example_tasks(config: &Config) -> Vec<Task> {
    let names = reference_names();
    let mut out = Vec::new();

    let planned = ["w-xi", "y-xi", "w-y"].iter().map(|b| check_id(format!("example1.bracket.{b}"), CITE_EXAMPLE)).collect();
    out.push(Task::new(planned, |_| {
        let (xi, w, y) = s3_frame_fields();
        vec![
            Outcome::exact(field_residual(&lie_bracket(&w, &xi), &y.scaled(-2))),
            Outcome::exact(field_residual(&lie_bracket(&y, &xi), &w.scaled(2))),
            Outcome::exact(field_residual(&lie_bracket(&w, &y), &xi.scaled(2))),
        ]
    }));

    let planned = vec![check_id("example1.legendre.eta-w", CITE_EXAMPLE), check_id("example1.phi-w", CITE_EXAMPLE)];
    out.push(Task::new(planned, |ctx| {
        let (xi, w, y) = s3_frame_fields();
        let eta_w: Poly = w.components().iter().zip(xi.components()).map(|(a, b)| a * b).sum();
        let s = SasakianStructure::standard(1);
        let worst = (0..ctx.config.samples as u64)
            .map(|k| {
                let p = SphereSampler::new(ctx.config.seed, k, 4).point();
                let d: Vec<f64> = s.phi(&p, &w.at(&p)).iter().zip(y.at(&p)).map(|(a, b)| a - b).collect();
                d.iter().map(|v| v * v).sum::<f64>().sqrt()
            })
            .fold(0.0, f64::max);
        vec![Outcome::exact(eta_w), Outcome::numeric(worst, ctx.config.tol).param("samples", ctx.config.samples)]
    }));

    let mut planned: Vec<PlannedCheck> = names.iter().map(|n| check_id(format!("example1.frame.{n}"), CITE_EXAMPLE)).collect();
    for extra in ["bott-direct", "c24-identity", "a-xi-phi-e"] {
        planned.push(check_id(format!("example1.frame.{extra}"), CITE_EXAMPLE));
    }
    out.push(Task::new(planned, |ctx| {
        let ex = ctx.example();
        let jet = ex.frame.jet();
        let mut v: Vec<Outcome> = s3_reference_values(jet)
            .into_iter()
            .map(|(_, got, want)| Outcome::exact(constant(got - rat(want, 1))))
            .collect();
        v.extend(exact_example_extras(jet, ex.frame.bott_curvature()));
        v
    }));

    let mut planned: Vec<PlannedCheck> =
        names.iter().map(|n| check_id(format!("example1.embedded.{n}"), CITE_EXAMPLE)).collect();
    for extra in [
        "embedded.bott-direct",
        "embedded.c24-identity",
        "embedded.a-alternating",
        "embedded.curvature-sum",
        "backends-agree",
        "constancy.norm-a",
    ] {
        planned.push(check_id(format!("example1.{extra}"), CITE_EXAMPLE));
    }
    let count = planned.len();
    out.push(Task::new(planned, move |ctx| embedded_outcomes(ctx, count)));

    let planned = vec![
        check_id("example1.invariant-tuple", CITE_EXAMPLE),
        check_id("example1.invariant-tuple.embedded", CITE_EXAMPLE),
    ];
    out.push(Task::new(planned, invariant_outcomes));

    let planned = vec![check_id("example1.swapped", CITE_EXAMPLE)];
    let samples = config.samples;
    out.push(Task::new(planned, move |ctx| {
        let ex = s3_swapped_example();
        let mut worst = 0.0_f64;
        for k in 0..samples as u64 {
            let p = SphereSampler::new(ctx.config.seed.wrapping_add(7), k, 4).point();
            match ex.embedded.jet_at(&p) {
                Ok(jet) => {
                    for (_, got, want) in s3_reference_values(&jet) {
                        worst = worst.max((got - want as f64).abs());
                    }
                }
                Err(e) => return vec![Outcome::error(CheckKind::NumericResidual, e)],
            }
        }
        vec![Outcome::numeric(worst, ctx.config.example_tol).param("samples", samples)]
    }));
    out
}

fn embedded_outcomes(ctx: &RunContext, count: usize) -> Vec<Outcome> {
    let jets = match ctx.embedded_jets() {
        Ok(j) => j,
        Err(e) => return (0..count).map(|_| Outcome::error(CheckKind::NumericResidual, &e)).collect(),
    };
    let ex = ctx.example();
    let tol = ctx.config.example_tol;
    let samples = ctx.config.samples;
    let frame_vals: Vec<f64> = s3_reference_values(ex.frame.jet()).iter().map(|(_, v, _)| v.to_f64()).collect();
    let per_point: Vec<Vec<(f64, i64)>> = jets
        .iter()
        .map(|j| s3_reference_values(j).into_iter().map(|(_, v, w)| (v, w)).collect())
        .collect();
    let nvals = frame_vals.len();
    let mut out: Vec<Outcome> = (0..nvals)
        .map(|i| {
            let worst = per_point.iter().map(|vals| (vals[i].0 - vals[i].1 as f64).abs()).fold(0.0, f64::max);
            Outcome::numeric(worst, tol).param("samples", samples).param("seed", ctx.config.seed)
        })
        .collect();

    let mut bott = 0.0_f64;
    let mut c24 = 0.0_f64;
    let mut alternating = 0.0_f64;
    let mut curv_sum = 0.0_f64;
    for (k, jet) in jets.iter().enumerate() {
        let p = SphereSampler::new(ctx.config.seed, k as u64, 4).point();
        match ex.embedded.bott_curvature_at(&p) {
            Ok(b) => {
                for (x, y) in b.iter().zip(jet.r_nabla_components()) {
                    bott = bott.max((x - y).abs());
                }
            }
            Err(_) => bott = f64::NAN,
        }
        c24 = c24.max(crate::foliation::c24_identity_residual(jet));
        for x in 1..3 {
            for y in 1..3 {
                let (axy, ayx) = (jet.oneill_a(x, y), jet.oneill_a(y, x));
                for (a, b) in axy.iter().zip(&ayx) {
                    alternating = alternating.max((a + b).abs());
                }
            }
        }
        for (x, y) in [([1.0, 0.0], [1.0, 0.0]), ([1.0, 0.0], [0.0, 1.0]), ([0.0, 1.0], [0.0, 1.0])] {
            curv_sum = curv_sum.max(jet.curvature_sum_residual(&x, &y).abs());
        }
    }
    let agree = per_point
        .iter()
        .flat_map(|vals| vals.iter().zip(&frame_vals).map(|((v, _), f)| (v - f).abs()))
        .fold(0.0, f64::max);
    let norm_a: Vec<f64> = per_point.iter().map(|v| v[0].0).collect();
    for r in [bott, c24, alternating, curv_sum] {
        out.push(Outcome::numeric(r, tol).param("samples", samples));
    }
    out.push(Outcome::numeric(agree, BACKEND_TOL).param("samples", samples));
    out.push(Outcome::numeric(spread(&norm_a), CONSTANCY_TOL).param("samples", samples));
    debug_assert_eq!(out.len(), count);
    out
}

/// `(dim, Vol, c, ∫‖A‖², ∫‖T‖², ∫(6‖C₂₄V‖² - ‖V‖²))` in units of `Vol`, against `(3, 1, 1, 2, 0, 72)`.
fn invariant_outcomes(ctx: &RunContext) -> Vec<Outcome> {
    let ex = ctx.example();
    let jet = ex.frame.jet();
    let h = jet.horizontal_dim();
    let v = jet.v_tensor();
    let combo = rat(6, 1) * matrix_norm_sq(&c24_contract(&v, h)) - norm_sq(&v);
    let params = SasakiParams::bound(1, rat(1, 1)).expect("n = 1");
    let inv = theorem_invariant_vector(&params, jet.a_norm_sq(), combo, rat(1, 1));
    let got = [
        int(inv.dim as i64),
        constant(inv.vol.clone()),
        inv.c.clone(),
        constant(inv.int_a.clone()),
        inv.int_t.clone(),
        constant(inv.int_v.clone()),
    ];
    let want = [int(3), int(1), int(1), int(2), int(0), int(72)];
    let exact = Outcome::exact(sum_sq_diff(&got, &want)).param("vol-unit", "Vol");

    let numeric = match ctx.embedded_jets() {
        Ok(jets) => {
            let a: Vec<f64> = jets.iter().map(|j| j.a_norm_sq()).collect();
            let t: Vec<f64> = jets.iter().map(|j| j.t_norm_sq()).collect();
            let combo: Vec<f64> = jets
                .iter()
                .map(|j| {
                    let v = j.v_tensor();
                    6.0 * matrix_norm_sq(&c24_contract(&v, j.horizontal_dim())) - norm_sq(&v)
                })
                .collect();
            match (homogeneous_integral(&a), homogeneous_integral(&t), homogeneous_integral(&combo)) {
                (Some(ia), Some(it), Some(iv)) => {
                    let r = (ia / VOL_S3 - 2.0).abs().max((it / VOL_S3).abs()).max((iv / VOL_S3 - 72.0).abs());
                    Outcome::numeric(r, ctx.config.example_tol).param("vol", format!("{VOL_S3:e}"))
                }
                _ => Outcome::error(CheckKind::NumericResidual, "sampled integrand is not constant"),
            }
        }
        Err(e) => Outcome::error(CheckKind::NumericResidual, e),
    };
    vec![exact, numeric]
}

fn exact_tasks(config: &Config) -> Vec<Task> {
    let mut out = Vec::new();
    for n in 1..=config.n_max {
        let names = [
            ("norm-r", CITE_NORMS),
            ("norm-rho", CITE_NORMS),
            ("a1", CITE_HEAT_A),
            ("a2", CITE_HEAT_A),
            ("tau-nabla", CITE_TAU_NABLA),
            ("tau-nabla-frame-sum", CITE_TAU_NABLA),
            ("curvature-closed-form", CITE_SPACE_FORM),
            ("tensor-symmetries", CITE_SPACE_FORM),
        ];
        let planned = names.iter().map(|(id, c)| check_id(format!("exact.{id}.n{n}"), c)).collect();
        out.push(Task::new(planned, move |_| {
            let params = params_for(n);
            let fc = frame_curvature(&params);
            let ricci = frame_ricci(&fc);
            let (r2, ric2) = brute_force_norms(&fc, &ricci);
            let m = 2 * n + 1;
            let tau: Poly = (0..m).map(|a| &ricci[a * m + a]).sum();
            let gilkey = gilkey_a_coeffs(&tau, &r2, &ric2);
            let printed = space_form_heat_coeffs(&params);
            let alpha = FoliationSymbols { n }.alpha();
            let closed = match closed_form_frame_tensor(&params) {
                Ok(t) => Outcome::exact(sum_sq_diff(t.components(), fc.components())),
                Err(e) => Outcome::error(CheckKind::ExactIdentity, e),
            };
            let violations = fc.symmetry_violations().len() + fc.bianchi_violations().len();
            vec![
                Outcome::exact(r2 - norm_r_sq(&params)),
                Outcome::exact(ric2 - norm_ric_sq(&params)),
                Outcome::exact(gilkey.a1 - printed.a1),
                Outcome::exact(gilkey.a2 - printed.a2),
                Outcome::exact(tau_nabla_frame_line(&params, &alpha) - tau_nabla_minimal(&params, &alpha)),
                Outcome::exact(tau_nabla_frame_sum(&params, &alpha) - tau_nabla_frame_line(&params, &alpha)),
                closed,
                Outcome::exact(int(violations as i64)),
            ]
        }));

        let names = ["e-expansion", "grouping", "s-matrix", "ricci-sq", "l-prime", "c24v", "b2-assembly"];
        let planned = names.iter().map(|id| check_id(format!("exact.{id}.n{n}"), CITE_CHAIN)).collect();
        out.push(Task::new(planned, move |ctx| match ctx.chain(n) {
            Ok(ch) => vec![
                Outcome::exact(ch.e.residual.clone()),
                Outcome::exact(ch.grouping.residual.clone()),
                Outcome::exact(sum_sq_diff(&ch.s_matrix, &ch.s_matrix_printed)),
                Outcome::exact(ch.l.residual.clone()),
                Outcome::exact(ch.l_prime.residual.clone()),
                Outcome::exact(ch.c24v_sq.residual.clone()),
                Outcome::exact(ch.b2_assembly.residual.clone()),
            ],
            Err(e) => (0..7).map(|_| Outcome::error(CheckKind::ExactIdentity, &e)).collect(),
        }));
    }

    let planned = vec![
        check_id("exact.spot.a1.n1-c1", CITE_HEAT_A),
        check_id("exact.spot.a2.n1-c1", CITE_HEAT_A),
        check_id("exact.spot.a2.n2-c1", CITE_HEAT_A),
    ];
    out.push(Task::new(planned, |_| {
        let at = |n: usize| space_form_heat_coeffs(&SasakiParams::bound(n, rat(1, 1)).expect("n >= 1"));
        let vol = Poly::var(Var::Vol);
        vec![
            Outcome::exact(at(1).a1 - vol.clone()),
            Outcome::exact(at(1).a2 - vol.clone() * Poly::frac(1, 2)),
            Outcome::exact(at(2).a2 - vol * Poly::frac(16, 3)),
        ]
    }));
    out
}

fn berger_tasks() -> Vec<Task> {
    let planned = vec![
        check_id("berger.phi-sectional.identity", CITE_BERGER),
        check_id("berger.phi-sectional.a1", CITE_BERGER),
        check_id("berger.phi-sectional.a2", CITE_BERGER),
        check_id("berger.phi-sectional.a4", CITE_BERGER),
        check_id("berger.tensor-symmetries", CITE_BERGER),
        check_id("berger.connection", CITE_BERGER),
    ];
    vec![Task::new(planned, |_| {
        let a = Poly::var(Var::A);
        let alg = match FrameAlgebra::su2_round().d_homothetic_deform(&a) {
            Ok(alg) => alg,
            Err(e) => return (0..6).map(|_| Outcome::error(CheckKind::ExactIdentity, &e)).collect(),
        };
        let conn = match koszul_connection(&alg) {
            Ok(c) => c,
            Err(e) => return (0..6).map(|_| Outcome::error(CheckKind::ExactIdentity, &e)).collect(),
        };
        let curv = curvature_from_frame(&alg, &conn);
        let w = [rat(1, 1), rat(0, 1), rat(0, 1)];
        let k = match phi_sectional_curvature(&alg, &curv, &w) {
            Ok(k) => k,
            Err(e) => return (0..6).map(|_| Outcome::error(CheckKind::ExactIdentity, &e)).collect(),
        };
        // a·K - (4 - 3a), denominators cleared
        let cleared = &(&k * &RatFn::from(a.clone())) - &RatFn::from(int(4) - a * int(3));
        let spot = |av: i64, kv: i64| match k.eval(&BTreeMap::from([(Var::A, rat(av, 1))])) {
            Ok(v) => Outcome::exact(constant(v - rat(kv, 1))),
            Err(e) => Outcome::error(CheckKind::ExactIdentity, e),
        };
        let sym = curv.symmetry_violations().len() + curv.bianchi_violations().len();
        let conn_bad = conn.torsion_residuals(&alg).len() + conn.metric_residuals(&alg).len();
        vec![
            Outcome::exact(cleared.numer().clone()),
            spot(1, 1),
            spot(2, -1),
            spot(4, -2),
            Outcome::exact(int(sym as i64)),
            Outcome::exact(int(conn_bad as i64)),
        ]
    })]
}

fn heat_tasks() -> Vec<Task> {
    let planned = vec![
        check_id("heat.a0.s3", CITE_SPECTRUM),
        check_id("heat.a1.s3", CITE_SPECTRUM),
        check_id("heat.a2.s3", CITE_SPECTRUM),
    ];
    let mut out = vec![Task::new(planned, |ctx| {
        let c = &ctx.config;
        let grid = log_grid(c.t_min, c.t_max, c.t_points);
        let fit = sphere_spectrum(3, c.kmax).and_then(|s| fit_heat_coeffs(&s, &grid));
        let vol = VOL_S3;
        match fit {
            Ok(fit) => [(fit.a0, vol), (fit.a1, vol), (fit.a2, vol / 2.0)]
                .iter()
                .zip(HEAT_REL_TOL)
                .map(|(&(got, want), tol)| {
                    Outcome::numeric((got / want - 1.0).abs(), tol)
                        .param("fitted", format!("{got:e}"))
                        .param("expected", format!("{want:e}"))
                        .param("kmax", c.kmax)
                        .param("t-grid", format!("{:e}..{:e}x{}", c.t_min, c.t_max, c.t_points))
                        .param("condition", format!("{:e}", fit.condition))
                })
                .collect(),
            Err(e) => (0..3).map(|_| Outcome::error(CheckKind::NumericResidual, &e)).collect(),
        }
    })];
    out.push(Task::new(vec![check_id("heat.multiplicity.s3", CITE_SPECTRUM)], |_| {
        let bad: Poly = (0..=50usize)
            .map(|k| {
                let m = sphere_multiplicity(3, k);
                let want = num_bigint::BigUint::from((k + 1) * (k + 1));
                if m == want { Poly::zero() } else { int(1) }
            })
            .sum();
        vec![Outcome::exact(bad).param("k-max", 50)]
    }));
    out
}

fn errata_tasks(config: &Config) -> Vec<Task> {
    let mut out = Vec::new();
    for n in 1..=config.n_max {
        let names = [
            ("b1", CITE_B1),
            ("rho-nabla-route", CITE_CHAIN),
            ("rho-nabla-sq", CITE_CHAIN),
            ("r-nabla-sq", CITE_CHAIN),
            ("b2", CITE_CHAIN),
        ];
        let planned = names.iter().map(|(id, c)| check_id(format!("errata.{id}.n{n}"), c)).collect();
        out.push(Task::new(planned, move |ctx| match ctx.chain(n) {
            Ok(ch) => [&ch.b1, &ch.rho_nabla_route, &ch.rho_nabla_sq, &ch.r_nabla_sq, &ch.b2]
                .iter()
                .map(|pd| Outcome::report(pd.residual.clone()))
                .collect(),
            Err(e) => (0..5).map(|_| Outcome::error(CheckKind::ComparisonReport, &e)).collect(),
        }));
        let planned = vec![
            check_id(format!("errata.mixed-scalar.n{n}"), CITE_MIXED),
            check_id(format!("errata.totally-geodesic.c24v.n{n}"), CITE_TOTALLY_GEODESIC),
            check_id(format!("errata.totally-geodesic.v.n{n}"), CITE_TOTALLY_GEODESIC),
            check_id(format!("errata.totally-geodesic.combination.n{n}"), CITE_TOTALLY_GEODESIC),
        ];
        out.push(Task::new(planned, move |_| {
            let params = params_for(n);
            let claimed = totally_geodesic_claims(n);
            let derived = totally_geodesic_from_pairings(n);
            vec![
                Outcome::report(mixed_scalar(&params) - mixed_scalar_frame_sum(&params)),
                Outcome::report(constant(claimed.c24v_sq - derived.c24v_sq)),
                Outcome::report(constant(claimed.v_sq - derived.v_sq)),
                Outcome::report(constant(claimed.combo - derived.combo)),
            ]
        }));
    }
    let planned = vec![check_id("errata.r-nabla-sq.s3", CITE_CHAIN), check_id("errata.b2.s3", CITE_CHAIN)];
    out.push(Task::new(planned, |ctx| {
        let ch = match ctx.chain(1) {
            Ok(ch) => ch,
            Err(e) => return (0..2).map(|_| Outcome::error(CheckKind::ComparisonReport, &e)).collect(),
        };
        let bindings = three_sphere_bindings();
        let jet = ctx.example().frame.jet();
        let direct = norm_sq(&jet.r_nabla_components());
        let printed = ch.r_nabla_sq.printed.partial_eval(&bindings);
        let r_nabla = Outcome::report(printed.clone() - constant(direct.clone()))
            .param("printed", &printed)
            .param("direct", &direct);
        let vol = Poly::var(Var::Vol);
        let subs = BTreeMap::from([
            (Var::IntA, vol.clone() * int(2)),
            (Var::IntV, vol * int(72)),
            (Var::C, int(1)),
        ]);
        let at_s3 = |p: &Poly| p.substitute_all(&subs);
        let b2 = Outcome::report(at_s3(&ch.b2.printed) - at_s3(&ch.b2.derived))
            .param("printed", at_s3(&ch.b2.printed))
            .param("derived", at_s3(&ch.b2.derived));
        vec![r_nabla, b2]
    }));
    out
}

/// Checks of the selected suites, without running them.
pub fn list_checks(config: &Config) -> Vec<PlannedCheck> {
    let mut planned: Vec<PlannedCheck> = tasks(config).into_iter().flat_map(|t| t.planned).collect();
    planned.sort_by(|a, b| a.id.cmp(&b.id));
    planned
}
