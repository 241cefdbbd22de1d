//! One line per acceptance criterion; the test fails if any line fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use legfol::closed_forms::{
    brute_force_norms, frame_curvature, frame_ricci, gilkey_a_coeffs, norm_r_sq, norm_ric_sq, space_form_heat_coeffs,
    jacobi_chain, tau_nabla_minimal, tau_nabla_frame_line, FoliationSymbols, SasakiParams,
};
use legfol::embed_geom::{identity_residuals, SasakianStructure};
use legfol::exactalg::{rat, Poly, Var};
use legfol::spectra::{default_t_grid, fit_heat_coeffs, sphere_spectrum};
use legfol::verify::{run_suite, CheckKind, Config, Report, Status, Suite, HEAT_REL_TOL};

const N_MAX: usize = 8;
const NORMS_BUDGET: Duration = Duration::from_secs(5);
const SASAKIAN_BUDGET: Duration = Duration::from_secs(5);
const HEAT_BUDGET: Duration = Duration::from_secs(60);
const SASAKIAN_TOL: f64 = 1e-9;
const SASAKIAN_SAMPLES: usize = 100;
const EXAMPLE_TOL: f64 = 1e-8;
const HEAT_KMAX: usize = 2000;
const A0_REL: f64 = 5e-3;
const A1_REL: f64 = 1e-2;
const A2_REL: f64 = 2e-2;

struct Line {
    number: u32,
    ok: bool,
    detail: String,
}

fn line(number: u32, ok: bool, detail: impl Into<String>) -> Line {
    Line { number, ok, detail: detail.into() }
}

fn suite_report(suite: Suite) -> Report {
    run_suite(&Config::default().with_suites(&[suite]))
}

fn pass_kind_all_pass(r: &Report) -> bool {
    r.summary.fail == 0 && r.checks.iter().filter(|c| c.kind != CheckKind::ComparisonReport).all(|c| c.passed())
}

fn criterion_norms() -> Line {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=N_MAX {
        let params = SasakiParams::symbolic(n).unwrap();
        let fc = frame_curvature(&params);
        let (r2, ric2) = brute_force_norms(&fc, &frame_ricci(&fc));
        if !(r2 - norm_r_sq(&params)).is_zero() || !(ric2 - norm_ric_sq(&params)).is_zero() {
            bad.push(n);
        }
    }
    let elapsed = start.elapsed();
    line(
        1,
        bad.is_empty() && elapsed < NORMS_BUDGET,
        format!("norm identities n=1..{N_MAX}, nonzero at {bad:?}, {elapsed:.2?} (budget {NORMS_BUDGET:?})"),
    )
}

fn criterion_a_coeffs() -> Line {
    let mut bad = Vec::new();
    for n in 1..=N_MAX {
        let params = SasakiParams::symbolic(n).unwrap();
        let fc = frame_curvature(&params);
        let ricci = frame_ricci(&fc);
        let (r2, ric2) = brute_force_norms(&fc, &ricci);
        let m = 2 * n + 1;
        let tau: Poly = (0..m).map(|a| &ricci[a * m + a]).sum();
        let g = gilkey_a_coeffs(&tau, &r2, &ric2);
        let printed = space_form_heat_coeffs(&params);
        if !(g.a1 - printed.a1).is_zero() || !(g.a2 - printed.a2).is_zero() {
            bad.push(n);
        }
    }
    let vol = Poly::var(Var::Vol);
    let at = |n| space_form_heat_coeffs(&SasakiParams::bound(n, rat(1, 1)).unwrap());
    let spots = [
        at(1).a1 == vol,
        at(1).a2 == &vol * &Poly::frac(1, 2),
        at(2).a2 == &vol * &Poly::frac(16, 3),
    ];
    line(
        2,
        bad.is_empty() && spots.iter().all(|&b| b),
        format!("a1, a2 n=1..{N_MAX}, nonzero at {bad:?}; spots a1(1,1)=Vol, a2(1,1)=Vol/2, a2(2,1)=16/3 Vol: {spots:?}"),
    )
}

fn criterion_tau_nabla_and_grouping() -> Line {
    let mut bad = Vec::new();
    for n in 1..=N_MAX {
        let params = SasakiParams::symbolic(n).unwrap();
        let alpha = FoliationSymbols { n }.alpha();
        let tau_ok = (tau_nabla_frame_line(&params, &alpha) - tau_nabla_minimal(&params, &alpha)).is_zero();
        let chain = jacobi_chain(&params).unwrap();
        if !(tau_ok && chain.e.agrees() && chain.grouping.agrees()) {
            bad.push(n);
        }
    }
    line(3, bad.is_empty(), format!("transverse scalar curvature and E-grouping n=1..{N_MAX}, failing at {bad:?}"))
}

fn criterion_errata() -> Line {
    let r = suite_report(Suite::Errata);
    let reported = |prefix: &str| {
        r.checks
            .iter()
            .filter(|c| c.id.starts_with(prefix))
            .all(|c| c.status == Status::Reported && c.kind == CheckKind::ComparisonReport)
            && r.checks.iter().any(|c| c.id.starts_with(prefix))
    };
    let families = ["errata.b1.", "errata.rho-nabla-route.", "errata.r-nabla-sq.s3", "errata.b2."];
    let present: Vec<bool> = families.iter().map(|f| reported(f)).collect();
    let s3 = r.check("errata.r-nabla-sq.s3");
    let values = s3.is_some_and(|c| c.params["printed"] == "76" && c.params["direct"] == "64");
    line(
        4,
        present.iter().all(|&b| b) && values && r.summary.fail == 0 && r.exit_code() == 0,
        format!("{} reported residuals, families {families:?} present {present:?}, R-nabla S3 printed 76 vs direct 64: {values}", r.summary.reported),
    )
}

fn criterion_sasakian() -> Line {
    let start = Instant::now();
    let mut worst = 0.0_f64;
    for n in 1..=3 {
        for (_, r) in identity_residuals(&SasakianStructure::standard(n), SASAKIAN_SAMPLES, 42) {
            worst = if r.is_nan() { f64::NAN } else { worst.max(r) };
        }
    }
    let elapsed = start.elapsed();
    line(
        5,
        worst < SASAKIAN_TOL && elapsed < SASAKIAN_BUDGET,
        format!("six identities on S3, S5, S7 at {SASAKIAN_SAMPLES} points, worst {worst:e} (tol {SASAKIAN_TOL:e}), {elapsed:.2?}"),
    )
}

fn criterion_example() -> Line {
    let r = suite_report(Suite::Example1S3);
    let embedded_tol_ok = r
        .checks
        .iter()
        .filter(|c| c.id.starts_with("example1.embedded."))
        .all(|c| c.params.get("tol").map(String::as_str) == Some("1e-8"));
    let tuple = r.check("example1.invariant-tuple").is_some_and(|c| c.passed());
    line(
        6,
        pass_kind_all_pass(&r) && embedded_tol_ok && tuple,
        format!("{} example checks, {} failed, embedded tol {EXAMPLE_TOL:e}, invariant tuple (3, Vol, 1, 2Vol, 0, 72Vol): {tuple}", r.checks.len(), r.summary.fail),
    )
}

fn criterion_berger() -> Line {
    let r = suite_report(Suite::Berger);
    let ids = ["identity", "a1", "a2", "a4"].map(|s| format!("berger.phi-sectional.{s}"));
    let all = ids.iter().all(|id| r.check(id).is_some_and(|c| c.passed()));
    line(7, pass_kind_all_pass(&r) && all, format!("phi-sectional (4-3a)/a and spots a=1,2,4: {all}"))
}

fn criterion_heat() -> Line {
    let start = Instant::now();
    let fit = sphere_spectrum(3, HEAT_KMAX).and_then(|s| fit_heat_coeffs(&s, &default_t_grid()));
    let elapsed = start.elapsed();
    match fit {
        Ok(f) => {
            let rel = [f.a0 / (2.0 * PI * PI) - 1.0, f.a1 / (2.0 * PI * PI) - 1.0, f.a2 / (PI * PI) - 1.0].map(f64::abs);
            let ok = rel[0] < A0_REL && rel[1] < A1_REL && rel[2] < A2_REL && elapsed < HEAT_BUDGET;
            line(
                8,
                ok,
                format!("a0 {:.6} a1 {:.6} a2 {:.6}, relative errors {:.2e} {:.2e} {:.2e} (tol {A0_REL:e}, {A1_REL:e}, {A2_REL:e}), {elapsed:.2?}", f.a0, f.a1, f.a2, rel[0], rel[1], rel[2]),
            )
        }
        Err(e) => line(8, false, format!("fit failed: {e}")),
    }
}

fn strip_timings(r: &Report) -> String {
    let mut v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    v.as_object_mut().unwrap().remove("timings");
    serde_json::to_string(&v).unwrap()
}

fn criterion_determinism() -> Line {
    let cfg = Config::default();
    let (a, b) = (run_suite(&cfg), run_suite(&cfg));
    let same = strip_timings(&a) == strip_timings(&b);
    let all_pass = a.exit_code() == 0;
    line(
        9,
        same && all_pass,
        format!("two default runs ({} checks) identical modulo timings: {same}; default run exit code {}", a.checks.len(), a.exit_code()),
    )
}

#[test]
fn acceptance_criteria() {
    assert_eq!(HEAT_REL_TOL, [A0_REL, A1_REL, A2_REL]);
    let defaults = Config::default();
    assert_eq!((defaults.tol, defaults.example_tol, defaults.samples), (SASAKIAN_TOL, EXAMPLE_TOL, SASAKIAN_SAMPLES));
    assert_eq!((defaults.n_max, defaults.kmax), (N_MAX, HEAT_KMAX));

    let lines = [
        criterion_norms(),
        criterion_a_coeffs(),
        criterion_tau_nabla_and_grouping(),
        criterion_errata(),
        criterion_sasakian(),
        criterion_example(),
        criterion_berger(),
        criterion_heat(),
        criterion_determinism(),
    ];
    for l in &lines {
        println!("criterion {}: {} | {}", l.number, if l.ok { "PASS" } else { "FAIL" }, l.detail);
    }
    let failing: Vec<u32> = lines.iter().filter(|l| !l.ok).map(|l| l.number).collect();
    assert!(failing.is_empty(), "failing criteria: {failing:?}");
}
