use std::f64::consts::PI;

use legfol::exactalg::Rational;
use legfol::spectra::{
    default_t_grid, fit_heat_coeffs, heat_trace, log_grid, sphere_multiplicity, sphere_spectrum, DEFAULT_KMAX,
};
use num_bigint::BigUint;
use num_traits::Zero;

fn monomials(vars: usize, degree: usize) -> Vec<Vec<usize>> {
    if vars == 1 {
        return vec![vec![degree]];
    }
    (0..=degree)
        .flat_map(|e| {
            monomials(vars - 1, degree - e).into_iter().map(move |mut rest| {
                rest.insert(0, e);
                rest
            })
        })
        .collect()
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[r][c];
            for j in c..cols {
                let v = &f * &rows[r][j];
                rows[i][j] -= v;
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the kernel of the Laplacian on degree-`k` polynomials in `vars` variables.
fn harmonic_dimension(vars: usize, k: usize) -> usize {
    let source = monomials(vars, k);
    if k < 2 {
        return source.len();
    }
    let target = monomials(vars, k - 2);
    // columns indexed by source monomials, rows by target monomials
    let mut mat = vec![vec![Rational::zero(); source.len()]; target.len()];
    for (col, mono) in source.iter().enumerate() {
        for v in 0..vars {
            if mono[v] >= 2 {
                let mut image = mono.clone();
                image[v] -= 2;
                let row = target.iter().position(|t| *t == image).unwrap();
                mat[row][col] += Rational::from_integer((mono[v] * (mono[v] - 1)).into());
            }
        }
    }
    source.len() - rank(mat)
}

#[test]
fn multiplicities_match_harmonic_polynomials() {
    for k in 0..=6 {
        assert_eq!(sphere_multiplicity(3, k), BigUint::from(harmonic_dimension(4, k)), "k = {k}");
        assert_eq!(sphere_multiplicity(2, k), BigUint::from(harmonic_dimension(3, k)), "k = {k}");
    }
}

#[test]
fn table_is_increasing_and_positive() {
    let s = sphere_spectrum(5, 40).unwrap();
    for w in s.entries().windows(2) {
        assert!(w[0].0 < w[1].0);
        assert!(w[1].1 > BigUint::zero());
    }
}

#[test]
fn trace_is_positive_and_decreasing() {
    let s = sphere_spectrum(3, DEFAULT_KMAX).unwrap();
    let values: Vec<f64> = log_grid(2e-4, 10.0, 40).iter().map(|&t| heat_trace(&s, t).unwrap()).collect();
    assert!(values.iter().all(|v| *v > 0.0));
    assert!(values.windows(2).all(|w| w[0] > w[1]));
}

#[test]
fn fit_recovers_three_sphere_coefficients() {
    let s = sphere_spectrum(3, DEFAULT_KMAX).unwrap();
    let fit = fit_heat_coeffs(&s, &default_t_grid()).unwrap();
    let vol = 2.0 * PI * PI;
    assert!((fit.a0 / vol - 1.0).abs() < 5e-3, "{fit:?}");
    assert!((fit.a1 / vol - 1.0).abs() < 1e-2, "{fit:?}");
    assert!((fit.a2 / (PI * PI) - 1.0).abs() < 2e-2, "{fit:?}");
    assert!(fit.condition.is_finite() && fit.residual_norm.is_finite());
}

#[test]
fn fit_error_decreases_under_refinement() {
    let vol = 2.0 * PI * PI;
    let levels = [(200, 2e-2, 2.0), (600, 2e-3, 2e-1), (DEFAULT_KMAX, 2e-4, 2e-2)];
    let errors: Vec<f64> = levels
        .iter()
        .map(|&(kmax, lo, hi)| {
            let s = sphere_spectrum(3, kmax).unwrap();
            let fit = fit_heat_coeffs(&s, &log_grid(lo, hi, 12)).unwrap();
            (fit.a2 / (PI * PI) - 1.0).abs() + (fit.a1 / vol - 1.0).abs()
        })
        .collect();
    assert!(errors[1] < errors[0], "{errors:?}");
    assert!(errors[2] < errors[1] * 1.1, "{errors:?}");
}
