//! Laplace spectrum of the round sphere `S^m`, its heat trace, and a
//! least-squares extraction of the small-time heat coefficients.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

/// Truncation-tail bound `mult_kmax · e^{-t λ_kmax} / trace` accepted by [`heat_trace`].
pub const TAIL_TOL: f64 = 1e-14;

/// Largest accepted condition number of the column-scaled fit design.
pub const CONDITION_LIMIT: f64 = 1e8;

pub const DEFAULT_KMAX: usize = 2000;

pub const DEFAULT_T_MIN: f64 = 2e-4;
pub const DEFAULT_T_MAX: f64 = 2e-2;
pub const DEFAULT_T_POINTS: usize = 12;

#[derive(Debug, Error, PartialEq)]
pub enum SpectraError {
    #[error("sphere dimension must be at least 2, got {0}")]
    InvalidDimension(usize),
    #[error("kmax must be at least 1")]
    InvalidKmax,
    #[error("heat time must be positive and finite, got {0}")]
    InvalidTime(f64),
    #[error("kmax too small at t = {t}: tail bound {bound:e}")]
    TailTooLarge { t: f64, bound: f64 },
    #[error("fit needs at least 4 grid points, got {0}")]
    GridTooSmall(usize),
    #[error("fit is ill-conditioned (condition {0:e})")]
    IllConditioned(f64),
    #[error("least-squares solve failed: {0}")]
    Solve(String),
}

/// Eigenvalues `λ_k = k(k+m-1)` of the round `S^m` with their multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumTable {
    m: usize,
    entries: Vec<(u64, BigUint)>,
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// Multiplicity `C(m+k, k) - C(m+k-2, k-2)` of `λ_k` on `S^m`.
pub fn sphere_multiplicity(m: usize, k: usize) -> BigUint {
    let all = binomial(m + k, k);
    if k < 2 {
        all
    } else {
        all - binomial(m + k - 2, k - 2)
    }
}

pub fn sphere_spectrum(m: usize, kmax: usize) -> Result<SpectrumTable, SpectraError> {
    if m < 2 {
        return Err(SpectraError::InvalidDimension(m));
    }
    if kmax < 1 {
        return Err(SpectraError::InvalidKmax);
    }
    let entries = (0..=kmax)
        .map(|k| ((k * (k + m - 1)) as u64, sphere_multiplicity(m, k)))
        .collect();
    Ok(SpectrumTable { m, entries })
}

impl SpectrumTable {
    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn kmax(&self) -> usize {
        self.entries.len() - 1
    }

    /// `(λ_k, mult_k)` for `k = 0..=kmax`.
    pub fn entries(&self) -> &[(u64, BigUint)] {
        &self.entries
    }
}

/// `Σ_k mult_k e^{-t λ_k}` over the table, summed from the top down.
pub fn heat_trace(table: &SpectrumTable, t: f64) -> Result<f64, SpectraError> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(SpectraError::InvalidTime(t));
    }
    let term = |(lambda, mult): &(u64, BigUint)| mult.to_f64().unwrap_or(f64::INFINITY) * (-t * *lambda as f64).exp();
    let total: f64 = table.entries.iter().rev().map(term).sum();
    let bound = term(table.entries.last().expect("kmax >= 1")) / total;
    if bound.is_nan() || bound >= TAIL_TOL {
        return Err(SpectraError::TailTooLarge { t, bound });
    }
    Ok(total)
}

/// `count` log-spaced points in `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp())
        .collect()
}

pub fn default_t_grid() -> Vec<f64> {
    log_grid(DEFAULT_T_MIN, DEFAULT_T_MAX, DEFAULT_T_POINTS)
}

/// Fitted coefficients of `(4πt)^{m/2} Tr e^{-tΔ} ≈ â0 + â1 t + â2 t² + â3 t³`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeatFit {
    pub a0: f64,
    pub a1: f64,
    pub a2: f64,
    /// Nuisance coefficient absorbing higher orders.
    pub a3: f64,
    pub t_grid: Vec<f64>,
    /// Condition number of the column-scaled design matrix.
    pub condition: f64,
    pub residual_norm: f64,
}

pub fn fit_heat_coeffs(table: &SpectrumTable, t_grid: &[f64]) -> Result<HeatFit, SpectraError> {
    const ORDER: usize = 4;
    if t_grid.len() < ORDER {
        return Err(SpectraError::GridTooSmall(t_grid.len()));
    }
    let m = table.dim() as f64;
    let values: Vec<f64> = t_grid
        .par_iter()
        .map(|&t| heat_trace(table, t).map(|tr| (4.0 * PI * t).powf(m / 2.0) * tr))
        .collect::<Result<_, _>>()?;
    let scale = t_grid.iter().cloned().fold(0.0, f64::max);
    let design = DMatrix::from_fn(t_grid.len(), ORDER, |i, j| (t_grid[i] / scale).powi(j as i32));
    let rhs = DVector::from_vec(values);
    let svd = design.clone().svd(true, true);
    let (smax, smin) = (svd.singular_values.max(), svd.singular_values.min());
    let condition = smax / smin;
    if condition.is_nan() || condition >= CONDITION_LIMIT {
        return Err(SpectraError::IllConditioned(condition));
    }
    let scaled = svd.solve(&rhs, 0.0).map_err(|e| SpectraError::Solve(e.to_string()))?;
    let residual_norm = (&design * &scaled - &rhs).norm();
    let coeff = |j: usize| scaled[j] / scale.powi(j as i32);
    Ok(HeatFit {
        a0: coeff(0),
        a1: coeff(1),
        a2: coeff(2),
        a3: coeff(3),
        t_grid: t_grid.to_vec(),
        condition,
        residual_norm,
    })
}
