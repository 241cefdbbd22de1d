//! Closed-form curvature, heat-coefficient and foliation expressions for Sasakian
//! space forms, each paired with an independent brute-force counterpart.
//!
//! The leaf dimension `n` is a fixed integer per instance; the φ-sectional curvature
//! `c` is normally the formal symbol [`Var::C`] so that identities are decided as exact
//! polynomial identities.
//!
//! Frame-index convention: for an adapted frame `(e_1..e_n, φe_1..φe_n, ξ)` the index
//! `i` (0-based) is `e_{i+1}`, `n + i` is `φe_{i+1}` and `2n` is `ξ`. The horizontal
//! frame `f_a` is `φe_{a+1}` for `a < n` and `ξ` for `a = n`. Four-index curvature
//! components follow `R(X,Y,Z,W) = g(R(X,Y)W, Z)`, so `R(X,Y,X,Y)` is the sectional
//! curvature of an orthonormal pair.

mod frame;
mod heat;
mod jacobi_chain;
mod structure;

use thiserror::Error;

use crate::exactalg::{AlgError, Poly, Rational, Var};

pub use frame::{
    brute_force_norms, frame_curvature, frame_ricci, norm_r_sq, norm_ric_sq, ricci_and_scalar,
    AdaptedFrame, FrameCurvature, FrameSlot,
};
pub use heat::{
    a_t_relation, gilkey_a_coeffs, integrated_tau_nabla, mixed_scalar, mixed_scalar_frame_sum,
    space_form_heat_coeffs, totally_geodesic_claims, totally_geodesic_from_pairings, tau_nabla_frame_sum,
    tau_nabla_frame_line, tau_nabla_minimal, theorem_invariant_vector, ACoeffs, HeatCoeffs,
    InvariantVector, TotallyGeodesicConstants,
};
pub use jacobi_chain::{
    integrate_pointwise, jacobi_chain, three_sphere_bindings, FoliationSymbols, PrintedVsDerived,
    JacobiChain,
};
pub use structure::{closed_form_frame_tensor, curvature_closed_form, StructureData};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("leaf dimension must be at least 1, got {0}")]
    InvalidLeafDimension(usize),
    #[error("inconsistent structure data: {0}")]
    InconsistentStructure(String),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// Leaf dimension and φ-sectional curvature of a `(2n+1)`-dimensional space form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SasakiParams {
    n: usize,
    c: Poly,
}

impl SasakiParams {
    pub fn new(n: usize, c: Poly) -> Result<Self, ClosedFormError> {
        if n == 0 {
            return Err(ClosedFormError::InvalidLeafDimension(n));
        }
        Ok(SasakiParams { n, c })
    }

    /// `c` kept as the formal symbol.
    pub fn symbolic(n: usize) -> Result<Self, ClosedFormError> {
        Self::new(n, Poly::var(Var::C))
    }

    pub fn bound(n: usize, c: Rational) -> Result<Self, ClosedFormError> {
        Self::new(n, Poly::constant(c))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> &Poly {
        &self.c
    }

    pub fn dim(&self) -> usize {
        2 * self.n + 1
    }

    /// `n = 1` is below the `dim >= 5` range of the space-form formulas but is the
    /// only dimension in which a foliated example is realized.
    pub fn is_three_dimensional(&self) -> bool {
        self.n == 1
    }

    pub(crate) fn n_poly(&self) -> Poly {
        Poly::int(self.n as i64)
    }

    /// `(c+3)/4`
    pub(crate) fn kappa(&self) -> Poly {
        (&self.c + Poly::int(3)) * Poly::frac(1, 4)
    }

    /// `(c-1)/4`
    pub(crate) fn mu(&self) -> Poly {
        (&self.c - Poly::int(1)) * Poly::frac(1, 4)
    }

    /// `(n(c+3)+c-1)/2`, the Ricci eigenvalue on the contact distribution.
    pub(crate) fn ricci_d(&self) -> Poly {
        (self.n_poly() * (&self.c + Poly::int(3)) + &self.c - Poly::int(1)) * Poly::frac(1, 2)
    }

    /// `d = (c+3)n/4 + 3(c-1)/4`.
    pub(crate) fn d(&self) -> Poly {
        self.kappa() * self.n_poly() + self.mu() * Poly::int(3)
    }
}
