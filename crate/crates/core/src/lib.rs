//! Verification toolkit for Riemannian Legendre foliations on Sasakian space forms.
//!
//! The crate pairs every closed-form curvature and heat-coefficient expression with an
//! independent computation and reports exact (polynomial) or floating-point residuals.

// tensor code indexes several arrays with the same frame index
#![allow(clippy::needless_range_loop)]

pub mod closed_forms;
pub mod embed_geom;
pub mod exactalg;
pub mod foliation;
pub mod frame_engine;
pub mod spectra;
pub mod verify;
