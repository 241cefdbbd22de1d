use std::fmt;

use serde::{Deserialize, Serialize};

/// A formal symbol that may appear in a [`Poly`](super::Poly).
///
/// The derived ordering is the canonical variable order used when printing
/// and when comparing monomials of equal total degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    /// Constant φ-sectional curvature.
    C,
    /// D-homothetic deformation parameter.
    A,
    /// Pointwise squared norm of the O'Neill tensor A.
    Alpha,
    /// Diagonal pairing `(A_{φe_i}, A_{φe_i})`, 1-based leaf index.
    Sigma(u8),
    /// Off-diagonal pairing `(A_{f_i}, A_{f_j})`, `i < j`, 1-based horizontal indices.
    SigmaPair(u8, u8),
    /// Pointwise squared norm of the horizontal tensor V.
    VNorm,
    /// `|A_{φe_i} φe_j|^2` for `i < j`; only appears inside contractions.
    APair(u8, u8),
    /// Volume of the manifold.
    Vol,
    /// Integral of `|A|^2`.
    IntA,
    /// Integral of `6|C₂₄V|^2 - |V|^2`.
    IntV,
    /// Ambient Cartesian coordinate, 0-based.
    X(u8),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::C => write!(f, "c"),
            Var::A => write!(f, "a"),
            Var::Alpha => write!(f, "alpha"),
            Var::Sigma(i) => write!(f, "sigma{i}"),
            Var::SigmaPair(i, j) => write!(f, "sigma{i}_{j}"),
            Var::VNorm => write!(f, "vnorm"),
            Var::APair(i, j) => write!(f, "q{i}_{j}"),
            Var::Vol => write!(f, "Vol"),
            Var::IntA => write!(f, "IA"),
            Var::IntV => write!(f, "IV"),
            Var::X(k) => write!(f, "x{}", *k as u32 + 1),
        }
    }
}
