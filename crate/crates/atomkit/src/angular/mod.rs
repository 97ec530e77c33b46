//! Exact angular-momentum algebra: irreducible representations, ladder
//! coefficients, spherical harmonics, l ⊗ 1/2 coupling, and Landé factors.

mod coupling;
mod halfint;
mod harmonics;
mod lande;
mod rep;

pub use coupling::{couple_l_half, sigma_l_weight_matrix, Branch, SpinorComponent, SpinorHarmonic};
pub use halfint::HalfInt;
pub use harmonics::{ladder_harmonic, LadderHarmonic, SphericalHarmonic};
pub use lande::{lande_g, lande_g_rational, vector_model_g};
pub use rep::{ladder_coefficients, spin_half_rotation, spin_representation, AngularRep};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AngularError {
    #[error("invalid quantum-number pair: 2J = {twice_j}, 2M = {twice_m} (need |M| <= J and J - M integral)")]
    InvalidPair { twice_j: i32, twice_m: i32 },
    #[error("|m| = {m_abs} exceeds l = {l}")]
    MagneticOutOfRange { l: u32, m_abs: u32 },
    #[error("no j = l - 1/2 states exist for l = 0 (that eigenspace is empty)")]
    EmptyMinusBranch,
    #[error("j = {j} is not l +/- 1/2 for l = {l}")]
    BranchMismatch { l: u32, j: HalfInt },
    #[error("Lande factor undefined for J = 0")]
    ZeroTotalJ,
}

impl AngularError {
    /// Stable machine-readable name, used by the CLI for exit diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            AngularError::InvalidPair { .. } => "invalid-quantum-pair",
            AngularError::MagneticOutOfRange { .. } => "magnetic-out-of-range",
            AngularError::EmptyMinusBranch => "empty-minus-branch",
            AngularError::BranchMismatch { .. } => "branch-mismatch",
            AngularError::ZeroTotalJ => "zero-total-j",
        }
    }
}
