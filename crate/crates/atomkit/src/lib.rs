//! Closed-form atomic physics with built-in numerical cross-checks.
//!
//! The library computes hydrogen spectra (Schrödinger, Pauli/Zeeman, Dirac),
//! exact angular-momentum algebra, dipole selection rules, classical and
//! quantum scattering cross sections, dielectric/magnetic response functions,
//! and exact spectral evolution of free Maxwell, Schrödinger, and
//! Klein-Gordon fields. Every closed form is paired with an independent
//! numerical oracle (finite-difference eigensolver, quadrature, adaptive ODE
//! integration) in [`oracle`] or in the consuming module's tests.
//!
//! All quantities are in Hartree atomic units (`ħ = μ = |e| = 1`, electron
//! charge `e = -1`, `c = 1/α`) unless a function documents otherwise.

// Validation guards are written `!(x > 0.0)` on purpose: NaN fails the
// inner comparison and is rejected, where `x <= 0.0` would wave it through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angular;
pub mod fields;
pub mod oracle;
pub mod response;
pub mod scattering;
pub mod spectra;
pub mod units;
