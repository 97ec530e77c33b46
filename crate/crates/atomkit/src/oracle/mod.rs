//! Independent numerical checks: quadrature rules, a finite-difference
//! radial eigensolver, and brute-force dipole matrix elements. Nothing in
//! here reuses the closed forms it is meant to test.

pub mod dipole;
pub mod eigensolve;
pub mod ode;
pub mod quadrature;

pub use dipole::{dipole_matrix_element, Axis};
pub use eigensolve::{radial_eigensolve, radial_eigensolve_refined, RadialGrid};
pub use ode::{rk45_adaptive, rk4_fixed, OdeSolution};
pub use quadrature::{
    gauss_legendre, integrate_segments, sphere_quadrature, sphere_quadrature_complex,
    QuadratureRule,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("quadrature order must be positive")]
    EmptyRule,
    #[error("Newton iteration for quadrature nodes stalled at node {index} of {order}")]
    NodeDivergence { index: usize, order: usize },
    #[error("radial grid needs at least {min} interior points, got {got}")]
    GridTooCoarse { min: usize, got: usize },
    #[error("grid extent must be positive and finite, got {r_max}")]
    BadExtent { r_max: f64 },
    #[error("requested {requested} bound levels but only {found} lie below zero on this grid")]
    TooFewBoundStates { requested: usize, found: usize },
    #[error("({n}, {l}, {m}) does not label a hydrogen bound state")]
    InvalidState { n: u32, l: u32, m: i32 },
    #[error("integration span [{t0}, {t_end}] is empty or not finite")]
    BadSpan { t0: f64, t_end: f64 },
    #[error("integration exceeded {limit} step attempts at t = {t}")]
    StepLimit { t: f64, limit: usize },
    #[error("step size underflow at t = {t}")]
    StepUnderflow { t: f64 },
}

impl OracleError {
    pub fn name(&self) -> &'static str {
        match self {
            OracleError::EmptyRule => "empty-rule",
            OracleError::NodeDivergence { .. } => "node-divergence",
            OracleError::GridTooCoarse { .. } => "grid-too-coarse",
            OracleError::BadExtent { .. } => "bad-extent",
            OracleError::TooFewBoundStates { .. } => "too-few-bound-states",
            OracleError::InvalidState { .. } => "invalid-state",
            OracleError::BadSpan { .. } => "bad-span",
            OracleError::StepLimit { .. } => "step-limit",
            OracleError::StepUnderflow { .. } => "step-underflow",
        }
    }
}
