//! Cross sections and orbits: Thomson light scattering, the hydrogen atom
//! form factor, classical and quantum Rutherford scattering with screening,
//! the photoeffect angular law, and Kepler trajectories with conservation
//! monitoring.

mod form_factor;
mod kepler;
mod photoeffect;
mod rutherford;
mod thomson;

pub use form_factor::{atom_form_factor, coherent_scattering_differential};
pub use kepler::{kepler_trajectory, ConicClass, OrbitSample, Trajectory};
pub use photoeffect::{photo_regime, photoeffect_pattern, red_bound, PhotoRegime};
pub use rutherford::{
    classical_rutherford, deflection_angle, deflection_angle_numeric, quantum_rutherford,
};
pub use thomson::{thomson_differential, thomson_differential_unpolarized, thomson_total};

use serde::Serialize;
use thiserror::Error;

/// Angles below this count as the forward singularity for unscreened
/// Coulomb cross sections: report a domain error, never a clamped value.
pub const THETA_MIN: f64 = 1e-6;

/// One angular sample of a differential cross section, in atomic units of
/// area per steradian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CrossSectionSample {
    pub theta: f64,
    pub phi: Option<f64>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScatteringError {
    #[error("scattering angle theta = {theta} lies outside (0, pi]")]
    AngleOutOfRange { theta: f64 },
    #[error("forward singularity: theta = {theta} is below the {min} rad cutoff")]
    ForwardSingularity { theta: f64, min: f64 },
    #[error("head-on launch (b = 0) has no hyperbolic deflection")]
    HeadOnCollision,
    #[error("impact parameter must be positive, got {b}")]
    BadImpactParameter { b: f64 },
    #[error("projectile mass must be positive, got {m}")]
    BadMass { m: f64 },
    #[error("projectile speed must be positive, got {v}")]
    BadSpeed { v: f64 },
    #[error("zero coupling constant gives no orbit curvature")]
    ZeroCoupling,
    #[error("wavenumber must be positive, got {k}")]
    BadWavenumber { k: f64 },
    #[error("screening parameter must be nonnegative, got {eps}")]
    BadScreening { eps: f64 },
    #[error("orbital scale must be positive, got {a}")]
    BadScale { a: f64 },
    #[error("momentum transfer needs k >= 0, got {k}")]
    BadTransfer { k: f64 },
    #[error("red bound needs a bound-state frequency omega1 < 0, got {omega1}")]
    NotBound { omega1: f64 },
    #[error("light frequency must be positive, got {omega}")]
    BadFrequency { omega: f64 },
    #[error("time span must be positive and finite, got {t}")]
    BadTimeSpan { t: f64 },
    #[error("degenerate launch: initial position at the force center")]
    DegenerateLaunch,
    #[error("zero angular momentum: a radial orbit falls into the center")]
    SingularOrbit,
    #[error("trajectory integration failed: {reason}")]
    IntegratorFailure { reason: String },
}

impl ScatteringError {
    pub fn name(&self) -> &'static str {
        match self {
            ScatteringError::AngleOutOfRange { .. } => "angle-out-of-range",
            ScatteringError::ForwardSingularity { .. } => "forward-singularity",
            ScatteringError::HeadOnCollision => "head-on-collision",
            ScatteringError::BadImpactParameter { .. } => "bad-impact-parameter",
            ScatteringError::BadMass { .. } => "bad-mass",
            ScatteringError::BadSpeed { .. } => "bad-speed",
            ScatteringError::ZeroCoupling => "zero-coupling",
            ScatteringError::BadWavenumber { .. } => "bad-wavenumber",
            ScatteringError::BadScreening { .. } => "bad-screening",
            ScatteringError::BadScale { .. } => "bad-scale",
            ScatteringError::BadTransfer { .. } => "bad-transfer",
            ScatteringError::NotBound { .. } => "not-bound",
            ScatteringError::BadFrequency { .. } => "bad-frequency",
            ScatteringError::BadTimeSpan { .. } => "bad-time-span",
            ScatteringError::DegenerateLaunch => "degenerate-launch",
            ScatteringError::SingularOrbit => "singular-orbit",
            ScatteringError::IntegratorFailure { .. } => "integrator-failure",
        }
    }
}
