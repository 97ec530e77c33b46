//! Exact spectral evolution of free fields (Maxwell, Schrödinger,
//! Klein–Gordon) on a periodic box, dipole radiation, interface optics,
//! and the classical Zeeman oscillator.

mod dispersion;
mod export;
mod fresnel;
mod hertz;
mod lattice;
mod maxwell;
mod zeeman_motion;

pub use dispersion::{
    free_dispersion_evolve, gaussian_packet, DispersionKind, PacketSpec, ScalarField,
};
pub use export::{write_component_csv, write_raw_with_header, RawHeader};
pub use fresnel::{fresnel, Polarization, SurfaceResponse};
pub use hertz::{
    hertz_dipole, radiated_power, retarded_potentials, CompactSource, DipoleSource,
    RadiationSample,
};
pub use lattice::Lattice;
pub use maxwell::{plane_wave, CurrentSource, MaxwellField};
pub use zeeman_motion::{
    classical_zeeman_modes, larmor_precession_rate, oscillator_spectrum_peaks,
    oscillator_trajectory, OscillatorTrack, PrecessionKind, ZeemanModes,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("lattice dims must be 1 or 3, got {dims}")]
    BadDims { dims: u8 },
    #[error("lattice needs at least four points per axis, got {n}")]
    TooFewPoints { n: usize },
    #[error("box length must be positive and finite, got {len}")]
    BadLength { len: f64 },
    #[error("component has {got} samples but the lattice holds {expected}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error(
        "initial constraints violated: |div E - 4 pi rho| = {div_e}, |div B| = {div_b} exceed {tol}"
    )]
    ConstraintViolated { div_e: f64, div_b: f64, tol: f64 },
    #[error("source has a nonzero spatial mean ({magnitude}), incompatible with the periodic box")]
    MeanCurrent { magnitude: f64 },
    #[error("field point coincides with the dipole")]
    SingularPoint,
    #[error("source support radius must be positive and finite, got {radius}")]
    BadSupport { radius: f64 },
    #[error("field point at distance {distance} lies inside the support ball of radius {radius}")]
    InsideSupport { distance: f64, radius: f64 },
    #[error("ball quadrature stalled at residual {residual}, wanted {tol}")]
    QuadratureStalled { residual: f64, tol: f64 },
    #[error("incidence angle must lie in [0, pi/2), got {alpha}")]
    BadIncidence { alpha: f64 },
    #[error("refractive index must be positive, got {index}")]
    BadIndex { index: f64 },
    #[error("oscillator frequency must be positive, got {omega0}")]
    BadOscillator { omega0: f64 },
    #[error("magnetic field must be finite, got {b_field}")]
    BadField { b_field: f64 },
    #[error("trajectory request invalid: {reason}")]
    BadTrack { reason: String },
    #[error("packet spec invalid: {reason}")]
    BadPacket { reason: String },
    #[error("output write failed: {reason}")]
    WriteFailed { reason: String },
}

impl FieldError {
    pub fn name(&self) -> &'static str {
        match self {
            FieldError::BadDims { .. } => "bad-dims",
            FieldError::TooFewPoints { .. } => "too-few-points",
            FieldError::BadLength { .. } => "bad-length",
            FieldError::ShapeMismatch { .. } => "shape-mismatch",
            FieldError::ConstraintViolated { .. } => "constraint-violated",
            FieldError::MeanCurrent { .. } => "mean-current",
            FieldError::SingularPoint => "singular-point",
            FieldError::BadSupport { .. } => "bad-support",
            FieldError::InsideSupport { .. } => "inside-support",
            FieldError::QuadratureStalled { .. } => "quadrature-stalled",
            FieldError::BadIncidence { .. } => "bad-incidence",
            FieldError::BadIndex { .. } => "bad-index",
            FieldError::BadOscillator { .. } => "bad-oscillator",
            FieldError::BadField { .. } => "bad-field",
            FieldError::BadTrack { .. } => "bad-track",
            FieldError::BadPacket { .. } => "bad-packet",
            FieldError::WriteFailed { .. } => "write-failed",
        }
    }
}
