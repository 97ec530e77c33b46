//! Hydrogen bound-state spectra in atomic units: the nonrelativistic
//! Schrödinger levels and wavefunctions, Zeeman splittings for orbital and
//! Pauli electrons, the Dirac fine structure with its terminating power
//! series, dipole selection rules, and the Bohr-Sommerfeld action route.

mod bohr_sommerfeld;
mod dirac;
mod levels;
mod radial;
mod selection;
mod zeeman;

pub use bohr_sommerfeld::{bohr_sommerfeld_level, radial_action};
pub use dirac::{
    dirac_binding_energy, dirac_level, dirac_level_binomial, dirac_radial_series,
    DiracRadialSeries,
};
pub use levels::{degeneracy, schrodinger_level, series_lines, series_name, Level, SpectralLine};
pub use radial::{radial_wavefunction, RadialFunction};
pub use selection::selection_allowed;
pub use zeeman::{anomalous_zeeman_lines, zeeman_levels, Polarization, Term, ZeemanLine, ZeemanMode};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("principal quantum number must be >= 1")]
    ZeroPrincipal,
    #[error("orbital number l = {l} must satisfy l < n = {n}")]
    OrbitalTooLarge { n: u32, l: u32 },
    #[error("|m| = {m_abs} exceeds l = {l}")]
    MagneticOutOfRange { l: u32, m_abs: u32 },
    #[error("series needs n_upper > n_lower = {n_lower}, got n_upper_max = {n_upper_max}")]
    EmptySeries { n_lower: u32, n_upper_max: u32 },
    #[error("line pattern requires |delta J| = 1 between terms, got delta 2J = {delta_doubled}")]
    ForbiddenTermPair { delta_doubled: i32 },
    #[error("coupling alpha = {alpha} is supercritical for l = {l}: (l+1)^2 <= alpha^2")]
    Supercritical { l: u32, alpha: f64 },
    #[error("radial power series fails to terminate at n_r = {n_r}: residual {residual:.3e}")]
    NonTerminating { n_r: u32, residual: f64 },
    #[error("no bound orbit: radial number k = {k} and angular number l = {l} give n = 0")]
    NoBoundOrbit { k: u32, l: u32 },
    #[error(transparent)]
    Angular(#[from] crate::angular::AngularError),
}

impl SpectraError {
    pub fn name(&self) -> &'static str {
        match self {
            SpectraError::ZeroPrincipal => "zero-principal",
            SpectraError::OrbitalTooLarge { .. } => "orbital-too-large",
            SpectraError::MagneticOutOfRange { .. } => "magnetic-out-of-range",
            SpectraError::EmptySeries { .. } => "empty-series",
            SpectraError::ForbiddenTermPair { .. } => "forbidden-term-pair",
            SpectraError::Supercritical { .. } => "supercritical-coupling",
            SpectraError::NonTerminating { .. } => "non-terminating-series",
            SpectraError::NoBoundOrbit { .. } => "no-bound-orbit",
            SpectraError::Angular(e) => e.name(),
        }
    }
}

pub(crate) fn validate_nl(n: u32, l: u32) -> Result<(), SpectraError> {
    if n == 0 {
        return Err(SpectraError::ZeroPrincipal);
    }
    if l >= n {
        return Err(SpectraError::OrbitalTooLarge { n, l });
    }
    Ok(())
}
