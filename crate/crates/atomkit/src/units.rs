//! Hartree atomic units and the few physical constants the library needs.
//!
//! Convention: `ħ = μ = |e| = 1`, the electron charge is `e = -1`, and the
//! speed of light is `c = 1/α`. Energies are in Hartree, lengths in Bohr
//! radii, frequencies in Hartree/ħ.

/// CODATA value of the fine-structure constant's inverse, to the precision
/// used throughout.
pub const INV_ALPHA: f64 = 137.035999;

/// Default fine-structure constant α = e²/(cħ).
pub const ALPHA: f64 = 1.0 / INV_ALPHA;

/// Electron charge in atomic units.
pub const E_CHARGE: f64 = -1.0;

/// Speed of light for a given fine-structure constant.
#[inline]
pub fn speed_of_light(alpha: f64) -> f64 {
    1.0 / alpha
}

/// Larmor frequency ω_L = eB/(2μc).
///
/// With `e = -1` this is negative for `B > 0`; the sign is kept so that the
/// orbital Zeeman shift is `m·ω_L` with no further sign juggling.
#[inline]
pub fn larmor_frequency(b_field: f64, alpha: f64) -> f64 {
    E_CHARGE * b_field / (2.0 * speed_of_light(alpha))
}

/// Classical electron radius r_e = e²/(μc²) = α² in atomic units.
#[inline]
pub fn classical_electron_radius(alpha: f64) -> f64 {
    alpha * alpha
}
