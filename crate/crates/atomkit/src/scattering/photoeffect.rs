use super::ScatteringError;
use serde::Serialize;
use std::f64::consts::PI;

/// Where a light frequency sits relative to the ionization threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PhotoRegime {
    /// Below the red bound: the atom polarizes but no electron escapes.
    BelowThreshold,
    /// At or above the red bound: photoelectrons are emitted.
    Ionizing,
}

/// Angular distribution of photoelectrons for light incident along the
/// polar axis and polarized along phi = 0, normalized to unit integral
/// over the sphere: `(3 / 4 pi) sin^2(theta) cos^2(phi)`.
///
/// Emission peaks along the polarization and vanishes along the beam.
pub fn photoeffect_pattern(theta: f64, phi: f64) -> f64 {
    let s = theta.sin();
    let c = phi.cos();
    3.0 / (4.0 * PI) * s * s * c * c
}

/// Minimal light frequency that can ionize a state of (negative) energy
/// `omega1`: the threshold is `|omega1|`.
pub fn red_bound(omega1: f64) -> Result<f64, ScatteringError> {
    if !(omega1 < 0.0) {
        return Err(ScatteringError::NotBound { omega1 });
    }
    Ok(-omega1)
}

/// Classifies a light frequency against the ionization threshold of the
/// state with energy `omega1 < 0`.
pub fn photo_regime(omega: f64, omega1: f64) -> Result<PhotoRegime, ScatteringError> {
    let bound = red_bound(omega1)?;
    if !(omega > 0.0) {
        return Err(ScatteringError::BadFrequency { omega });
    }
    Ok(if omega >= bound {
        PhotoRegime::Ionizing
    } else {
        PhotoRegime::BelowThreshold
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::sphere_quadrature;
    use approx::assert_relative_eq;

    #[test]
    fn pattern_is_normalized_and_nulls_along_the_beam() {
        let total = sphere_quadrature(photoeffect_pattern, 3);
        assert_relative_eq!(total, 1.0, max_relative = 1e-12);
        assert!(photoeffect_pattern(0.0, 0.3).abs() < 1e-30);
        assert!(photoeffect_pattern(PI, 1.0).abs() < 1e-30);
        // Peak along the polarization direction.
        let peak = photoeffect_pattern(PI / 2.0, 0.0);
        assert_relative_eq!(peak, 3.0 / (4.0 * PI), max_relative = 1e-15);
        assert!(photoeffect_pattern(PI / 2.0, PI / 2.0) < peak);
    }

    #[test]
    fn threshold_for_the_ground_state() {
        assert_relative_eq!(red_bound(-0.5).unwrap(), 0.5, max_relative = 1e-15);
        assert_eq!(red_bound(0.3).unwrap_err().name(), "not-bound");
        assert_eq!(
            photo_regime(0.4, -0.5).unwrap(),
            PhotoRegime::BelowThreshold
        );
        assert_eq!(photo_regime(0.6, -0.5).unwrap(), PhotoRegime::Ionizing);
        assert_eq!(photo_regime(-0.1, -0.5).unwrap_err().name(), "bad-frequency");
    }
}
