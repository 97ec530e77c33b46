use super::{thomson_differential, ScatteringError};

/// Elastic form factor of the hydrogen ground state with orbital scale `a`:
/// the Fourier transform of the charge density at momentum transfer
/// `K = 2 k sin(theta / 2)`.
///
/// The transform of `exp(-2r/a) / (pi a^3)` closes to
/// `(1 + (K a / 2)^2)^{-2}`, which decreases monotonically from 1 at
/// forward scattering toward 0 at large transfer.
pub fn atom_form_factor(k: f64, theta: f64, a: f64) -> Result<f64, ScatteringError> {
    if !(k >= 0.0) {
        return Err(ScatteringError::BadTransfer { k });
    }
    if !(a > 0.0) {
        return Err(ScatteringError::BadScale { a });
    }
    let big_k = 2.0 * k * (theta / 2.0).sin();
    let u = big_k * a / 2.0;
    Ok(1.0 / (1.0 + u * u).powi(2))
}

/// Light scattering off the bound electron: the Thomson pattern scaled by
/// the squared form factor, so forward scattering keeps the free-electron
/// value and large momentum transfer is suppressed.
pub fn coherent_scattering_differential(
    phi: f64,
    theta: f64,
    k: f64,
    a: f64,
    alpha: f64,
) -> Result<f64, ScatteringError> {
    let f = atom_form_factor(k, theta, a)?;
    Ok(f * f * thomson_differential(phi, theta, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::integrate_segments;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    /// Direct Fourier transform of the ground-state density,
    /// `(4 pi / K) * integral sin(K r) |psi|^2 r dr`, resolved one
    /// half-oscillation per segment.
    fn form_factor_by_quadrature(big_k: f64, a: f64) -> f64 {
        let density = move |r: f64| (-2.0 * r / a).exp() / (PI * a.powi(3));
        if big_k == 0.0 {
            return 4.0 * PI
                * integrate_segments(|r| density(r) * r * r, 0.0, 40.0 * a, a / 2.0, 24);
        }
        let seg = (a / 2.0).min(PI / big_k);
        4.0 * PI / big_k
            * integrate_segments(|r| (big_k * r).sin() * density(r) * r, 0.0, 40.0 * a, seg, 24)
    }

    #[test]
    fn closed_form_matches_fourier_integral() {
        for &a in &[0.5, 1.0, 2.0] {
            for &big_k in &[0.0, 0.3, 1.0, 2.0, 5.0, 10.0] {
                // Feed K in through theta = pi so K = 2k sin(pi/2) = 2k.
                let f = atom_form_factor(big_k / 2.0, PI, a).unwrap();
                assert_relative_eq!(f, form_factor_by_quadrature(big_k, a), epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn forward_limit_and_known_point() {
        assert_relative_eq!(atom_form_factor(3.7, 0.0, 1.0).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(atom_form_factor(0.0, 1.0, 2.0).unwrap(), 1.0, max_relative = 1e-15);
        // K = 2, a = 1: (1 + 1)^-2 = 1/4.
        assert_relative_eq!(atom_form_factor(1.0, PI, 1.0).unwrap(), 0.25, max_relative = 1e-15);
    }

    #[test]
    fn monotone_decrease_in_transfer() {
        let mut prev = f64::INFINITY;
        for i in 0..200 {
            let k = 0.05 * i as f64;
            let f = atom_form_factor(k, PI, 1.0).unwrap();
            assert!(f <= prev && f > 0.0 && f <= 1.0);
            prev = f;
        }
    }

    #[test]
    fn rejects_bad_domain() {
        assert_eq!(
            atom_form_factor(-1.0, 1.0, 1.0).unwrap_err().name(),
            "bad-transfer"
        );
        assert_eq!(
            atom_form_factor(1.0, 1.0, 0.0).unwrap_err().name(),
            "bad-scale"
        );
    }
}
