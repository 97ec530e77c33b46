use crate::units::classical_electron_radius;

/// Differential cross section for light scattering off a free electron,
/// per unit solid angle, with the incident wave linearly polarized.
///
/// The scattered direction makes polar angle `theta` with the incident
/// beam; `phi` is the azimuth measured from the polarization axis.  The
/// electron reradiates with the dipole pattern, so the cross section is
/// `r_e^2 (1 - sin^2(theta) cos^2(phi))` and vanishes along the
/// polarization axis.
pub fn thomson_differential(phi: f64, theta: f64, alpha: f64) -> f64 {
    let re = classical_electron_radius(alpha);
    let s = theta.sin();
    let c = phi.cos();
    re * re * (1.0 - s * s * c * c)
}

/// Same pattern averaged over incident polarizations: `cos^2(phi)` turns
/// into 1/2, leaving the familiar `(1 + cos^2(theta)) / 2` shape.
pub fn thomson_differential_unpolarized(theta: f64, alpha: f64) -> f64 {
    let re = classical_electron_radius(alpha);
    let s = theta.sin();
    re * re * (1.0 - 0.5 * s * s)
}

/// Total Thomson cross section, `(8 pi / 3) r_e^2`.  Polarization drops
/// out of the solid-angle integral.
pub fn thomson_total(alpha: f64) -> f64 {
    let re = classical_electron_radius(alpha);
    8.0 * std::f64::consts::PI / 3.0 * re * re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::sphere_quadrature;
    use crate::units::ALPHA;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn pattern_extremes() {
        let re2 = classical_electron_radius(ALPHA).powi(2);
        // Perpendicular to the polarization the full dipole amplitude
        // survives, regardless of theta.
        assert_relative_eq!(thomson_differential(PI / 2.0, 1.234, ALPHA), re2, max_relative = 1e-14);
        // Forward scattering keeps the full amplitude too.
        assert_relative_eq!(thomson_differential(0.0, 0.0, ALPHA), re2, max_relative = 1e-14);
        // Looking straight down the polarization axis: no radiation.
        assert!(thomson_differential(0.0, PI / 2.0, ALPHA).abs() < 1e-40);
    }

    #[test]
    fn unpolarized_is_polarization_average() {
        for &theta in &[0.3, 1.1, 2.4] {
            let n = 64;
            let avg: f64 = (0..n)
                .map(|i| thomson_differential(2.0 * PI * i as f64 / n as f64, theta, ALPHA))
                .sum::<f64>()
                / n as f64;
            assert_relative_eq!(
                avg,
                thomson_differential_unpolarized(theta, ALPHA),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn total_matches_quadrature_of_pattern() {
        let quad = sphere_quadrature(|theta, phi| thomson_differential(phi, theta, ALPHA), 4);
        assert_relative_eq!(quad, thomson_total(ALPHA), max_relative = 1e-10);
        let re2 = classical_electron_radius(ALPHA).powi(2);
        assert_relative_eq!(thomson_total(ALPHA), 8.0 * PI / 3.0 * re2, max_relative = 1e-15);
    }
}
