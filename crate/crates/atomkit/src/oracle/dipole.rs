use super::quadrature::{sphere_quadrature_complex, QuadratureRule};
use super::OracleError;
use crate::angular::SphericalHarmonic;
use crate::spectra::radial_wavefunction;

/// Cartesian component of the position operator in a matrix element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    /// The factor x_p / r as a function of direction.
    pub fn direction(self, theta: f64, phi: f64) -> f64 {
        match self {
            Axis::X => theta.sin() * phi.cos(),
            Axis::Y => theta.sin() * phi.sin(),
            Axis::Z => theta.cos(),
        }
    }
}

/// |<a| x_p |b>| between hydrogen bound states a = (n, l, m), b likewise,
/// by brute-force quadrature: a scaled Gauss-Laguerre rule handles the
/// radial factor exactly (the integrand is polynomial times exponential)
/// and a product rule on the sphere handles the angular factor exactly.
/// No selection rule is consulted; forbidden pairs simply integrate to zero.
pub fn dipole_matrix_element(
    a: (u32, u32, i32),
    b: (u32, u32, i32),
    axis: Axis,
) -> Result<f64, OracleError> {
    let (ra, ya) = state_parts(a)?;
    let (rb, yb) = state_parts(b)?;

    let beta = ra.decay_rate() + rb.decay_rate();
    // Polynomial degree of r^3 R_a R_b with the exponentials factored out.
    let degree = (a.0 - 1) + (b.0 - 1) + 3;
    let rule = QuadratureRule::gauss_laguerre_scaled(degree as usize / 2 + 2, beta)?;
    let radial = rule.integrate(|r| ra.polynomial_part(r) * rb.polynomial_part(r) * r.powi(3));

    let angular = sphere_quadrature_complex(
        |theta, phi| {
            ya.eval(theta, phi).conj() * axis.direction(theta, phi) * yb.eval(theta, phi)
        },
        a.1.max(b.1) + 1,
    );

    Ok((radial * angular).norm())
}

fn state_parts(
    (n, l, m): (u32, u32, i32),
) -> Result<(crate::spectra::RadialFunction, SphericalHarmonic), OracleError> {
    let radial = radial_wavefunction(n, l).map_err(|_| OracleError::InvalidState { n, l, m })?;
    let harmonic =
        SphericalHarmonic::new(l, m).map_err(|_| OracleError::InvalidState { n, l, m })?;
    Ok((radial, harmonic))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyman_alpha_z_element() {
        // <1s| z |2p0> = 128 sqrt(2) / 243, a classic closed form.
        let expect = 128.0 * 2.0_f64.sqrt() / 243.0;
        let got = dipole_matrix_element((1, 0, 0), (2, 1, 0), Axis::Z).unwrap();
        assert!(((got - expect) / expect).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn xy_elements_match_z_pattern() {
        // For (1s -> 2p, m' = +/-1) the x and y elements share the modulus
        // of the z element divided by sqrt(2).
        let z = dipole_matrix_element((1, 0, 0), (2, 1, 0), Axis::Z).unwrap();
        let x = dipole_matrix_element((1, 0, 0), (2, 1, 1), Axis::X).unwrap();
        let y = dipole_matrix_element((1, 0, 0), (2, 1, -1), Axis::Y).unwrap();
        assert!(((x - z / 2.0_f64.sqrt()) / z).abs() < 1e-12);
        assert!(((y - z / 2.0_f64.sqrt()) / z).abs() < 1e-12);
    }

    #[test]
    fn forbidden_pairs_vanish() {
        for (a, b, axis) in [
            ((1, 0, 0), (2, 0, 0), Axis::Z),  // delta l = 0
            ((1, 0, 0), (3, 2, 0), Axis::Z),  // delta l = 2
            ((2, 1, 0), (3, 2, 2), Axis::X),  // delta m = 2
            ((1, 0, 0), (2, 1, 1), Axis::Z),  // z needs delta m = 0
        ] {
            let v = dipole_matrix_element(a, b, axis).unwrap();
            assert!(v.abs() < 1e-13, "{a:?} -> {b:?}: {v}");
        }
    }

    #[test]
    fn invalid_state_rejected() {
        assert_eq!(
            dipole_matrix_element((2, 2, 0), (1, 0, 0), Axis::Z).unwrap_err().name(),
            "invalid-state"
        );
        assert_eq!(
            dipole_matrix_element((1, 0, 0), (2, 1, 2), Axis::Z).unwrap_err().name(),
            "invalid-state"
        );
    }
}
