use num_complex::Complex64;

use super::FieldError;

/// Field orientation relative to the plane of incidence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarization {
    /// E perpendicular to the plane of incidence (s).
    Perpendicular,
    /// E in the plane of incidence (p).
    Parallel,
}

/// Outcome of a plane wave hitting the interface between two transparent
/// media. Total internal reflection is a regular outcome, not an error:
/// the reflected amplitude turns complex with unit modulus and the
/// transmitted wave becomes evanescent.
#[derive(Debug, Clone, Copy)]
pub enum SurfaceResponse {
    Propagating {
        r_amp: f64,
        t_amp: f64,
        alpha_refracted: f64,
        reflectance: f64,
        transmittance: f64,
    },
    TotallyReflected {
        r_amp: Complex64,
        /// Evanescent boundary amplitude; it carries no power.
        t_amp: Complex64,
    },
}

impl SurfaceResponse {
    pub fn reflectance(&self) -> f64 {
        match self {
            SurfaceResponse::Propagating { reflectance, .. } => *reflectance,
            SurfaceResponse::TotallyReflected { r_amp, .. } => r_amp.norm_sqr(),
        }
    }

    pub fn transmittance(&self) -> f64 {
        match self {
            SurfaceResponse::Propagating { transmittance, .. } => *transmittance,
            SurfaceResponse::TotallyReflected { .. } => 0.0,
        }
    }
}

/// Amplitude reflection and transmission at a plane interface.
///
/// Snell's law fixes the refracted angle; the amplitudes follow from the
/// tangential matching conditions,
/// `r_s = (n1 cos a - n2 cos a') / (n1 cos a + n2 cos a')` and
/// `r_p = (n2 cos a - n1 cos a') / (n2 cos a + n1 cos a')`,
/// with `t = 2 n1 cos a` over the same denominator. The power split
/// satisfies `R + T = 1` with `T = (n2 cos a' / n1 cos a) t^2`, and the
/// parallel reflectance vanishes at the Brewster angle `atan(n2 / n1)`.
pub fn fresnel(
    alpha: f64,
    n1: f64,
    n2: f64,
    polarization: Polarization,
) -> Result<SurfaceResponse, FieldError> {
    if !(alpha.is_finite() && (0.0..std::f64::consts::FRAC_PI_2).contains(&alpha)) {
        return Err(FieldError::BadIncidence { alpha });
    }
    for index in [n1, n2] {
        if !(index.is_finite() && index > 0.0) {
            return Err(FieldError::BadIndex { index });
        }
    }
    let sin_refr = n1 * alpha.sin() / n2;
    let cos_in = alpha.cos();
    if sin_refr > 1.0 {
        // evanescent branch: cos a' = i q with q > 0 decaying into medium 2
        let q = (sin_refr * sin_refr - 1.0).sqrt();
        let (num, den) = match polarization {
            Polarization::Perpendicular => (
                Complex64::new(n1 * cos_in, -n2 * q),
                Complex64::new(n1 * cos_in, n2 * q),
            ),
            Polarization::Parallel => (
                Complex64::new(n2 * cos_in, -n1 * q),
                Complex64::new(n2 * cos_in, n1 * q),
            ),
        };
        return Ok(SurfaceResponse::TotallyReflected {
            r_amp: num / den,
            t_amp: Complex64::new(2.0 * n1 * cos_in, 0.0) / den,
        });
    }
    let alpha_refracted = sin_refr.asin();
    let cos_refr = alpha_refracted.cos();
    let (num, den) = match polarization {
        Polarization::Perpendicular => {
            (n1 * cos_in - n2 * cos_refr, n1 * cos_in + n2 * cos_refr)
        }
        Polarization::Parallel => (n2 * cos_in - n1 * cos_refr, n2 * cos_in + n1 * cos_refr),
    };
    let r_amp = num / den;
    let t_amp = 2.0 * n1 * cos_in / den;
    let reflectance = r_amp * r_amp;
    let transmittance = n2 * cos_refr / (n1 * cos_in) * t_amp * t_amp;
    Ok(SurfaceResponse::Propagating {
        r_amp,
        t_amp,
        alpha_refracted,
        reflectance,
        transmittance,
    })
}
