use num_complex::Complex64;

use crate::oracle::quadrature::gauss_legendre;

use super::FieldError;

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn scale(s: f64, a: [f64; 3]) -> [f64; 3] {
    [s * a[0], s * a[1], s * a[2]]
}

/// Oscillating point dipole `p(t) = amplitude cos(frequency t)` at the origin.
#[derive(Debug, Clone, Copy)]
pub struct DipoleSource {
    pub amplitude: [f64; 3],
    pub frequency: f64,
}

impl DipoleSource {
    pub fn moment(&self, t: f64) -> [f64; 3] {
        scale((self.frequency * t).cos(), self.amplitude)
    }

    pub fn moment_rate(&self, t: f64) -> [f64; 3] {
        scale(-self.frequency * (self.frequency * t).sin(), self.amplitude)
    }

    pub fn moment_accel(&self, t: f64) -> [f64; 3] {
        let w = self.frequency;
        scale(-w * w * (w * t).cos(), self.amplitude)
    }
}

/// Radiation-zone field sample at one point and time.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct RadiationSample {
    pub e: [f64; 3],
    pub b: [f64; 3],
    pub poynting: [f64; 3],
}

/// Wave-zone fields of the dipole: `B = p_ddot(t - r/c) x n / (c^2 r)`,
/// `E = B x n`, `S = (c / 4 pi) E x B`. The Poynting flow is radial with
/// magnitude `p_ddot^2 sin^2(theta) / (4 pi c^3 r^2)` and vanishes on the
/// dipole axis.
pub fn hertz_dipole(
    source: &DipoleSource,
    x: [f64; 3],
    t: f64,
    c_light: f64,
) -> Result<RadiationSample, FieldError> {
    let r = dot(x, x).sqrt();
    if r == 0.0 {
        return Err(FieldError::SingularPoint);
    }
    let n_hat = scale(1.0 / r, x);
    let accel = source.moment_accel(t - r / c_light);
    let b = scale(1.0 / (c_light * c_light * r), cross(accel, n_hat));
    let e = cross(b, n_hat);
    let poynting = scale(c_light / (4.0 * std::f64::consts::PI), cross(e, b));
    Ok(RadiationSample { e, b, poynting })
}

/// Total power radiated by a dipole with instantaneous second derivative
/// `p_ddot`: the Larmor value `2 |p_ddot|^2 / (3 c^3)`.
pub fn radiated_power(p_ddot: [f64; 3], c_light: f64) -> f64 {
    2.0 * dot(p_ddot, p_ddot) / (3.0 * c_light.powi(3))
}

/// Compactly supported source for the retarded potentials: either static
/// data or a single-frequency amplitude `f(y, t) = Re[f_hat(y) e^{-i nu t}]`.
/// Both evaluators must vanish outside the stated ball.
pub enum CompactSource<'a> {
    Static {
        center: [f64; 3],
        radius: f64,
        rho: &'a dyn Fn([f64; 3]) -> f64,
        current: &'a dyn Fn([f64; 3]) -> [f64; 3],
    },
    Harmonic {
        center: [f64; 3],
        radius: f64,
        frequency: f64,
        rho_amplitude: &'a dyn Fn([f64; 3]) -> Complex64,
        current_amplitude: &'a dyn Fn([f64; 3]) -> [Complex64; 3],
    },
}

impl CompactSource<'_> {
    fn geometry(&self) -> ([f64; 3], f64) {
        match self {
            CompactSource::Static { center, radius, .. } => (*center, *radius),
            CompactSource::Harmonic { center, radius, .. } => (*center, *radius),
        }
    }
}

/// Scalar and vector potentials at `x` from a compact source, by adaptive
/// quadrature over the support ball.
///
/// The static branch is the Coulomb integral; the harmonic branch carries
/// the limiting-amplitude kernel `exp(i nu s / c) / s`, which is the long-time
/// retarded solution for a single-frequency source. The field point must lie
/// outside the support so the kernel stays smooth.
pub fn retarded_potentials(
    source: &CompactSource,
    x: [f64; 3],
    t: f64,
    c_light: f64,
    tol: f64,
) -> Result<(f64, [f64; 3]), FieldError> {
    let (center, radius) = source.geometry();
    if !(radius.is_finite() && radius > 0.0) {
        return Err(FieldError::BadSupport { radius });
    }
    let offset = [x[0] - center[0], x[1] - center[1], x[2] - center[2]];
    let distance = dot(offset, offset).sqrt();
    if distance <= radius {
        return Err(FieldError::InsideSupport { distance, radius });
    }
    let integrand = |y: [f64; 3]| -> [Complex64; 4] {
        let s = ((x[0] - y[0]).powi(2) + (x[1] - y[1]).powi(2) + (x[2] - y[2]).powi(2)).sqrt();
        match source {
            CompactSource::Static { rho, current, .. } => {
                let kernel = 1.0 / s;
                let j = current(y);
                [
                    Complex64::new(rho(y) * kernel, 0.0),
                    Complex64::new(j[0] * kernel / c_light, 0.0),
                    Complex64::new(j[1] * kernel / c_light, 0.0),
                    Complex64::new(j[2] * kernel / c_light, 0.0),
                ]
            }
            CompactSource::Harmonic {
                frequency,
                rho_amplitude,
                current_amplitude,
                ..
            } => {
                let kernel = Complex64::from_polar(1.0 / s, frequency * s / c_light);
                let j = current_amplitude(y);
                [
                    rho_amplitude(y) * kernel,
                    j[0] * kernel / c_light,
                    j[1] * kernel / c_light,
                    j[2] * kernel / c_light,
                ]
            }
        }
    };
    let raw = ball_integral(center, radius, integrand, tol)?;
    match source {
        CompactSource::Static { .. } => Ok((raw[0].re, [raw[1].re, raw[2].re, raw[3].re])),
        CompactSource::Harmonic { frequency, .. } => {
            let clock = Complex64::from_polar(1.0, -frequency * t);
            Ok((
                (clock * raw[0]).re,
                [
                    (clock * raw[1]).re,
                    (clock * raw[2]).re,
                    (clock * raw[3]).re,
                ],
            ))
        }
    }
}

/// Integrate a 4-component complex integrand over a ball, refining both the
/// radial partition and the angular order until two successive levels agree
/// to `tol` componentwise.
fn ball_integral<F: Fn([f64; 3]) -> [Complex64; 4]>(
    center: [f64; 3],
    radius: f64,
    f: F,
    tol: f64,
) -> Result<[Complex64; 4], FieldError> {
    let levels: [(usize, usize); 4] = [(8, 12), (16, 24), (32, 36), (64, 48)];
    let mut previous: Option<[Complex64; 4]> = None;
    let mut last_residual = f64::INFINITY;
    for (segments, l_max) in levels {
        let current = ball_level(center, radius, &f, segments, l_max);
        if let Some(last) = previous {
            last_residual = (0..4)
                .map(|i| (current[i] - last[i]).norm())
                .fold(0.0f64, f64::max);
            if last_residual < tol {
                return Ok(current);
            }
        }
        previous = Some(current);
    }
    Err(FieldError::QuadratureStalled {
        residual: last_residual,
        tol,
    })
}

fn ball_level<F: Fn([f64; 3]) -> [Complex64; 4]>(
    center: [f64; 3],
    radius: f64,
    f: &F,
    segments: usize,
    l_max: usize,
) -> [Complex64; 4] {
    let (gl_x, gl_w) = gauss_legendre(12);
    let (ct_x, ct_w) = gauss_legendre(l_max + 2);
    let n_phi = 2 * l_max + 4;
    let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
    let h = radius / segments as f64;
    let mut total = [Complex64::default(); 4];
    for seg in 0..segments {
        let lo = seg as f64 * h;
        for (xi, wi) in gl_x.iter().zip(&gl_w) {
            let r = lo + 0.5 * h * (1.0 + xi);
            let wr = 0.5 * h * wi * r * r;
            for (ci, cwi) in ct_x.iter().zip(&ct_w) {
                let sin_t = (1.0 - ci * ci).sqrt();
                for k in 0..n_phi {
                    let phi = k as f64 * dphi;
                    let y = [
                        center[0] + r * sin_t * phi.cos(),
                        center[1] + r * sin_t * phi.sin(),
                        center[2] + r * ci,
                    ];
                    let v = f(y);
                    let w = wr * cwi * dphi;
                    for i in 0..4 {
                        total[i] += w * v[i];
                    }
                }
            }
        }
    }
    total
}
