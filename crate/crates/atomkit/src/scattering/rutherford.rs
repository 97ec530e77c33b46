use super::{ScatteringError, THETA_MIN};
use crate::oracle::rk45_adaptive;
use std::f64::consts::PI;

fn check_angle(theta: f64) -> Result<(), ScatteringError> {
    if !theta.is_finite() || !(0.0..=PI).contains(&theta) {
        return Err(ScatteringError::AngleOutOfRange { theta });
    }
    Ok(())
}

fn check_projectile(m: f64, v: f64) -> Result<(), ScatteringError> {
    if !(m > 0.0) {
        return Err(ScatteringError::BadMass { m });
    }
    if !(v > 0.0) {
        return Err(ScatteringError::BadSpeed { v });
    }
    Ok(())
}

/// Classical Coulomb cross section for a projectile of charge `q`, mass `m`
/// and asymptotic speed `v` on a fixed center of charge `z` (both charges
/// in units of the elementary charge):
/// `(q z / (m v^2))^2 / (4 sin^4(theta/2))`.
///
/// The angle must stay away from the forward singularity; below
/// [`THETA_MIN`] this reports a domain error rather than a clamped value.
pub fn classical_rutherford(
    theta: f64,
    q: f64,
    z: f64,
    m: f64,
    v: f64,
) -> Result<f64, ScatteringError> {
    check_angle(theta)?;
    if theta < THETA_MIN {
        return Err(ScatteringError::ForwardSingularity {
            theta,
            min: THETA_MIN,
        });
    }
    check_projectile(m, v)?;
    let a = q * z / (m * v * v);
    let s = (theta / 2.0).sin();
    Ok(a * a / (4.0 * s.powi(4)))
}

/// Born cross section for a screened Coulomb center, `(2/(K^2 + eps^2))^2`
/// with momentum transfer `K = 2 k sin(theta/2)`.
///
/// The screening scale `eps` regularizes forward scattering; at `eps = 0`
/// this reduces to the classical Rutherford value for unit charges with
/// `m v` replaced by `k`, and the forward cutoff applies again.
pub fn quantum_rutherford(theta: f64, k: f64, eps: f64) -> Result<f64, ScatteringError> {
    check_angle(theta)?;
    if !(k > 0.0) {
        return Err(ScatteringError::BadWavenumber { k });
    }
    if !(eps >= 0.0) {
        return Err(ScatteringError::BadScreening { eps });
    }
    if eps == 0.0 && theta < THETA_MIN {
        return Err(ScatteringError::ForwardSingularity {
            theta,
            min: THETA_MIN,
        });
    }
    let big_k = 2.0 * k * (theta / 2.0).sin();
    let f = 2.0 / (big_k * big_k + eps * eps);
    Ok(f * f)
}

/// Hyperbolic deflection angle of a projectile with impact parameter `b`,
/// from `cot(theta/2) = m b v^2 / (q z)`.
///
/// The branch is fixed by the sign of the coupling: repulsion (`q z > 0`)
/// gives an angle in (0, pi), attraction lands in (pi, 2 pi) because the
/// velocity rotates the other way around the center.
pub fn deflection_angle(b: f64, q: f64, z: f64, m: f64, v: f64) -> Result<f64, ScatteringError> {
    if b == 0.0 {
        return Err(ScatteringError::HeadOnCollision);
    }
    if !(b > 0.0) {
        return Err(ScatteringError::BadImpactParameter { b });
    }
    check_projectile(m, v)?;
    if q * z == 0.0 {
        return Err(ScatteringError::ZeroCoupling);
    }
    let x = m * b * v * v / (q * z);
    Ok(2.0 * f64::atan2(1.0, x))
}

/// Deflection angle measured from an integrated trajectory instead of the
/// closed-form cotangent relation, for cross-checking.
///
/// The projectile starts on the incoming asymptote at ~1e5 length scales
/// from the center and flies well past it; the finite launch distance
/// biases the angle by O(1e-5) rad, far below the 1e-4 rad agreement this
/// oracle is used to certify.  Same branch convention as
/// [`deflection_angle`]: counterclockwise rotation of the velocity,
/// reported in (0, 2 pi).
pub fn deflection_angle_numeric(
    b: f64,
    q: f64,
    z: f64,
    m: f64,
    v: f64,
) -> Result<f64, ScatteringError> {
    if b == 0.0 {
        return Err(ScatteringError::HeadOnCollision);
    }
    if !(b > 0.0) {
        return Err(ScatteringError::BadImpactParameter { b });
    }
    check_projectile(m, v)?;
    let coupling = q * z;
    if coupling == 0.0 {
        return Err(ScatteringError::ZeroCoupling);
    }

    let a_len = coupling.abs() / (m * v * v);
    let r0 = 1e5 * a_len.max(b);
    let t_end = 3.0 * r0 / v;
    let accel = coupling / m;
    let rhs = move |_t: f64, y: &[f64; 4]| {
        let r2 = y[0] * y[0] + y[1] * y[1];
        let s = accel / (r2 * r2.sqrt());
        [y[2], y[3], s * y[0], s * y[1]]
    };
    let sol = rk45_adaptive(rhs, 0.0, t_end, [-r0, b, v, 0.0], 1e-10, 1e-12, None)
        .map_err(|e| ScatteringError::IntegratorFailure {
            reason: e.to_string(),
        })?;
    let yf = sol.y[sol.y.len() - 1];
    let rf = (yf[0] * yf[0] + yf[1] * yf[1]).sqrt();
    if !rf.is_finite() || rf < 0.9 * r0 {
        return Err(ScatteringError::IntegratorFailure {
            reason: format!("projectile failed to escape: final r = {rf:.3e}"),
        });
    }
    // The launch velocity points along +x, so the accumulated rotation is
    // just the polar angle of the outgoing velocity.
    let delta = f64::atan2(yf[3], yf[2]);
    Ok(if delta <= 0.0 { delta + 2.0 * PI } else { delta })
}
