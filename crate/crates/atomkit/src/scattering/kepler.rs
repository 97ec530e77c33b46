use super::ScatteringError;
use crate::oracle::rk45_adaptive;
use serde::Serialize;
use std::f64::consts::PI;

/// Conic type of a Kepler orbit, read off the eccentricity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConicClass {
    Ellipse,
    Parabola,
    Hyperbola,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitSample {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub vx: f64,
    pub vy: f64,
}

/// An integrated planar orbit in the potential `-gamma / r`, together
/// with its conserved quantities and the worst drift seen in them.
#[derive(Debug, Clone, Serialize)]
pub struct Trajectory {
    pub samples: Vec<OrbitSample>,
    /// Energy per unit mass at launch, `v^2/2 - gamma/r`.
    pub energy: f64,
    /// Angular momentum per unit mass at launch, `x vy - y vx` (equals
    /// `r^2 phi_dot` along the orbit).
    pub angular_momentum: f64,
    /// `sqrt(1 + 2 E L^2 / gamma^2)`.
    pub eccentricity: f64,
    pub class: ConicClass,
    /// Orbital period for bound orbits, `2 pi gamma / (-2E)^(3/2)`.
    pub period: Option<f64>,
    pub max_energy_drift: f64,
    pub max_momentum_drift: f64,
}

/// Integrates `x_ddot = -gamma x / r^3` from `(x0, v0)` over `[0, t_end]`,
/// recording `samples` evenly spaced snapshots.
///
/// Zero angular momentum is rejected up front: such an orbit is radial and
/// reaches the center in finite time.  The eccentricity classification is
/// independent of the launch energy sign, which makes the two a useful
/// cross-check (`e < 1` exactly when `E < 0`).
pub fn kepler_trajectory(
    x0: [f64; 2],
    v0: [f64; 2],
    gamma: f64,
    t_end: f64,
    samples: usize,
) -> Result<Trajectory, ScatteringError> {
    let r0 = (x0[0] * x0[0] + x0[1] * x0[1]).sqrt();
    if !(r0 > 0.0) {
        return Err(ScatteringError::DegenerateLaunch);
    }
    if gamma == 0.0 || !gamma.is_finite() {
        return Err(ScatteringError::ZeroCoupling);
    }
    if !(t_end > 0.0) || !t_end.is_finite() {
        return Err(ScatteringError::BadTimeSpan { t: t_end });
    }
    let speed0 = (v0[0] * v0[0] + v0[1] * v0[1]).sqrt();
    let l0 = x0[0] * v0[1] - x0[1] * v0[0];
    if l0.abs() <= 1e-12 * r0 * speed0 {
        return Err(ScatteringError::SingularOrbit);
    }

    let energy = 0.5 * speed0 * speed0 - gamma / r0;
    let ecc_sq = 1.0 + 2.0 * energy * l0 * l0 / (gamma * gamma);
    let eccentricity = ecc_sq.max(0.0).sqrt();
    let class = if (eccentricity - 1.0).abs() <= 1e-9 {
        ConicClass::Parabola
    } else if eccentricity < 1.0 {
        ConicClass::Ellipse
    } else {
        ConicClass::Hyperbola
    };
    let period = if class == ConicClass::Ellipse {
        Some(2.0 * PI * gamma / (-2.0 * energy).powf(1.5))
    } else {
        None
    };

    let n_out = samples.max(2);
    let dt = t_end / (n_out - 1) as f64;
    let rhs = move |_t: f64, y: &[f64; 4]| {
        let r2 = y[0] * y[0] + y[1] * y[1];
        let s = -gamma / (r2 * r2.sqrt());
        [y[2], y[3], s * y[0], s * y[1]]
    };
    let sol = rk45_adaptive(
        rhs,
        0.0,
        t_end,
        [x0[0], x0[1], v0[0], v0[1]],
        1e-12,
        1e-14,
        Some(dt),
    )
    .map_err(|e| ScatteringError::IntegratorFailure {
        reason: e.to_string(),
    })?;

    // Drift is measured against the launch value, with the kinetic scale
    // as a floor so near-parabolic orbits (E ~ 0) stay meaningful.
    let energy_scale = energy
        .abs()
        .max(1e-9 * (0.5 * speed0 * speed0 + (gamma / r0).abs()));
    let mut out = Vec::with_capacity(sol.t.len());
    let mut max_energy_drift: f64 = 0.0;
    let mut max_momentum_drift: f64 = 0.0;
    for (&t, y) in sol.t.iter().zip(&sol.y) {
        let r = (y[0] * y[0] + y[1] * y[1]).sqrt();
        if !r.is_finite() || r == 0.0 {
            return Err(ScatteringError::IntegratorFailure {
                reason: format!("orbit reached r = {r} at t = {t}"),
            });
        }
        let e_t = 0.5 * (y[2] * y[2] + y[3] * y[3]) - gamma / r;
        let l_t = y[0] * y[3] - y[1] * y[2];
        max_energy_drift = max_energy_drift.max((e_t - energy).abs() / energy_scale);
        max_momentum_drift = max_momentum_drift.max((l_t - l0).abs() / l0.abs());
        out.push(OrbitSample {
            t,
            x: y[0],
            y: y[1],
            vx: y[2],
            vy: y[3],
        });
    }

    Ok(Trajectory {
        samples: out,
        energy,
        angular_momentum: l0,
        eccentricity,
        class,
        period,
        max_energy_drift,
        max_momentum_drift,
    })
}
