use super::OracleError;

/// Accepted states of an integration, one entry per recorded time.
#[derive(Debug, Clone)]
pub struct OdeSolution<const N: usize> {
    pub t: Vec<f64>,
    pub y: Vec<[f64; N]>,
    pub steps: usize,
    pub rejected: usize,
}

// Dormand-Prince 5(4) tableau.  The e-row is the difference between the
// fifth- and fourth-order weights and sums to zero exactly; the estimate
// would otherwise pick up a spurious O(h) term that wrecks step control
// at tight tolerances.
const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A2: [f64; 1] = [0.2];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
const B: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

const MAX_ATTEMPTS: usize = 5_000_000;

fn weighted_rms<const N: usize>(
    err: &[f64; N],
    y0: &[f64; N],
    y1: &[f64; N],
    rtol: f64,
    atol: f64,
) -> f64 {
    let mut sum = 0.0;
    for i in 0..N {
        let sc = atol + rtol * y0[i].abs().max(y1[i].abs());
        let r = err[i] / sc;
        sum += r * r;
    }
    (sum / N as f64).sqrt()
}

/// Embedded Dormand-Prince 5(4) integration of `y' = f(t, y)` over
/// `[t0, t_end]` with standard proportional step control.
///
/// With `sample_every = Some(dt)` the step size is clamped so accepted
/// steps land exactly on `t0 + i dt` and only those states are recorded
/// (plus the initial one); `None` records every accepted step.  The local
/// error test uses `atol + rtol * |y|` per component.
pub fn rk45_adaptive<const N: usize, F>(
    f: F,
    t0: f64,
    t_end: f64,
    y0: [f64; N],
    rtol: f64,
    atol: f64,
    sample_every: Option<f64>,
) -> Result<OdeSolution<N>, OracleError>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let span = t_end - t0;
    if !(span > 0.0) || !span.is_finite() {
        return Err(OracleError::BadSpan { t0, t_end });
    }
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);

    // Initial step from the first-derivative scale, refined by the
    // controller within a couple of attempts.
    let mut d0: f64 = 0.0;
    let mut d1: f64 = 0.0;
    for i in 0..N {
        let sc = atol + rtol * y[i].abs();
        d0 += (y[i] / sc) * (y[i] / sc);
        d1 += (k1[i] / sc) * (k1[i] / sc);
    }
    let mut h = if d1 > 0.0 {
        (0.01 * (d0.sqrt() / d1.sqrt())).min(span / 10.0)
    } else {
        span / 100.0
    };

    let mut sol = OdeSolution {
        t: vec![t0],
        y: vec![y0],
        steps: 0,
        rejected: 0,
    };
    let mut sample_index = 0u64;
    let mut next_sample = sample_every.map(|dt| t0 + dt);
    let tiny = 1e-14 * span;
    let mut just_rejected = false;

    while t < t_end - tiny {
        if sol.steps + sol.rejected >= MAX_ATTEMPTS {
            return Err(OracleError::StepLimit {
                t,
                limit: MAX_ATTEMPTS,
            });
        }
        if h <= 16.0 * f64::EPSILON * t.abs().max(span) {
            return Err(OracleError::StepUnderflow { t });
        }

        let mut h_now = h.min(t_end - t);
        let mut lands_on_sample = false;
        if let Some(ts) = next_sample {
            if t + h_now >= ts - tiny {
                h_now = ts - t;
                lands_on_sample = true;
            }
        }

        let stage = |coeffs: &[f64], ks: &[&[f64; N]]| -> [f64; N] {
            let mut out = y;
            for (c, k) in coeffs.iter().zip(ks) {
                for i in 0..N {
                    out[i] += h_now * c * k[i];
                }
            }
            out
        };

        let k2 = f(t + C[1] * h_now, &stage(&A2, &[&k1]));
        let k3 = f(t + C[2] * h_now, &stage(&A3, &[&k1, &k2]));
        let k4 = f(t + C[3] * h_now, &stage(&A4, &[&k1, &k2, &k3]));
        let k5 = f(t + C[4] * h_now, &stage(&A5, &[&k1, &k2, &k3, &k4]));
        let k6 = f(t + C[5] * h_now, &stage(&A6, &[&k1, &k2, &k3, &k4, &k5]));
        let y5 = stage(&B[..6], &[&k1, &k2, &k3, &k4, &k5, &k6]);
        let k7 = f(t + h_now, &y5);

        let ks = [&k1, &k2, &k3, &k4, &k5, &k6, &k7];
        let mut err_v = [0.0; N];
        for (e, k) in E.iter().zip(ks) {
            for i in 0..N {
                err_v[i] += h_now * e * k[i];
            }
        }
        let err = weighted_rms(&err_v, &y, &y5, rtol, atol);

        if err <= 1.0 {
            t += h_now;
            y = y5;
            k1 = k7;
            sol.steps += 1;
            let record = match sample_every {
                Some(dt) => {
                    if lands_on_sample {
                        sample_index += 1;
                        next_sample = Some(t0 + (sample_index + 1) as f64 * dt);
                        true
                    } else {
                        false
                    }
                }
                None => true,
            };
            if record {
                sol.t.push(t);
                sol.y.push(y);
            }
            let grow_cap = if just_rejected { 1.0 } else { 5.0 };
            let fac = (0.9 * err.powf(-0.2)).clamp(0.2, grow_cap);
            h = (h_now * fac).min(span);
            just_rejected = false;
        } else {
            sol.rejected += 1;
            just_rejected = true;
            h = h_now * (0.9 * err.powf(-0.2)).max(0.2);
        }
    }

    // Sampling can leave the final time unrecorded when rounding pushes
    // the last grid point past t_end.
    if sample_every.is_some() && sol.t.last().is_some_and(|&last| last < t_end - tiny) {
        sol.t.push(t);
        sol.y.push(y);
    }
    Ok(sol)
}

/// Classical fixed-step fourth-order Runge-Kutta, recording all `n_steps + 1`
/// uniformly spaced states.  Used where the consumer needs a strictly
/// uniform time grid, e.g. for discrete Fourier analysis.
pub fn rk4_fixed<const N: usize, F>(
    f: F,
    t0: f64,
    y0: [f64; N],
    h: f64,
    n_steps: usize,
) -> OdeSolution<N>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let mut sol = OdeSolution {
        t: Vec::with_capacity(n_steps + 1),
        y: Vec::with_capacity(n_steps + 1),
        steps: n_steps,
        rejected: 0,
    };
    sol.t.push(t0);
    sol.y.push(y0);
    let mut y = y0;
    for step in 0..n_steps {
        let t = t0 + step as f64 * h;
        let k1 = f(t, &y);
        let mut y2 = y;
        for i in 0..N {
            y2[i] += 0.5 * h * k1[i];
        }
        let k2 = f(t + 0.5 * h, &y2);
        let mut y3 = y;
        for i in 0..N {
            y3[i] += 0.5 * h * k2[i];
        }
        let k3 = f(t + 0.5 * h, &y3);
        let mut y4 = y;
        for i in 0..N {
            y4[i] += h * k3[i];
        }
        let k4 = f(t + h, &y4);
        for i in 0..N {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        sol.t.push(t0 + (step + 1) as f64 * h);
        sol.y.push(y);
    }
    sol
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    #[test]
    fn decay_matches_exponential() {
        let sol = rk45_adaptive(|_, y: &[f64; 1]| [-y[0]], 0.0, 5.0, [1.0], 1e-10, 1e-12, None)
            .unwrap();
        let yf = sol.y.last().unwrap()[0];
        assert_relative_eq!(yf, (-5.0f64).exp(), max_relative = 1e-9);
        assert!(sol.steps < 500, "steps {}", sol.steps);
    }

    #[test]
    fn oscillator_error_control_is_fifth_order() {
        // Ten revolutions of the unit circle; a correct embedded estimate
        // keeps the step count modest even at tight tolerances.
        let rhs = |_: f64, y: &[f64; 2]| [y[1], -y[0]];
        let loose = rk45_adaptive(rhs, 0.0, 20.0 * PI, [1.0, 0.0], 1e-8, 1e-10, None).unwrap();
        let tight = rk45_adaptive(rhs, 0.0, 20.0 * PI, [1.0, 0.0], 1e-12, 1e-14, None).unwrap();
        let yf = tight.y.last().unwrap();
        assert_abs_diff_eq!(yf[0], 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(yf[1], 0.0, epsilon = 1e-9);
        // Fifth-order cost scaling: 10^4 tolerance ratio ~ factor 10^(4/5).
        let ratio = tight.steps as f64 / loose.steps as f64;
        assert!(ratio < 12.0, "loose {} tight {}", loose.steps, tight.steps);
    }

    #[test]
    fn sampling_lands_on_the_uniform_grid() {
        let sol = rk45_adaptive(
            |_, y: &[f64; 2]| [y[1], -y[0]],
            0.0,
            1.0,
            [1.0, 0.0],
            1e-9,
            1e-12,
            Some(0.125),
        )
        .unwrap();
        assert_eq!(sol.t.len(), 9);
        for (i, &t) in sol.t.iter().enumerate() {
            assert_abs_diff_eq!(t, 0.125 * i as f64, epsilon = 1e-12);
        }
    }

    #[test]
    fn fixed_step_is_fourth_order() {
        let run = |h: f64| {
            let n = (1.0 / h).round() as usize;
            let sol = rk4_fixed(|_, y: &[f64; 1]| [-y[0]], 0.0, [1.0], h, n);
            (sol.y.last().unwrap()[0] - (-1.0f64).exp()).abs()
        };
        let e1 = run(0.01);
        let e2 = run(0.005);
        let order = (e1 / e2).log2();
        assert!((order - 4.0).abs() < 0.3, "observed order {order}");
    }

    #[test]
    fn rejects_empty_span() {
        let r = rk45_adaptive(|_, y: &[f64; 1]| [-y[0]], 1.0, 1.0, [1.0], 1e-9, 1e-9, None);
        assert_eq!(r.unwrap_err().name(), "bad-span");
    }
}
