use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::oracle::rk4_fixed;
use crate::units::{larmor_frequency, speed_of_light, E_CHARGE};

use super::FieldError;

/// Eigenfrequencies of the bound electron in a uniform magnetic field: the
/// axial line and the two circular transverse lines.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ZeemanModes {
    pub pi: f64,
    pub plus: f64,
    pub minus: f64,
}

/// Exact normal-mode frequencies of an isotropic oscillator of frequency
/// `omega0` in a field `B` along the axis.
///
/// Motion along the field is untouched (`pi = omega0`); the circular
/// transverse modes solve `omega^2 - 2 omega_L omega - omega0^2 = 0`, giving
/// `sqrt(omega0^2 + omega_L^2) +/- |omega_L|`. At `B = 0` the triplet
/// collapses to a single line.
pub fn classical_zeeman_modes(
    omega0: f64,
    b_field: f64,
    alpha: f64,
) -> Result<ZeemanModes, FieldError> {
    if !(omega0.is_finite() && omega0 > 0.0) {
        return Err(FieldError::BadOscillator { omega0 });
    }
    if !b_field.is_finite() {
        return Err(FieldError::BadField { b_field });
    }
    let w_l = larmor_frequency(b_field, alpha).abs();
    let shifted = (omega0 * omega0 + w_l * w_l).sqrt();
    Ok(ZeemanModes {
        pi: omega0,
        plus: shifted + w_l,
        minus: shifted - w_l,
    })
}

/// Which magnetic moment precesses: the orbital one or the spin, whose
/// gyromagnetic ratio is exactly twice as large.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrecessionKind {
    Orbital,
    Spin,
}

/// Precession rate in the field: `omega_L = e B / (2 mu c)` for orbital
/// moments and twice that for spin. Negative for `B > 0` because the
/// electron charge is negative.
pub fn larmor_precession_rate(b_field: f64, alpha: f64, kind: PrecessionKind) -> f64 {
    let base = larmor_frequency(b_field, alpha);
    match kind {
        PrecessionKind::Orbital => base,
        PrecessionKind::Spin => 2.0 * base,
    }
}

/// Uniformly sampled oscillator orbit, ready for a discrete spectrum.
#[derive(Debug, Clone)]
pub struct OscillatorTrack {
    pub dt: f64,
    pub positions: Vec<[f64; 3]>,
}

/// Integrate the classical equations of motion for the oscillator in the
/// field and record `samples` positions at spacing `t_end / samples`.
pub fn oscillator_trajectory(
    omega0: f64,
    b_field: f64,
    alpha: f64,
    x0: [f64; 3],
    v0: [f64; 3],
    t_end: f64,
    samples: usize,
) -> Result<OscillatorTrack, FieldError> {
    if !(omega0.is_finite() && omega0 > 0.0) {
        return Err(FieldError::BadOscillator { omega0 });
    }
    if !b_field.is_finite() {
        return Err(FieldError::BadField { b_field });
    }
    if !(t_end.is_finite() && t_end > 0.0) || samples < 16 {
        return Err(FieldError::BadTrack {
            reason: format!("need positive span and at least 16 samples, got {t_end} and {samples}"),
        });
    }
    let coupling = E_CHARGE * b_field / speed_of_light(alpha);
    let rhs = move |_t: f64, y: &[f64; 6]| -> [f64; 6] {
        let w2 = omega0 * omega0;
        [
            y[3],
            y[4],
            y[5],
            -w2 * y[0] + coupling * y[4],
            -w2 * y[1] - coupling * y[3],
            -w2 * y[2],
        ]
    };
    let dt = t_end / samples as f64;
    let y0 = [x0[0], x0[1], x0[2], v0[0], v0[1], v0[2]];
    let sol = rk4_fixed(rhs, 0.0, y0, dt, samples);
    let positions = sol.y[..samples].iter().map(|y| [y[0], y[1], y[2]]).collect();
    Ok(OscillatorTrack { dt, positions })
}

/// Locate the spectral lines of a recorded orbit.
///
/// The axial line is the strongest bin of the `z` spectrum; the circular
/// pair comes from the strongest positive- and negative-frequency bins of
/// `x + iy`. Resolution is one DFT bin, `2 pi / (samples dt)`.
pub fn oscillator_spectrum_peaks(track: &OscillatorTrack) -> Result<ZeemanModes, FieldError> {
    let n = track.positions.len();
    if n < 16 {
        return Err(FieldError::BadTrack {
            reason: format!("need at least 16 samples for a spectrum, got {n}"),
        });
    }
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(n);
    let spectrum = |data: &mut Vec<Complex64>| {
        fft.process(data);
    };
    let bin = 2.0 * std::f64::consts::PI / (n as f64 * track.dt);
    let mut axial: Vec<Complex64> = track
        .positions
        .iter()
        .map(|p| Complex64::new(p[2], 0.0))
        .collect();
    spectrum(&mut axial);
    let mut circular: Vec<Complex64> = track
        .positions
        .iter()
        .map(|p| Complex64::new(p[0], p[1]))
        .collect();
    spectrum(&mut circular);
    let strongest = |coefs: &[Complex64], range: std::ops::Range<usize>| -> usize {
        range
            .clone()
            .max_by(|a, b| coefs[*a].norm_sqr().total_cmp(&coefs[*b].norm_sqr()))
            .expect("nonempty search range")
    };
    let pi_bin = strongest(&axial, 1..n / 2);
    // a sampled e^{-i w t} line lands on the negative side of the DFT and
    // vice versa; either circular sense may carry either root, so take the
    // larger measured frequency as the raised line
    let pos_bin = strongest(&circular, 1..n / 2);
    let neg_bin = strongest(&circular, n / 2..n);
    let f_pos = pos_bin as f64 * bin;
    let f_neg = (n - neg_bin) as f64 * bin;
    Ok(ZeemanModes {
        pi: pi_bin as f64 * bin,
        plus: f_pos.max(f_neg),
        minus: f_pos.min(f_neg),
    })
}
