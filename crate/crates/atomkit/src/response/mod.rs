//! Material response: classical Drude permittivity, the quantum
//! susceptibility built from hydrogen dipole transitions, Langevin
//! diamagnetism, and the paramagnetic moment of a stationary state.

use num_complex::Complex64;
use thiserror::Error;

use crate::oracle::dipole::{dipole_matrix_element, Axis};
use crate::spectra::schrodinger_level;
use crate::units::E_CHARGE;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResponseError {
    #[error("oscillator weight must be nonnegative, got {weight}")]
    BadWeight { weight: f64 },
    #[error("damping must be nonnegative, got {damping}")]
    BadDamping { damping: f64 },
    #[error("eigenfrequency must be nonnegative and finite, got {omega}")]
    BadEigenfrequency { omega: f64 },
    #[error("number density must be nonnegative and finite, got {density}")]
    BadDensity { density: f64 },
    #[error("evaluation frequency {omega} sits exactly on a resonance")]
    PoleHit { omega: f64 },
    #[error("transition entry invalid: {reason}")]
    BadTransition { reason: String },
    #[error("mean square radius must be nonnegative, got {mean_r2}")]
    NegativeSpread { mean_r2: f64 },
    #[error("need at least the first excited shell, got n_max = {n_max}")]
    TooFewLevels { n_max: u32 },
    #[error("transition table construction failed: {detail}")]
    TransitionBuild { detail: String },
}

impl ResponseError {
    pub fn name(&self) -> &'static str {
        match self {
            ResponseError::BadWeight { .. } => "bad-weight",
            ResponseError::BadDamping { .. } => "bad-damping",
            ResponseError::BadEigenfrequency { .. } => "bad-eigenfrequency",
            ResponseError::BadDensity { .. } => "bad-density",
            ResponseError::PoleHit { .. } => "pole-hit",
            ResponseError::BadTransition { .. } => "bad-transition",
            ResponseError::NegativeSpread { .. } => "negative-spread",
            ResponseError::TooFewLevels { .. } => "too-few-levels",
            ResponseError::TransitionBuild { .. } => "transition-build",
        }
    }
}

/// One damped oscillator species: eigenfrequency, the fraction of electrons
/// oscillating at it, and its damping rate.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Oscillator {
    pub omega: f64,
    pub weight: f64,
    pub damping: f64,
}

/// A material modeled as independent damped oscillators at number density
/// `density` atoms per unit volume.
#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorSet {
    oscillators: Vec<Oscillator>,
    density: f64,
}

impl OscillatorSet {
    pub fn new(oscillators: Vec<Oscillator>, density: f64) -> Result<Self, ResponseError> {
        if !(density.is_finite() && density >= 0.0) {
            return Err(ResponseError::BadDensity { density });
        }
        for osc in &oscillators {
            if !(osc.weight.is_finite() && osc.weight >= 0.0) {
                return Err(ResponseError::BadWeight { weight: osc.weight });
            }
            if !(osc.damping.is_finite() && osc.damping >= 0.0) {
                return Err(ResponseError::BadDamping { damping: osc.damping });
            }
            if !(osc.omega.is_finite() && osc.omega >= 0.0) {
                return Err(ResponseError::BadEigenfrequency { omega: osc.omega });
            }
        }
        Ok(OscillatorSet {
            oscillators,
            density,
        })
    }

    pub fn oscillators(&self) -> &[Oscillator] {
        &self.oscillators
    }

    pub fn density(&self) -> f64 {
        self.density
    }
}

/// Drude permittivity
/// `epsilon = 1 + 4 pi n sum_k f_k / (omega_k^2 - omega^2 - i omega gamma_k)`
/// in atomic units (`e = m = 1`). The imaginary part is nonnegative for
/// `omega >= 0`, and each undamped resonance is a genuine pole.
pub fn drude_epsilon(omega: f64, set: &OscillatorSet) -> Result<Complex64, ResponseError> {
    let mut eps = Complex64::new(1.0, 0.0);
    let prefactor = 4.0 * std::f64::consts::PI * set.density;
    for osc in &set.oscillators {
        let denom = Complex64::new(
            osc.omega * osc.omega - omega * omega,
            -omega * osc.damping,
        );
        if denom.norm_sqr() == 0.0 {
            return Err(ResponseError::PoleHit { omega });
        }
        eps += prefactor * osc.weight / denom;
    }
    Ok(eps)
}

/// Which sign of the transition frequency enters the susceptibility sum:
/// excitation energies taken positive (static susceptibility comes out
/// positive, matching the damped-oscillator analog) or the opposite order,
/// which flips the overall sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FrequencyConvention {
    #[default]
    ExcitedMinusGround,
    GroundMinusExcited,
}

/// One dipole-allowed transition out of the ground state: its frequency
/// magnitude and the squared matrix element of one Cartesian coordinate.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Transition {
    pub frequency: f64,
    pub dipole_sq: f64,
}

/// Real susceptibility from a discrete transition table,
/// `chi_e = 4 n sum_l w_l |x_l|^2 / (w_l^2 - omega^2)` with `w_l` signed by
/// the chosen convention. Even in `omega`, poles exactly at `|w_l|`, and
/// `epsilon = 1 + 4 pi chi_e`.
pub fn kk_susceptibility(
    omega: f64,
    transitions: &[Transition],
    density: f64,
    convention: FrequencyConvention,
) -> Result<f64, ResponseError> {
    if !(density.is_finite() && density >= 0.0) {
        return Err(ResponseError::BadDensity { density });
    }
    let mut sum = 0.0;
    for t in transitions {
        if !(t.frequency.is_finite() && t.frequency != 0.0) {
            return Err(ResponseError::BadTransition {
                reason: format!("transition frequency must be finite and nonzero, got {}", t.frequency),
            });
        }
        if !(t.dipole_sq.is_finite() && t.dipole_sq >= 0.0) {
            return Err(ResponseError::BadTransition {
                reason: format!("squared dipole element must be nonnegative, got {}", t.dipole_sq),
            });
        }
        let w = match convention {
            FrequencyConvention::ExcitedMinusGround => t.frequency.abs(),
            FrequencyConvention::GroundMinusExcited => -t.frequency.abs(),
        };
        let denom = w * w - omega * omega;
        if denom == 0.0 {
            return Err(ResponseError::PoleHit { omega });
        }
        sum += w * t.dipole_sq / denom;
    }
    Ok(4.0 * density * sum)
}

/// Discrete dipole transitions out of the hydrogen ground state, with a
/// falloff-based estimate of the oscillator strength left out beyond
/// `n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct HydrogenTransitions {
    pub transitions: Vec<Transition>,
    /// Estimated neglected oscillator strength, from the n^-3 falloff of
    /// the series terms.
    pub tail_estimate: f64,
}

/// Build the `1s -> np` transition table from the level formula and
/// brute-force dipole quadrature, up to principal quantum number `n_max`.
pub fn hydrogen_transitions(n_max: u32) -> Result<HydrogenTransitions, ResponseError> {
    if n_max < 2 {
        return Err(ResponseError::TooFewLevels { n_max });
    }
    let build = |e: &dyn std::fmt::Display| ResponseError::TransitionBuild {
        detail: e.to_string(),
    };
    let ground = schrodinger_level(1).map_err(|e| build(&e))?;
    let mut transitions = Vec::with_capacity((n_max - 1) as usize);
    for n in 2..=n_max {
        let frequency = schrodinger_level(n).map_err(|e| build(&e))? - ground;
        let element =
            dipole_matrix_element((1, 0, 0), (n, 1, 0), Axis::Z).map_err(|e| build(&e))?;
        transitions.push(Transition {
            frequency,
            dipole_sq: element * element,
        });
    }
    let last = transitions.last().expect("n_max >= 2 yields at least one row");
    let f_last = 2.0 * last.frequency * last.dipole_sq;
    let tail_estimate = f_last * n_max as f64 / 2.0;
    Ok(HydrogenTransitions {
        transitions,
        tail_estimate,
    })
}

/// Diamagnetic susceptibility per atom and in bulk.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LangevinChi {
    pub per_atom: f64,
    pub bulk: f64,
}

/// Langevin diamagnetic susceptibility `-e^2 <r^2> / (6 mu c^2)`, which is
/// `-alpha^2 <r^2> / 6` per atom in atomic units; never positive.
pub fn langevin_chi(mean_r2: f64, density: f64, alpha: f64) -> Result<LangevinChi, ResponseError> {
    if !(mean_r2.is_finite() && mean_r2 >= 0.0) {
        return Err(ResponseError::NegativeSpread { mean_r2 });
    }
    if !(density.is_finite() && density >= 0.0) {
        return Err(ResponseError::BadDensity { density });
    }
    let per_atom = -alpha * alpha * mean_r2 / 6.0;
    Ok(LangevinChi {
        per_atom,
        bulk: density * per_atom,
    })
}

/// Magnetic moment of a state with magnetic quantum number `m` along the
/// field axis: `(e / 2 mu c) m hbar = -alpha m / 2`. Opposite `m` values
/// cancel pairwise, so an unpolarized ensemble carries no net moment.
pub fn paramagnetic_moment(m: i32, alpha: f64) -> f64 {
    E_CHARGE * alpha * f64::from(m) / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::ALPHA;

    fn glass_like() -> OscillatorSet {
        OscillatorSet::new(
            vec![
                Oscillator {
                    omega: 2.0,
                    weight: 0.8,
                    damping: 0.05,
                },
                Oscillator {
                    omega: 5.0,
                    weight: 0.2,
                    damping: 0.02,
                },
            ],
            0.01,
        )
        .unwrap()
    }

    #[test]
    fn drude_limits_and_passivity() {
        let set = glass_like();
        let static_eps = drude_epsilon(0.0, &set).unwrap();
        assert!(static_eps.im == 0.0 && static_eps.re > 1.0);
        let far = drude_epsilon(1e6, &set).unwrap();
        assert!((far - 1.0).norm() < 1e-9);
        for i in 0..200 {
            let omega = 0.05 * i as f64;
            let eps = drude_epsilon(omega, &set).unwrap();
            assert!(eps.im >= 0.0, "passivity broken at {omega}");
        }
    }

    #[test]
    fn resonant_term_is_purely_damped() {
        let set = OscillatorSet::new(
            vec![Oscillator {
                omega: 2.0,
                weight: 0.8,
                damping: 0.5,
            }],
            0.01,
        )
        .unwrap();
        let eps = drude_epsilon(2.0, &set).unwrap();
        let expected_im = 4.0 * std::f64::consts::PI * 0.01 * 0.8 / (2.0 * 0.5);
        assert!((eps.re - 1.0).abs() < 1e-15);
        assert!((eps.im - expected_im).abs() < 1e-15 * expected_im);
    }

    #[test]
    fn undamped_resonance_is_a_pole_and_dispersion_turns_anomalous() {
        let undamped = OscillatorSet::new(
            vec![Oscillator {
                omega: 2.0,
                weight: 1.0,
                damping: 0.0,
            }],
            0.01,
        )
        .unwrap();
        assert_eq!(drude_epsilon(2.0, &undamped).unwrap_err().name(), "pole-hit");
        let set = glass_like();
        let gamma = 0.05;
        let re = |w: f64| drude_epsilon(w, &set).unwrap().re;
        // normal dispersion well below the line, anomalous across it
        assert!(re(1.9) > re(1.0));
        assert!(re(2.0 - gamma / 2.0) > re(2.0 + gamma / 2.0));
    }

    #[test]
    fn oscillator_sets_validate_their_entries() {
        let bad_weight = OscillatorSet::new(
            vec![Oscillator {
                omega: 1.0,
                weight: -0.1,
                damping: 0.0,
            }],
            1.0,
        );
        assert_eq!(bad_weight.unwrap_err().name(), "bad-weight");
        let bad_damping = OscillatorSet::new(
            vec![Oscillator {
                omega: 1.0,
                weight: 0.1,
                damping: -1.0,
            }],
            1.0,
        );
        assert_eq!(bad_damping.unwrap_err().name(), "bad-damping");
        let bad_density = OscillatorSet::new(vec![], -1.0);
        assert_eq!(bad_density.unwrap_err().name(), "bad-density");
    }

    #[test]
    fn hydrogen_table_starts_at_lyman_alpha() {
        let table = hydrogen_transitions(6).unwrap();
        assert_eq!(table.transitions.len(), 5);
        let first = table.transitions[0];
        assert_eq!(first.frequency, 0.375);
        let lyman = 128.0 * 2.0_f64.sqrt() / 243.0;
        assert!((first.dipole_sq - lyman * lyman).abs() < 1e-12 * lyman * lyman);
        assert!(table.tail_estimate > 0.0);
        // falloff: later rows carry much less strength
        let f2 = 2.0 * first.frequency * first.dipole_sq;
        let last = table.transitions.last().unwrap();
        let f6 = 2.0 * last.frequency * last.dipole_sq;
        assert!(f6 < 0.1 * f2);
        assert_eq!(hydrogen_transitions(1).unwrap_err().name(), "too-few-levels");
    }

    #[test]
    fn susceptibility_is_even_rising_and_has_exact_poles() {
        let table = hydrogen_transitions(8).unwrap();
        let chi = |w: f64| {
            kk_susceptibility(w, &table.transitions, 1.0, FrequencyConvention::default()).unwrap()
        };
        assert_eq!(chi(0.2), chi(-0.2));
        let mut prev = chi(0.0);
        assert!(prev > 0.0, "static susceptibility must be positive");
        for i in 1..=7 {
            let next = chi(0.05 * i as f64);
            assert!(next > prev, "not increasing before the first pole");
            prev = next;
        }
        assert_eq!(
            kk_susceptibility(0.375, &table.transitions, 1.0, FrequencyConvention::default())
                .unwrap_err()
                .name(),
            "pole-hit"
        );
    }

    #[test]
    fn printed_frequency_order_flips_the_static_sign() {
        let table = hydrogen_transitions(5).unwrap();
        let adopted =
            kk_susceptibility(0.0, &table.transitions, 1.0, FrequencyConvention::ExcitedMinusGround)
                .unwrap();
        let flipped =
            kk_susceptibility(0.0, &table.transitions, 1.0, FrequencyConvention::GroundMinusExcited)
                .unwrap();
        assert!(adopted > 0.0);
        assert!((flipped + adopted).abs() < 1e-15 * adopted);
    }

    #[test]
    fn langevin_matches_the_ground_state_value() {
        let chi = langevin_chi(3.0, 2.0, ALPHA).unwrap();
        assert!((chi.per_atom + ALPHA * ALPHA / 2.0).abs() < 1e-18);
        assert_eq!(chi.bulk, 2.0 * chi.per_atom);
        assert_eq!(langevin_chi(0.0, 1.0, ALPHA).unwrap().per_atom, 0.0);
        assert!(langevin_chi(5.0, 1.0, ALPHA).unwrap().per_atom < 0.0);
        assert_eq!(langevin_chi(-1.0, 1.0, ALPHA).unwrap_err().name(), "negative-spread");
    }

    #[test]
    fn paramagnetic_moments_cancel_in_pairs() {
        assert_eq!(paramagnetic_moment(0, ALPHA), 0.0);
        assert!((paramagnetic_moment(1, ALPHA) + ALPHA / 2.0).abs() < 1e-18);
        for m in 1..=4 {
            let sum = paramagnetic_moment(m, ALPHA) + paramagnetic_moment(-m, ALPHA);
            assert_eq!(sum, 0.0);
        }
    }
}
