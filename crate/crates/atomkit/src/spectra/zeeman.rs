use serde::Serialize;

use super::{schrodinger_level, SpectraError};
use crate::angular::{lande_g, HalfInt};
use crate::units::larmor_frequency;

/// How the magnetic moment couples: orbit only, or orbit plus a frozen
/// spin projection with its doubled g factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeemanMode {
    Orbital,
    SpinUp,
    SpinDown,
}

/// Energy of the (n, m) state in a uniform field B along z, to first order:
/// the unperturbed level shifted by the Larmor frequency per magnetic
/// quantum, plus twice that per unit spin projection in the Pauli modes.
/// The electron charge is negative, so omega_L < 0 for B > 0.
pub fn zeeman_levels(
    n: u32,
    m: i32,
    b_field: f64,
    mode: ZeemanMode,
    alpha: f64,
) -> Result<f64, SpectraError> {
    if n == 0 {
        return Err(SpectraError::ZeroPrincipal);
    }
    if m.unsigned_abs() >= n {
        return Err(SpectraError::MagneticOutOfRange { l: n - 1, m_abs: m.unsigned_abs() });
    }
    let omega_l = larmor_frequency(b_field, alpha);
    let spin = match mode {
        ZeemanMode::Orbital => 0.0,
        ZeemanMode::SpinUp => 1.0,
        ZeemanMode::SpinDown => -1.0,
    };
    Ok(schrodinger_level(n)? + (f64::from(m) + spin) * omega_l)
}

/// A fine-structure term: orbital number and total angular momentum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub l: u32,
    pub j: HalfInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Polarization {
    /// delta M = 0
    Pi,
    /// delta M = +1 (upper minus lower)
    SigmaPlus,
    /// delta M = -1
    SigmaMinus,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeemanLine {
    pub omega: f64,
    pub m_upper: HalfInt,
    pub m_lower: HalfInt,
    pub polarization: Polarization,
}

/// Anomalous Zeeman pattern of the transition between two terms in a weak
/// field: omega = omega0 - omega_L (g M - g' M') over the magnetic pairs
/// with |delta J| = 1 and delta M in {-1, 0, +1}. Lande factors carry the
/// whole anomaly; for g = g' the pattern would collapse to a triplet.
pub fn anomalous_zeeman_lines(
    upper: Term,
    lower: Term,
    omega0: f64,
    b_field: f64,
    alpha: f64,
) -> Result<Vec<ZeemanLine>, SpectraError> {
    let delta_doubled = upper.j.doubled() - lower.j.doubled();
    if delta_doubled.abs() != 2 {
        return Err(SpectraError::ForbiddenTermPair { delta_doubled });
    }
    let g_upper = lande_g(upper.l, upper.j)?;
    let g_lower = lande_g(lower.l, lower.j)?;
    let omega_l = larmor_frequency(b_field, alpha);

    let mut lines = Vec::new();
    let mut dm_u = -upper.j.doubled();
    while dm_u <= upper.j.doubled() {
        let m_u = HalfInt::from_doubled(dm_u);
        for ddm in [-2i32, 0, 2] {
            let dm_l = dm_u - ddm;
            if dm_l.abs() > lower.j.doubled() {
                continue;
            }
            let m_l = HalfInt::from_doubled(dm_l);
            let polarization = match ddm {
                0 => Polarization::Pi,
                2 => Polarization::SigmaPlus,
                _ => Polarization::SigmaMinus,
            };
            lines.push(ZeemanLine {
                omega: omega0 - omega_l * (g_upper * m_u.value() - g_lower * m_l.value()),
                m_upper: m_u,
                m_lower: m_l,
                polarization,
            });
        }
        dm_u += 2;
    }
    lines.sort_by(|a, b| a.omega.total_cmp(&b.omega));
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::ALPHA;

    #[test]
    fn orbital_shift_sign_and_size() {
        let b = 1e-3;
        let omega_l = larmor_frequency(b, ALPHA);
        assert!(omega_l < 0.0);
        let base = zeeman_levels(2, 0, b, ZeemanMode::Orbital, ALPHA).unwrap();
        assert_eq!(base, -0.125);
        let up = zeeman_levels(2, 1, b, ZeemanMode::Orbital, ALPHA).unwrap();
        assert!((up - base - omega_l).abs() < 1e-15);
    }

    #[test]
    fn pauli_modes_shift_by_twice_spin() {
        let b = 2e-3;
        let omega_l = larmor_frequency(b, ALPHA);
        let orb = zeeman_levels(1, 0, b, ZeemanMode::Orbital, ALPHA).unwrap();
        let plus = zeeman_levels(1, 0, b, ZeemanMode::SpinUp, ALPHA).unwrap();
        let minus = zeeman_levels(1, 0, b, ZeemanMode::SpinDown, ALPHA).unwrap();
        assert!((plus - orb - omega_l).abs() < 1e-15);
        assert!((minus - orb + omega_l).abs() < 1e-15);
    }

    #[test]
    fn doublet_pattern_p32_to_s12() {
        // 2P_3/2 -> 2S_1/2: six components at omega0 - omega_L * s with
        // s in {-5/3, -1, -1/3, 1/3, 1, 5/3}.
        let upper = Term { l: 1, j: HalfInt::from_doubled(3) };
        let lower = Term { l: 0, j: HalfInt::HALF };
        let omega0 = 0.1;
        let b = 1e-4;
        let omega_l = larmor_frequency(b, ALPHA);
        let lines = anomalous_zeeman_lines(upper, lower, omega0, b, ALPHA).unwrap();
        assert_eq!(lines.len(), 6);
        let mut shifts: Vec<f64> =
            lines.iter().map(|line| (line.omega - omega0) / (-omega_l)).collect();
        shifts.sort_by(f64::total_cmp);
        let expect = [-5.0 / 3.0, -1.0, -1.0 / 3.0, 1.0 / 3.0, 1.0, 5.0 / 3.0];
        for (got, want) in shifts.iter().zip(expect) {
            // omega0 dominates each omega, so recovering the shift
            // divides out ~1e-17 rounding by |omega_L| ~ 4e-7.
            assert!((got - want).abs() < 1e-9, "{shifts:?}");
        }
    }

    #[test]
    fn same_j_terms_rejected() {
        let term = Term { l: 1, j: HalfInt::HALF };
        let err = anomalous_zeeman_lines(term, Term { l: 0, j: HalfInt::HALF }, 0.1, 1e-4, ALPHA)
            .unwrap_err();
        assert_eq!(err.name(), "forbidden-term-pair");
    }

    #[test]
    fn magnetic_range_enforced() {
        assert_eq!(
            zeeman_levels(2, 2, 1e-3, ZeemanMode::Orbital, ALPHA).unwrap_err().name(),
            "magnetic-out-of-range"
        );
    }
}
