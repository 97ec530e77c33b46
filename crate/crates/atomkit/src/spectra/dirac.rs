use num_complex::Complex64;

use super::SpectraError;

/// E / (mu c^2) for the Dirac-Coulomb bound level with radial number n_r and
/// orbital number l of the upper component:
/// 1 / sqrt(1 + alpha^2 / (n_r + delta + 1)^2), delta + 1 = sqrt((l+1)^2 - alpha^2).
pub fn dirac_level(n_r: u32, l: u32, alpha: f64) -> Result<f64, SpectraError> {
    let delta1 = delta_plus_one(l, alpha)?;
    let denom = f64::from(n_r) + delta1;
    Ok(1.0 / (1.0 + alpha * alpha / (denom * denom)).sqrt())
}

/// First binomial approximation of `dirac_level`: 1 - alpha^2 / (2 (n_r + delta + 1)^2).
/// Agrees with the exact ratio to O(alpha^4).
pub fn dirac_level_binomial(n_r: u32, l: u32, alpha: f64) -> Result<f64, SpectraError> {
    let delta1 = delta_plus_one(l, alpha)?;
    let denom = f64::from(n_r) + delta1;
    Ok(1.0 - alpha * alpha / (2.0 * denom * denom))
}

/// Binding energy E - mu c^2 in hartrees, computed without cancellation:
/// approaches the Schrödinger level -1/(2 n^2) as alpha -> 0.
pub fn dirac_binding_energy(n_r: u32, l: u32, alpha: f64) -> Result<f64, SpectraError> {
    let delta1 = delta_plus_one(l, alpha)?;
    let denom = f64::from(n_r) + delta1;
    let x = alpha * alpha / (denom * denom);
    let root = (1.0 + x).sqrt();
    // (1/sqrt(1+x) - 1) / alpha^2 in a cancellation-free arrangement
    Ok(-x / (root * (1.0 + root)) / (alpha * alpha))
}

fn delta_plus_one(l: u32, alpha: f64) -> Result<f64, SpectraError> {
    let lp1 = f64::from(l) + 1.0;
    let radicand = lp1 * lp1 - alpha * alpha;
    if radicand <= 0.0 {
        return Err(SpectraError::Supercritical { l, alpha });
    }
    Ok(radicand.sqrt())
}

/// The two-component radial power series of the Dirac-Coulomb bound state:
/// R(r) ~ r^delta e^{-kappa r} sum_k R_k r^k with R_k in C^2. The recurrence
/// A_k R_k = M R_{k-1} holds with
///   A_k = [[-i alpha, (k+delta+1) + (l+1)], [(k+delta+1) - (l+1), -i alpha]],
///   M   = [[i (E - mu c^2)/(c hbar), kappa], [kappa, i (E + mu c^2)/(c hbar)]],
/// R_0 spans ker A_0, and M R_{n_r} = 0 terminates the series at the bound
/// energy. All quantities in hartree atomic units with c = 1/alpha.
#[derive(Debug, Clone)]
pub struct DiracRadialSeries {
    pub delta: f64,
    /// Exponential decay rate sqrt(mu^2 c^4 - E^2) / (c hbar).
    pub kappa: f64,
    /// E / (mu c^2).
    pub energy_ratio: f64,
    pub coefficients: Vec<[Complex64; 2]>,
    /// |A_0 R_0| / (|A_0| |R_0|); zero when R_0 spans the kernel.
    pub kernel_residual: f64,
    /// |M R_{n_r}| / (|M| |R_{n_r}|); zero exactly at the bound energy.
    pub termination_residual: f64,
}

pub fn dirac_radial_series(
    n_r: u32,
    l: u32,
    alpha: f64,
) -> Result<DiracRadialSeries, SpectraError> {
    let delta1 = delta_plus_one(l, alpha)?;
    let c = 1.0 / alpha;
    let lp1 = f64::from(l) + 1.0;

    // With x = alpha^2 / (n_r + delta + 1)^2: ratio = (1+x)^{-1/2},
    // kappa = c sqrt(x/(1+x)), ratio - 1 = -x / (sqrt(1+x)(1 + sqrt(1+x))).
    // These forms keep full relative precision; 1 - ratio^2 would not.
    let big_n = f64::from(n_r) + delta1;
    let x = alpha * alpha / (big_n * big_n);
    let root = (1.0 + x).sqrt();
    let ratio = 1.0 / root;
    let kappa = c * (x / (1.0 + x)).sqrt();
    let ratio_m1 = -x / (root * (1.0 + root));

    // Rows of M: the first-order system coupling the two radial components.
    let m = Mat2 {
        a: Complex64::new(0.0, ratio_m1 * c),
        b: Complex64::new(kappa, 0.0),
        c: Complex64::new(kappa, 0.0),
        d: Complex64::new(0.0, (ratio + 1.0) * c),
    };

    let r0 = [Complex64::new(delta1 + lp1, 0.0), Complex64::new(0.0, alpha)];
    let a0 = step_matrix(0.0, delta1, lp1, alpha);
    let kernel_residual = norm2(&a0.apply(&r0)) / (a0.max_abs() * norm2(&r0));

    let mut coefficients = vec![r0];
    for k in 1..=n_r {
        let prev = coefficients[(k - 1) as usize];
        let rhs = m.apply(&prev);
        let ak = step_matrix(f64::from(k), delta1, lp1, alpha);
        coefficients.push(ak.solve(&rhs));
    }

    let last = coefficients[n_r as usize];
    let termination_residual = norm2(&m.apply(&last)) / (m.max_abs() * norm2(&last));
    if termination_residual > 1e-10 {
        return Err(SpectraError::NonTerminating { n_r, residual: termination_residual });
    }

    Ok(DiracRadialSeries {
        delta: delta1 - 1.0,
        kappa,
        energy_ratio: ratio,
        coefficients,
        kernel_residual,
        termination_residual,
    })
}

fn step_matrix(k: f64, delta1: f64, lp1: f64, alpha: f64) -> Mat2 {
    Mat2 {
        a: Complex64::new(0.0, -alpha),
        b: Complex64::new(k + delta1 + lp1, 0.0),
        c: Complex64::new(k + delta1 - lp1, 0.0),
        d: Complex64::new(0.0, -alpha),
    }
}

#[derive(Debug, Clone, Copy)]
struct Mat2 {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl Mat2 {
    fn apply(&self, v: &[Complex64; 2]) -> [Complex64; 2] {
        [self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1]]
    }

    fn solve(&self, rhs: &[Complex64; 2]) -> [Complex64; 2] {
        let det = self.a * self.d - self.b * self.c;
        [
            (self.d * rhs[0] - self.b * rhs[1]) / det,
            (self.a * rhs[1] - self.c * rhs[0]) / det,
        ]
    }

    fn max_abs(&self) -> f64 {
        self.a.norm().max(self.b.norm()).max(self.c.norm()).max(self.d.norm())
    }
}

fn norm2(v: &[Complex64; 2]) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::ALPHA;

    #[test]
    fn ground_state_ratio_is_sqrt_one_minus_alpha_sq() {
        let ratio = dirac_level(0, 0, ALPHA).unwrap();
        assert!((ratio - (1.0 - ALPHA * ALPHA).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn binding_energy_recovers_schrodinger_with_fine_structure() {
        // E_bind = -1/2 - alpha^2/8 + O(alpha^4) for the ground state.
        let e = dirac_binding_energy(0, 0, ALPHA).unwrap();
        assert!((e + 0.5 + ALPHA * ALPHA / 8.0).abs() < 1e-8, "{e}");
        // 2s and 2p1/2-like (n_r=1,l=0) vs (n_r=0,l=1) split:
        let e2s = dirac_binding_energy(1, 0, ALPHA).unwrap();
        assert!((e2s + 0.125).abs() < 1e-4);
    }

    #[test]
    fn binomial_agrees_to_alpha_fourth() {
        for (n_r, l) in [(0u32, 0u32), (1, 0), (0, 1), (2, 1), (1, 2)] {
            let exact = dirac_level(n_r, l, ALPHA).unwrap();
            let approx = dirac_level_binomial(n_r, l, ALPHA).unwrap();
            assert!((exact - approx).abs() <= ALPHA.powi(4), "n_r={n_r} l={l}");
        }
    }

    #[test]
    fn series_terminates_with_tiny_residuals() {
        for n_r in 0..=3u32 {
            for l in 0..=2u32 {
                let s = dirac_radial_series(n_r, l, ALPHA).unwrap();
                assert!(s.kernel_residual <= 1e-12, "n_r={n_r} l={l}: {}", s.kernel_residual);
                assert!(
                    s.termination_residual <= 1e-12,
                    "n_r={n_r} l={l}: {}",
                    s.termination_residual
                );
                assert_eq!(s.coefficients.len(), n_r as usize + 1);
            }
        }
    }

    #[test]
    fn decay_rate_ties_energy_to_coupling() {
        // alpha E = c hbar kappa (n_r + delta + 1), a consequence of the
        // termination condition.
        for (n_r, l) in [(0u32, 0u32), (2, 0), (1, 1)] {
            let s = dirac_radial_series(n_r, l, ALPHA).unwrap();
            let c = 1.0 / ALPHA;
            let lhs = ALPHA * s.energy_ratio * c * c;
            let rhs = c * s.kappa * (f64::from(n_r) + s.delta + 1.0);
            assert!(((lhs - rhs) / lhs).abs() < 1e-12);
        }
    }

    #[test]
    fn supercritical_coupling_rejected() {
        assert_eq!(dirac_level(0, 0, 1.5).unwrap_err().name(), "supercritical-coupling");
    }
}
