use num_complex::Complex64;

use super::lattice::Lattice;
use super::FieldError;

/// Free Maxwell data on a periodic lattice, stored spectrally.
///
/// The combination `C = E + iB` evolves mode by mode under the rotation
/// `exp(c t k x)`, so propagation is exact for every resolved wave vector:
/// no step-size error, no grid dispersion. The `k = 0` mode is frozen.
#[derive(Debug, Clone)]
pub struct MaxwellField {
    lattice: Lattice,
    e_hat: [Vec<Complex64>; 3],
    b_hat: [Vec<Complex64>; 3],
}

/// Oscillating current `j(x, t) = j0(x) cos(nu t)` given by its spectral
/// amplitude. The spatial mean of `j0` must vanish; a uniform current has
/// no periodic potential and is rejected.
#[derive(Debug, Clone)]
pub struct CurrentSource {
    pub frequency: f64,
    pub amplitude_hat: [Vec<Complex64>; 3],
}

impl CurrentSource {
    pub fn from_physical(
        lattice: &Lattice,
        j0: [&[f64]; 3],
        frequency: f64,
    ) -> Result<Self, FieldError> {
        let amplitude_hat = analyze_components(lattice, j0)?;
        let source = CurrentSource {
            frequency,
            amplitude_hat,
        };
        source.check_mean(lattice)?;
        Ok(source)
    }

    fn check_mean(&self, lattice: &Lattice) -> Result<(), FieldError> {
        let dc = lattice.mode_index([0, 0, 0]);
        let mean: f64 = self
            .amplitude_hat
            .iter()
            .map(|c| c[dc].norm_sqr())
            .sum::<f64>()
            .sqrt();
        let scale: f64 = self
            .amplitude_hat
            .iter()
            .flat_map(|c| c.iter())
            .fold(0.0f64, |acc, v| acc.max(v.norm()));
        if mean > 1e-12 * scale.max(1e-300) {
            return Err(FieldError::MeanCurrent { magnitude: mean });
        }
        Ok(())
    }
}

fn analyze_components(
    lattice: &Lattice,
    phys: [&[f64]; 3],
) -> Result<[Vec<Complex64>; 3], FieldError> {
    let mut out: [Vec<Complex64>; 3] = Default::default();
    for (slot, comp) in out.iter_mut().zip(phys) {
        let complex: Vec<Complex64> = comp.iter().map(|v| Complex64::new(*v, 0.0)).collect();
        *slot = lattice.analyze(&complex)?;
    }
    Ok(out)
}

type CV3 = [Complex64; 3];

fn cv_add(a: CV3, b: CV3) -> CV3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn cv_scale(s: Complex64, a: CV3) -> CV3 {
    [s * a[0], s * a[1], s * a[2]]
}

fn cv_cross_real_left(k: [f64; 3], a: CV3) -> CV3 {
    [
        k[1] * a[2] - k[2] * a[1],
        k[2] * a[0] - k[0] * a[2],
        k[0] * a[1] - k[1] * a[0],
    ]
}

fn cv_dot_real_left(k: [f64; 3], a: CV3) -> Complex64 {
    k[0] * a[0] + k[1] * a[1] + k[2] * a[2]
}

/// Rotate a complex 3-vector by `theta` about the real unit axis `khat`.
fn rotate(theta: f64, khat: [f64; 3], c: CV3) -> CV3 {
    let (s, co) = theta.sin_cos();
    let cross = cv_cross_real_left(khat, c);
    let dot = cv_dot_real_left(khat, c);
    let mut out = cv_scale(Complex64::new(co, 0.0), c);
    out = cv_add(out, cv_scale(Complex64::new(s, 0.0), cross));
    let axial = dot * (1.0 - co);
    out = cv_add(
        out,
        [khat[0] * axial, khat[1] * axial, khat[2] * axial],
    );
    out
}

/// `int_0^t exp(lambda (t - s)) cos(nu s) ds` for purely imaginary `lambda`.
fn cosine_duhamel(lambda: Complex64, nu: f64, t: f64) -> Complex64 {
    let one_sided = |nu_signed: f64| -> Complex64 {
        let eps = lambda + Complex64::new(0.0, nu_signed);
        let head = (lambda * t).exp();
        if eps.norm() * t < 1e-8 {
            head * t * (1.0 - eps * t / 2.0)
        } else {
            head * (1.0 - (-eps * t).exp()) / eps
        }
    };
    0.5 * (one_sided(nu) + one_sided(-nu))
}

impl MaxwellField {
    /// Build from physical samples and verify the divergence constraints
    /// `div E = 4 pi rho`, `div B = 0` to `tol` before accepting the data.
    pub fn from_physical(
        lattice: &Lattice,
        e0: [&[f64]; 3],
        b0: [&[f64]; 3],
        rho: &[f64],
        tol: f64,
    ) -> Result<Self, FieldError> {
        let e_hat = analyze_components(lattice, e0)?;
        let b_hat = analyze_components(lattice, b0)?;
        let rho_complex: Vec<Complex64> = rho.iter().map(|v| Complex64::new(*v, 0.0)).collect();
        let rho_hat = lattice.analyze(&rho_complex)?;
        Self::from_spectral(lattice, e_hat, b_hat, Some(&rho_hat), tol)
    }

    /// Build from spectral coefficients. The caller warrants that the
    /// coefficients are conjugate-symmetric (real physical fields); the
    /// divergence constraints are still checked here.
    pub fn from_spectral(
        lattice: &Lattice,
        e_hat: [Vec<Complex64>; 3],
        b_hat: [Vec<Complex64>; 3],
        rho_hat: Option<&[Complex64]>,
        tol: f64,
    ) -> Result<Self, FieldError> {
        for comp in e_hat.iter().chain(b_hat.iter()) {
            lattice.check_len(comp.len())?;
        }
        if let Some(r) = rho_hat {
            lattice.check_len(r.len())?;
        }
        let field = MaxwellField {
            lattice: lattice.clone(),
            e_hat,
            b_hat,
        };
        let (div_e, div_b) = field.constraint_residuals(rho_hat);
        if div_e > tol || div_b > tol {
            return Err(FieldError::ConstraintViolated { div_e, div_b, tol });
        }
        Ok(field)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn e_hat(&self, component: usize) -> &[Complex64] {
        &self.e_hat[component]
    }

    pub fn b_hat(&self, component: usize) -> &[Complex64] {
        &self.b_hat[component]
    }

    /// Physical samples of one electric-field component.
    pub fn e_physical(&self, component: usize) -> Vec<f64> {
        let phys = self.lattice.synthesize(&self.e_hat[component]).unwrap();
        phys.into_iter().map(|c| c.re).collect()
    }

    pub fn b_physical(&self, component: usize) -> Vec<f64> {
        let phys = self.lattice.synthesize(&self.b_hat[component]).unwrap();
        phys.into_iter().map(|c| c.re).collect()
    }

    /// Field energy `(1/8 pi) int (E^2 + B^2) dx` evaluated spectrally.
    pub fn energy(&self) -> f64 {
        let sum: f64 = (0..self.lattice.sites())
            .map(|i| {
                self.e_hat.iter().map(|c| c[i].norm_sqr()).sum::<f64>()
                    + self.b_hat.iter().map(|c| c[i].norm_sqr()).sum::<f64>()
            })
            .sum();
        self.lattice.volume() * sum / (8.0 * std::f64::consts::PI)
    }

    /// L2 norms of `div E - 4 pi rho` and `div B`. Omitting `rho_hat`
    /// treats the charge density as zero.
    pub fn constraint_residuals(&self, rho_hat: Option<&[Complex64]>) -> (f64, f64) {
        let four_pi = 4.0 * std::f64::consts::PI;
        let mut div_e_sq = 0.0;
        let mut div_b_sq = 0.0;
        for i in 0..self.lattice.sites() {
            let k = self.lattice.wavevector(i);
            let ik_dot = |f: &[Vec<Complex64>; 3]| {
                Complex64::new(0.0, 1.0) * (k[0] * f[0][i] + k[1] * f[1][i] + k[2] * f[2][i])
            };
            let charge = rho_hat.map_or(Complex64::default(), |r| four_pi * r[i]);
            div_e_sq += (ik_dot(&self.e_hat) - charge).norm_sqr();
            div_b_sq += ik_dot(&self.b_hat).norm_sqr();
        }
        let vol = self.lattice.volume();
        ((vol * div_e_sq).sqrt(), (vol * div_b_sq).sqrt())
    }

    /// Evolve for time `t` at light speed `c_light`, optionally driven by an
    /// oscillating current. Longitudinal and `k = 0` content is left fixed,
    /// which is exactly the free evolution of the Coulomb part.
    pub fn propagate(
        &self,
        t: f64,
        c_light: f64,
        source: Option<&CurrentSource>,
    ) -> Result<MaxwellField, FieldError> {
        if let Some(src) = source {
            for comp in &src.amplitude_hat {
                self.lattice.check_len(comp.len())?;
            }
            src.check_mean(&self.lattice)?;
        }
        let sites = self.lattice.sites();
        let mut c_new: Vec<CV3> = Vec::with_capacity(sites);
        let four_pi = 4.0 * std::f64::consts::PI;
        for i in 0..sites {
            let c0: CV3 = [
                self.e_hat[0][i] + Complex64::new(0.0, 1.0) * self.b_hat[0][i],
                self.e_hat[1][i] + Complex64::new(0.0, 1.0) * self.b_hat[1][i],
                self.e_hat[2][i] + Complex64::new(0.0, 1.0) * self.b_hat[2][i],
            ];
            let k = self.lattice.wavevector(i);
            let k_norm = (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt();
            let mut c_t = if k_norm == 0.0 {
                c0
            } else {
                let khat = [k[0] / k_norm, k[1] / k_norm, k[2] / k_norm];
                rotate(k_norm * c_light * t, khat, c0)
            };
            if let Some(src) = source {
                let j: CV3 = [
                    src.amplitude_hat[0][i],
                    src.amplitude_hat[1][i],
                    src.amplitude_hat[2][i],
                ];
                if j.iter().any(|v| v.norm_sqr() > 0.0) {
                    let kick = if k_norm == 0.0 {
                        // mean-free sources leave nothing here; guarded above
                        cv_scale(-four_pi * cosine_duhamel(Complex64::default(), src.frequency, t), j)
                    } else {
                        let khat = [k[0] / k_norm, k[1] / k_norm, k[2] / k_norm];
                        let dot = cv_dot_real_left(khat, j);
                        let par: CV3 = [khat[0] * dot, khat[1] * dot, khat[2] * dot];
                        let jt: CV3 = [j[0] - par[0], j[1] - par[1], j[2] - par[2]];
                        let cross = cv_cross_real_left(khat, jt);
                        let i_unit = Complex64::new(0.0, 1.0);
                        let j_plus = cv_scale(
                            Complex64::new(0.5, 0.0),
                            cv_add(jt, cv_scale(-i_unit, cross)),
                        );
                        let j_minus = cv_scale(
                            Complex64::new(0.5, 0.0),
                            cv_add(jt, cv_scale(i_unit, cross)),
                        );
                        let omega = k_norm * c_light;
                        let f0 = cosine_duhamel(Complex64::default(), src.frequency, t);
                        let fp = cosine_duhamel(Complex64::new(0.0, omega), src.frequency, t);
                        let fm = cosine_duhamel(Complex64::new(0.0, -omega), src.frequency, t);
                        let mut kick = cv_scale(-four_pi * f0, par);
                        kick = cv_add(kick, cv_scale(-four_pi * fp, j_plus));
                        kick = cv_add(kick, cv_scale(-four_pi * fm, j_minus));
                        kick
                    };
                    c_t = cv_add(c_t, kick);
                }
            }
            c_new.push(c_t);
        }
        Ok(self.split_combination(&c_new))
    }

    /// Midpoint-rule propagation with the current sampled in time. Second
    /// order in `t / steps`; the closed-form path is preferred when the
    /// source is declared harmonic.
    pub fn propagate_sampled<F>(
        &self,
        t: f64,
        c_light: f64,
        steps: usize,
        j_hat_at: F,
    ) -> Result<MaxwellField, FieldError>
    where
        F: Fn(f64) -> [Vec<Complex64>; 3],
    {
        let sites = self.lattice.sites();
        let four_pi = 4.0 * std::f64::consts::PI;
        let dt = t / steps as f64;
        let mut c_now: Vec<CV3> = (0..sites)
            .map(|i| {
                [
                    self.e_hat[0][i] + Complex64::new(0.0, 1.0) * self.b_hat[0][i],
                    self.e_hat[1][i] + Complex64::new(0.0, 1.0) * self.b_hat[1][i],
                    self.e_hat[2][i] + Complex64::new(0.0, 1.0) * self.b_hat[2][i],
                ]
            })
            .collect();
        for m in 0..steps {
            let j_mid = j_hat_at(dt * (m as f64 + 0.5));
            for comp in &j_mid {
                self.lattice.check_len(comp.len())?;
            }
            for i in 0..sites {
                let k = self.lattice.wavevector(i);
                let k_norm = (k[0] * k[0] + k[1] * k[1] + k[2] * k[2]).sqrt();
                let j: CV3 = [j_mid[0][i], j_mid[1][i], j_mid[2][i]];
                c_now[i] = if k_norm == 0.0 {
                    cv_add(c_now[i], cv_scale(Complex64::new(-four_pi * dt, 0.0), j))
                } else {
                    let khat = [k[0] / k_norm, k[1] / k_norm, k[2] / k_norm];
                    let full = rotate(k_norm * c_light * dt, khat, c_now[i]);
                    let half = rotate(k_norm * c_light * dt / 2.0, khat, j);
                    cv_add(full, cv_scale(Complex64::new(-four_pi * dt, 0.0), half))
                };
            }
        }
        Ok(self.split_combination(&c_now))
    }

    /// Split `C = E + iB` back into conjugate-symmetric `E` and `B` parts.
    fn split_combination(&self, c: &[CV3]) -> MaxwellField {
        let sites = self.lattice.sites();
        let mut e_hat: [Vec<Complex64>; 3] = Default::default();
        let mut b_hat: [Vec<Complex64>; 3] = Default::default();
        for comp in 0..3 {
            e_hat[comp] = Vec::with_capacity(sites);
            b_hat[comp] = Vec::with_capacity(sites);
        }
        let half = Complex64::new(0.5, 0.0);
        let half_over_i = Complex64::new(0.0, -0.5);
        for i in 0..sites {
            let p = self.lattice.partner(i);
            for comp in 0..3 {
                let same = c[i][comp];
                let mirror = c[p][comp].conj();
                e_hat[comp].push(half * (same + mirror));
                b_hat[comp].push(half_over_i * (same - mirror));
            }
        }
        MaxwellField {
            lattice: self.lattice.clone(),
            e_hat,
            b_hat,
        }
    }
}

/// Transverse plane wave `E = A cos(k x3) e1`, `B = A cos(k x3) e2` with
/// `k = 2 pi m / L` along the third axis; it advances along `+x3`.
pub fn plane_wave(lattice: &Lattice, m: i64, amplitude: f64) -> Result<MaxwellField, FieldError> {
    let n = lattice.points_per_axis() as i64;
    if m == 0 || m.abs() > (n - 1) / 2 {
        return Err(FieldError::BadPacket {
            reason: format!("plane-wave mode {m} outside the resolvable band 1..{}", (n - 1) / 2),
        });
    }
    let sites = lattice.sites();
    let mut e_hat: [Vec<Complex64>; 3] = Default::default();
    let mut b_hat: [Vec<Complex64>; 3] = Default::default();
    for comp in 0..3 {
        e_hat[comp] = vec![Complex64::default(); sites];
        b_hat[comp] = vec![Complex64::default(); sites];
    }
    let a_half = Complex64::new(amplitude / 2.0, 0.0);
    for sign in [1i64, -1] {
        let idx = lattice.mode_index([0, 0, sign * m]);
        e_hat[0][idx] = a_half;
        b_hat[1][idx] = a_half;
    }
    MaxwellField::from_spectral(lattice, e_hat, b_hat, None, 1e-12)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const C_TEST: f64 = 137.035999;

    /// Random conjugate-symmetric, divergence-free spectral data away from
    /// the Nyquist planes.
    fn random_transverse(lat: &Lattice, seed: u64) -> [Vec<Complex64>; 3] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = lat.points_per_axis() as i64;
        let band = (n - 1) / 2;
        let mut hat: [Vec<Complex64>; 3] = Default::default();
        for comp in hat.iter_mut() {
            *comp = vec![Complex64::default(); lat.sites()];
        }
        for mx in -band..=band {
            for my in -band..=band {
                for mz in -band..=band {
                    if (mx, my, mz) <= (0, 0, 0) {
                        continue;
                    }
                    let idx = lat.mode_index([mx, my, mz]);
                    let par = lat.mode_index([-mx, -my, -mz]);
                    let k = lat.wavevector(idx);
                    let k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
                    let v: [Complex64; 3] = std::array::from_fn(|_| {
                        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                    });
                    let dot = (k[0] * v[0] + k[1] * v[1] + k[2] * v[2]) / k2;
                    for c in 0..3 {
                        let t = v[c] - dot * k[c];
                        hat[c][idx] = t;
                        hat[c][par] = t.conj();
                    }
                }
            }
        }
        hat
    }

    #[test]
    fn zero_field_stays_zero() {
        let lat = Lattice::new(1, 16, 4.0).unwrap();
        let zeros = vec![0.0; lat.sites()];
        let f = MaxwellField::from_physical(
            &lat,
            [&zeros, &zeros, &zeros],
            [&zeros, &zeros, &zeros],
            &zeros,
            1e-12,
        )
        .unwrap();
        let g = f.propagate(2.5, C_TEST, None).unwrap();
        assert_eq!(g.energy(), 0.0);
        for comp in 0..3 {
            assert!(g.e_hat(comp).iter().all(|c| c.norm() == 0.0));
            assert!(g.b_hat(comp).iter().all(|c| c.norm() == 0.0));
        }
    }

    #[test]
    fn plane_wave_translates_at_light_speed() {
        let lat = Lattice::new(1, 64, 10.0).unwrap();
        let m = 3i64;
        let amp = 0.7;
        let wave = plane_wave(&lat, m, amp).unwrap();
        let k = 2.0 * std::f64::consts::PI * m as f64 / lat.length();
        let t = 0.0371;
        let moved = wave.propagate(t, C_TEST, None).unwrap();
        // spectrally: the +k coefficient picks up exp(-i k c t) and the -k
        // coefficient the conjugate phase
        for sign in [1i64, -1] {
            let idx = lat.mode_index([0, 0, sign * m]);
            let phase = Complex64::from_polar(1.0, -(sign as f64) * k * C_TEST * t);
            let want_e = Complex64::new(amp / 2.0, 0.0) * phase;
            assert!((moved.e_hat(0)[idx] - want_e).norm() < 1e-12 * amp);
            assert!((moved.b_hat(1)[idx] - want_e).norm() < 1e-12 * amp);
        }
        // physically: the profile is the launch profile shifted by c t
        for (i, value) in moved.e_physical(0).iter().enumerate() {
            let x3 = lat.position(i)[2];
            let want = amp * (k * (x3 - C_TEST * t)).cos();
            assert!((value - want).abs() < 1e-12 * amp);
        }
    }

    #[test]
    fn free_energy_is_conserved_and_fields_stay_real() {
        let lat = Lattice::new(3, 8, 6.0).unwrap();
        let e_hat = random_transverse(&lat, 41);
        let b_hat = random_transverse(&lat, 42);
        let f0 = MaxwellField::from_spectral(&lat, e_hat, b_hat, None, 1e-10).unwrap();
        let u0 = f0.energy();
        assert!(u0 > 0.0);
        let mut f = f0;
        let dt = 0.003;
        for _ in 0..100 {
            f = f.propagate(dt, C_TEST, None).unwrap();
        }
        assert!((f.energy() - u0).abs() < 1e-12 * u0);
        let (div_e, div_b) = f.constraint_residuals(None);
        assert!(div_e < 1e-10 && div_b < 1e-10);
        for comp in 0..3 {
            assert!(lat.hermitian_defect(f.e_hat(comp)) < 1e-13);
            assert!(lat.hermitian_defect(f.b_hat(comp)) < 1e-13);
        }
    }

    #[test]
    fn static_coulomb_field_is_stationary() {
        let lat = Lattice::new(3, 8, 5.0).unwrap();
        // smooth neutral charge density from a few low modes
        let mut rho_hat = vec![Complex64::default(); lat.sites()];
        for (m, a) in [([1i64, 0, 0], 0.3), ([0, 1, -1], 0.1)] {
            let idx = lat.mode_index(m);
            let par = lat.mode_index([-m[0], -m[1], -m[2]]);
            rho_hat[idx] = Complex64::new(a, 0.2 * a);
            rho_hat[par] = rho_hat[idx].conj();
        }
        let four_pi = 4.0 * std::f64::consts::PI;
        let mut e_hat: [Vec<Complex64>; 3] = Default::default();
        for comp in e_hat.iter_mut() {
            *comp = vec![Complex64::default(); lat.sites()];
        }
        for i in 0..lat.sites() {
            let k = lat.wavevector(i);
            let k2 = lat.k_squared(i);
            if k2 == 0.0 {
                continue;
            }
            // longitudinal solution of div E = 4 pi rho
            let coeff = Complex64::new(0.0, -four_pi) * rho_hat[i] / k2;
            for c in 0..3 {
                e_hat[c][i] = coeff * k[c];
            }
        }
        let b_hat: [Vec<Complex64>; 3] = std::array::from_fn(|_| vec![Complex64::default(); lat.sites()]);
        let f = MaxwellField::from_spectral(&lat, e_hat, b_hat, Some(&rho_hat), 1e-11).unwrap();
        let g = f.propagate(0.9, C_TEST, None).unwrap();
        for comp in 0..3 {
            for i in 0..lat.sites() {
                assert!((g.e_hat(comp)[i] - f.e_hat(comp)[i]).norm() < 1e-15);
                assert!(g.b_hat(comp)[i].norm() < 1e-15);
            }
        }
        let (div_e, _) = g.constraint_residuals(Some(&rho_hat));
        assert!(div_e < 1e-12);
    }

    #[test]
    fn constraint_violations_are_rejected_with_residuals() {
        let lat = Lattice::new(1, 16, 8.0).unwrap();
        let k1 = 2.0 * std::f64::consts::PI / lat.length();
        let profile: Vec<f64> = (0..lat.sites())
            .map(|i| (k1 * lat.position(i)[2]).cos())
            .collect();
        let zeros = vec![0.0; lat.sites()];
        // E along x3 varying along x3 has divergence but rho = 0
        let err = MaxwellField::from_physical(
            &lat,
            [&zeros, &zeros, &profile],
            [&zeros, &zeros, &zeros],
            &zeros,
            1e-10,
        )
        .unwrap_err();
        match err {
            FieldError::ConstraintViolated { div_e, div_b, .. } => {
                assert!(div_e > 1e-3);
                assert!(div_b < 1e-14);
            }
            other => panic!("wrong error: {other:?}"),
        }
        assert_eq!(err.name(), "constraint-violated");
        let err_b = MaxwellField::from_physical(
            &lat,
            [&zeros, &zeros, &zeros],
            [&zeros, &zeros, &profile],
            &zeros,
            1e-10,
        )
        .unwrap_err();
        match err_b {
            FieldError::ConstraintViolated { div_e, div_b, .. } => {
                assert!(div_b > 1e-3);
                assert!(div_e < 1e-14);
            }
            other => panic!("wrong error: {other:?}"),
        }
    }

    #[test]
    fn harmonic_source_matches_midpoint_integration() {
        let lat = Lattice::new(1, 32, 7.0).unwrap();
        let sites = lat.sites();
        let mut amp: [Vec<Complex64>; 3] = std::array::from_fn(|_| vec![Complex64::default(); sites]);
        // transverse current with two resolved modes
        for (m, a) in [(1i64, 0.4), (3, 0.15)] {
            let idx = lat.mode_index([0, 0, m]);
            let par = lat.mode_index([0, 0, -m]);
            amp[0][idx] = Complex64::new(a, -0.2 * a);
            amp[0][par] = amp[0][idx].conj();
        }
        let nu = 1.3;
        let src = CurrentSource {
            frequency: nu,
            amplitude_hat: amp.clone(),
        };
        let zeros_hat: [Vec<Complex64>; 3] = std::array::from_fn(|_| vec![Complex64::default(); sites]);
        let f0 = MaxwellField::from_spectral(&lat, zeros_hat.clone(), zeros_hat, None, 1e-12).unwrap();
        let t = 0.02;
        let closed = f0.propagate(t, C_TEST, Some(&src)).unwrap();
        let sampled = f0
            .propagate_sampled(t, C_TEST, 4000, |s| {
                let mut j = amp.clone();
                let c = (nu * s).cos();
                for comp in j.iter_mut() {
                    for v in comp.iter_mut() {
                        *v *= c;
                    }
                }
                j
            })
            .unwrap();
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for comp in 0..3 {
            for i in 0..sites {
                worst = worst.max((closed.e_hat(comp)[i] - sampled.e_hat(comp)[i]).norm());
                worst = worst.max((closed.b_hat(comp)[i] - sampled.b_hat(comp)[i]).norm());
                scale = scale.max(closed.e_hat(comp)[i].norm());
            }
        }
        assert!(scale > 0.0);
        assert!(worst < 1e-6 * scale.max(1.0), "worst deviation {worst}");
    }

    #[test]
    fn uniform_currents_are_rejected() {
        let lat = Lattice::new(1, 16, 3.0).unwrap();
        let ones = vec![1.0; lat.sites()];
        let zeros = vec![0.0; lat.sites()];
        let err = CurrentSource::from_physical(&lat, [&ones, &zeros, &zeros], 2.0).unwrap_err();
        assert_eq!(err.name(), "mean-current");
    }
}
