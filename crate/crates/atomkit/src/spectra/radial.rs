use super::{validate_nl, SpectraError};

/// Normalized hydrogen radial wavefunction R_{nl}(r) = N e^{-r/n} rho^l L(rho)
/// with rho = 2r/n, where L is the terminating power series of degree
/// n - l - 1 generated by the two-term recurrence of the bound problem.
#[derive(Debug, Clone)]
pub struct RadialFunction {
    n: u32,
    l: u32,
    /// Coefficients a_k of L(rho) = sum a_k rho^k, a_0 = 1.
    coeffs: Vec<f64>,
    norm: f64,
}

/// Builds R_{nl} from the series recurrence
/// a_{k+1} = (k - (n - 1 - l)) / ((k+1)(k + 2l + 2)) a_k,
/// which terminates exactly at degree n - l - 1, then normalizes with the
/// closed-form moments of r^k e^{-2r/n}.
pub fn radial_wavefunction(n: u32, l: u32) -> Result<RadialFunction, SpectraError> {
    validate_nl(n, l)?;
    let degree = (n - l - 1) as usize;
    let mut coeffs = Vec::with_capacity(degree + 1);
    coeffs.push(1.0);
    for k in 0..degree {
        let kf = k as f64;
        let next = coeffs[k] * (kf - degree as f64) / ((kf + 1.0) * (kf + 2.0 * f64::from(l) + 2.0));
        coeffs.push(next);
    }

    // Norm: integral of R^2 r^2 dr. With P(rho) = rho^l L(rho) and rho = 2r/n
    // every cross term is a pure moment: (n/2)^3 a_j a_k (j + k + 2l + 2)!.
    let mut integral = 0.0;
    for (j, aj) in coeffs.iter().enumerate() {
        for (k, ak) in coeffs.iter().enumerate() {
            integral += aj * ak * factorial(j + k + 2 * l as usize + 2);
        }
    }
    let nf = f64::from(n);
    integral *= (nf / 2.0).powi(3);
    Ok(RadialFunction { n, l, norm: 1.0 / integral.sqrt(), coeffs })
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

impl RadialFunction {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Exponential decay rate 1/n: R = polynomial_part * exp(-decay_rate * r).
    pub fn decay_rate(&self) -> f64 {
        1.0 / f64::from(self.n)
    }

    /// Series coefficients of L, starting from a_0 = 1.
    pub fn series_coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    /// N rho^l L(rho): everything except the exponential factor.
    pub fn polynomial_part(&self, r: f64) -> f64 {
        let rho = 2.0 * r / f64::from(self.n);
        let series: f64 = self.coeffs.iter().rev().fold(0.0, |acc, a| acc * rho + a);
        self.norm * rho.powi(self.l as i32) * series
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.polynomial_part(r) * (-r * self.decay_rate()).exp()
    }

    /// Radial nodes predicted by the series degree.
    pub fn expected_nodes(&self) -> u32 {
        self.n - self.l - 1
    }

    /// Counts sign changes of R on a uniform sample of (0, r_max].
    pub fn count_nodes(&self, r_max: f64, samples: usize) -> u32 {
        let mut nodes = 0;
        let mut last = 0.0f64;
        for i in 1..=samples {
            let r = r_max * i as f64 / samples as f64;
            let v = self.polynomial_part(r);
            if last != 0.0 && v != 0.0 && v.signum() != last.signum() {
                nodes += 1;
            }
            if v != 0.0 {
                last = v;
            }
        }
        nodes
    }
}
