use num_complex::Complex64;
use std::collections::BTreeMap;

use super::halfint::HalfInt;
use super::rep::ladder_coefficients;
use super::AngularError;
use crate::oracle::quadrature::gauss_legendre;

/// Normalized spherical harmonic Y_l^m with the Condon-Shortley phase,
/// evaluated through the stable associated-Legendre recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphericalHarmonic {
    l: u32,
    m: i32,
}

impl SphericalHarmonic {
    pub fn new(l: u32, m: i32) -> Result<Self, AngularError> {
        if m.unsigned_abs() > l {
            return Err(AngularError::MagneticOutOfRange { l, m_abs: m.unsigned_abs() });
        }
        Ok(SphericalHarmonic { l, m })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    /// The real theta factor F_l^m with normalization folded in, so the full
    /// harmonic is theta_part(theta) * exp(i m phi).
    pub fn theta_part(&self, theta: f64) -> f64 {
        let ma = self.m.unsigned_abs();
        let val = norm_factor(self.l, ma) * assoc_legendre(self.l, ma, theta.cos());
        // Y_l^{-m} = (-1)^m conj(Y_l^m); conjugation only touches the phi phase.
        if self.m < 0 && ma % 2 == 1 {
            -val
        } else {
            val
        }
    }

    pub fn eval(&self, theta: f64, phi: f64) -> Complex64 {
        let (s, c) = (f64::from(self.m) * phi).sin_cos();
        self.theta_part(theta) * Complex64::new(c, s)
    }
}

/// Associated Legendre P_l^m(x) with the Condon-Shortley (-1)^m folded into
/// the seed P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, then the three-term upward
/// recurrence in l. Stable for the moderate degrees used here.
fn assoc_legendre(l: u32, m: u32, x: f64) -> f64 {
    debug_assert!(m <= l);
    let mut pmm = 1.0;
    if m > 0 {
        let somx2 = ((1.0 - x) * (1.0 + x)).max(0.0).sqrt();
        let mut odd = 1.0;
        for _ in 0..m {
            pmm *= -odd * somx2;
            odd += 2.0;
        }
    }
    if l == m {
        return pmm;
    }
    let mf = f64::from(m);
    let mut pmmp1 = x * (2.0 * mf + 1.0) * pmm;
    if l == m + 1 {
        return pmmp1;
    }
    let mut pll = 0.0;
    for ll in (m + 2)..=l {
        let llf = f64::from(ll);
        pll = ((2.0 * llf - 1.0) * x * pmmp1 - (llf + mf - 1.0) * pmm) / (llf - mf);
        pmm = pmmp1;
        pmmp1 = pll;
    }
    pll
}

/// sqrt((2l+1)/(4 pi) * (l-m)!/(l+m)!) without forming large factorials.
fn norm_factor(l: u32, m: u32) -> f64 {
    let mut ratio = 1.0;
    for k in (l - m + 1)..=(l + m) {
        ratio *= f64::from(k);
    }
    ((2.0 * f64::from(l) + 1.0) / (4.0 * std::f64::consts::PI) / ratio).sqrt()
}

/// Y_l^m built purely by raising the bottom state, with no reference to
/// Legendre functions: the seed sin^l(theta) e^{-il phi} is normalized by
/// quadrature, then the raising operator e^{i phi}(d_theta - m cot theta)
/// is applied in exact monomial arithmetic and rescaled by the ladder
/// coefficient at each step. Serves as an independent cross-check of
/// `SphericalHarmonic`.
#[derive(Debug, Clone)]
pub struct LadderHarmonic {
    m: i32,
    poly: TrigPoly,
}

pub fn ladder_harmonic(l: u32, m: i32) -> Result<LadderHarmonic, AngularError> {
    if m.unsigned_abs() > l {
        return Err(AngularError::MagneticOutOfRange { l, m_abs: m.unsigned_abs() });
    }
    // Normalize c * sin^l: integral of sin^{2l} over the sphere, by a rule
    // exact for polynomials of this degree.
    let (nodes, weights) = gauss_legendre(l as usize + 2);
    let mut sphere_int = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        sphere_int += w * (1.0 - x * x).powi(l as i32);
    }
    sphere_int *= 2.0 * std::f64::consts::PI;
    let mut poly = TrigPoly::monomial(l, 0, 1.0 / sphere_int.sqrt());

    let lh = HalfInt::from_int(l as i32);
    let mut cur = -(l as i32);
    while cur < m {
        let (s_plus, _) = ladder_coefficients(lh, HalfInt::from_int(cur))?;
        poly = poly.raise(cur).scaled(1.0 / s_plus);
        cur += 1;
    }
    Ok(LadderHarmonic { m, poly })
}

impl LadderHarmonic {
    pub fn eval(&self, theta: f64, phi: f64) -> Complex64 {
        let (s, c) = (f64::from(self.m) * phi).sin_cos();
        self.poly.eval(theta) * Complex64::new(c, s)
    }

    pub fn theta_part(&self, theta: f64) -> f64 {
        self.poly.eval(theta)
    }
}

/// Finite sum of monomials sin^a(theta) cos^b(theta). Raising maps the family
/// to itself because every term at magnetic level m carries at least
/// sin^{|m|}, so the cot theta piece never produces a negative power.
#[derive(Debug, Clone, Default)]
struct TrigPoly {
    terms: BTreeMap<(u32, u32), f64>,
}

impl TrigPoly {
    fn monomial(sin_pow: u32, cos_pow: u32, coeff: f64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((sin_pow, cos_pow), coeff);
        TrigPoly { terms }
    }

    fn add_term(&mut self, sin_pow: u32, cos_pow: u32, coeff: f64) {
        if coeff != 0.0 {
            *self.terms.entry((sin_pow, cos_pow)).or_insert(0.0) += coeff;
        }
    }

    /// Applies F -> F' - m cot(theta) F, the theta action of raising from
    /// magnetic level m.
    fn raise(&self, m: i32) -> TrigPoly {
        let mf = f64::from(m);
        let mut out = TrigPoly::default();
        for (&(a, b), &c) in &self.terms {
            if c == 0.0 {
                continue;
            }
            // d/dtheta sin^a cos^b
            if a > 0 {
                out.add_term(a - 1, b + 1, c * f64::from(a));
            }
            if b > 0 {
                out.add_term(a + 1, b - 1, -c * f64::from(b));
            }
            // -m cot(theta) sin^a cos^b
            if m != 0 {
                assert!(a > 0, "cot term would leave the monomial family");
                out.add_term(a - 1, b + 1, -mf * c);
            }
        }
        out
    }

    fn scaled(&self, s: f64) -> TrigPoly {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= s;
        }
        out
    }

    fn eval(&self, theta: f64) -> f64 {
        let (sin_t, cos_t) = theta.sin_cos();
        self.terms
            .iter()
            .map(|(&(a, b), &c)| c * sin_t.powi(a as i32) * cos_t.powi(b as i32))
            .sum()
    }
}
