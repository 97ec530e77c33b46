use num_complex::Complex64;

use super::halfint::{valid_pair, HalfInt};
use super::AngularError;

/// Ladder coefficients s± for the normalized raising/lowering action
/// on |J M>: raise gives s_plus |J M+1>, lower gives s_minus |J M-1>.
///
/// s±(J, M) = sqrt((J ∓ M)(J ± M + 1)). The radicand is assembled from
/// doubled integers, so it is exact; s_minus(J, M+1) == s_plus(J, M)
/// holds bit for bit, which is what makes the matrices below Hermitian
/// without any symmetrization step.
pub fn ladder_coefficients(j: HalfInt, m: HalfInt) -> Result<(f64, f64), AngularError> {
    if !valid_pair(j, m) {
        return Err(AngularError::InvalidPair {
            twice_j: j.doubled(),
            twice_m: m.doubled(),
        });
    }
    let dj = i64::from(j.doubled());
    let dm = i64::from(m.doubled());
    // (J - M)(J + M + 1) = (dj - dm)(dj + dm + 2) / 4, both factors even sums
    let plus_radicand = ((dj - dm) * (dj + dm + 2)) as f64 / 4.0;
    let minus_radicand = ((dj + dm) * (dj - dm + 2)) as f64 / 4.0;
    Ok((plus_radicand.sqrt(), minus_radicand.sqrt()))
}

/// The three Hermitian generators H1, H2, H3 of the spin-J irreducible
/// representation, in the eigenbasis of H3 ordered M = -J, ..., +J.
#[derive(Debug, Clone)]
pub struct AngularRep {
    j: HalfInt,
    h: [CMat; 3],
}

/// Builds the 2J+1 dimensional representation from the ladder action:
/// H3 is diagonal, H1 = (H+ + H-)/2, H2 = (H+ - H-)/(2i).
pub fn spin_representation(j: HalfInt) -> Result<AngularRep, AngularError> {
    if j.doubled() < 0 {
        return Err(AngularError::InvalidPair {
            twice_j: j.doubled(),
            twice_m: j.doubled(),
        });
    }
    let dim = (j.doubled() + 1) as usize;
    let mut h1 = CMat::zeros(dim);
    let mut h2 = CMat::zeros(dim);
    let mut h3 = CMat::zeros(dim);
    for col in 0..dim {
        let m = HalfInt::from_doubled(2 * col as i32 - j.doubled());
        let (s_plus, s_minus) = ladder_coefficients(j, m)?;
        h3.set(col, col, Complex64::new(m.value(), 0.0));
        if col + 1 < dim {
            h1.add_to(col + 1, col, Complex64::new(s_plus / 2.0, 0.0));
            h2.add_to(col + 1, col, Complex64::new(0.0, -s_plus / 2.0));
        }
        if col > 0 {
            h1.add_to(col - 1, col, Complex64::new(s_minus / 2.0, 0.0));
            h2.add_to(col - 1, col, Complex64::new(0.0, s_minus / 2.0));
        }
    }
    Ok(AngularRep { j, h: [h1, h2, h3] })
}

impl AngularRep {
    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn dim(&self) -> usize {
        self.h[0].n
    }

    /// Entry (row, col) of generator `axis` (0, 1, 2 for H1, H2, H3).
    pub fn entry(&self, axis: usize, row: usize, col: usize) -> Complex64 {
        self.h[axis].get(row, col)
    }

    /// Sup-norm defect of [H_a, H_b] = i H_c over the three cyclic triples.
    pub fn commutation_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let comm = self.h[a].mul(&self.h[b]).sub(&self.h[b].mul(&self.h[a]));
            let target = self.h[c].scale(Complex64::new(0.0, 1.0));
            worst = worst.max(comm.sub(&target).max_abs());
        }
        worst
    }

    /// Sup-norm defect of H1^2 + H2^2 + H3^2 = J(J+1) I.
    pub fn casimir_residual(&self) -> f64 {
        let mut sum = CMat::zeros(self.dim());
        for h in &self.h {
            sum = sum.add(&h.mul(h));
        }
        let target = CMat::identity(self.dim()).scale(Complex64::new(self.j.casimir(), 0.0));
        sum.sub(&target).max_abs()
    }

    /// Sup-norm defect of H_a = H_a^dagger.
    pub fn hermiticity_residual(&self) -> f64 {
        self.h
            .iter()
            .map(|h| h.sub(&h.adjoint()).max_abs())
            .fold(0.0, f64::max)
    }
}

/// exp(i theta n.sigma / 2) for a unit axis n: the spin-1/2 rotation by
/// angle theta. A full turn gives -I, the sign a 4pi turn undoes.
pub fn spin_half_rotation(theta: f64, axis: [f64; 3]) -> [[Complex64; 2]; 2] {
    let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    let n = [axis[0] / norm, axis[1] / norm, axis[2] / norm];
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let i = Complex64::new(0.0, 1.0);
    // n.sigma = [[n3, n1 - i n2], [n1 + i n2, -n3]]
    [
        [
            Complex64::new(c, 0.0) + i * s * n[2],
            i * s * Complex64::new(n[0], -n[1]),
        ],
        [
            i * s * Complex64::new(n[0], n[1]),
            Complex64::new(c, 0.0) - i * s * n[2],
        ],
    ]
}

/// Dense row-major complex matrix, just big enough for representation checks.
#[derive(Debug, Clone)]
pub(crate) struct CMat {
    n: usize,
    a: Vec<Complex64>,
}

impl CMat {
    pub(crate) fn zeros(n: usize) -> Self {
        CMat { n, a: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub(crate) fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub(crate) fn get(&self, r: usize, c: usize) -> Complex64 {
        self.a[r * self.n + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.a[r * self.n + c] = v;
    }

    pub(crate) fn add_to(&mut self, r: usize, c: usize, v: Complex64) {
        self.a[r * self.n + c] += v;
    }

    pub(crate) fn mul(&self, rhs: &CMat) -> CMat {
        let n = self.n;
        let mut out = CMat::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let x = self.get(r, k);
                if x.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out.a[r * n + c] += x * rhs.get(k, c);
                }
            }
        }
        out
    }

    pub(crate) fn add(&self, rhs: &CMat) -> CMat {
        let mut out = self.clone();
        for (x, y) in out.a.iter_mut().zip(&rhs.a) {
            *x += y;
        }
        out
    }

    pub(crate) fn sub(&self, rhs: &CMat) -> CMat {
        let mut out = self.clone();
        for (x, y) in out.a.iter_mut().zip(&rhs.a) {
            *x -= y;
        }
        out
    }

    pub(crate) fn scale(&self, s: Complex64) -> CMat {
        let mut out = self.clone();
        for x in out.a.iter_mut() {
            *x *= s;
        }
        out
    }

    pub(crate) fn adjoint(&self) -> CMat {
        let mut out = CMat::zeros(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                out.set(r, c, self.get(c, r).conj());
            }
        }
        out
    }

    pub(crate) fn max_abs(&self) -> f64 {
        self.a.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}
