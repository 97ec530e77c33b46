use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use super::FieldError;

/// Uniform periodic sampling lattice in one or three dimensions.
///
/// Fields live on `n` points per axis spanning a box of side `len`, and
/// their spectral coefficients sit on the dual lattice `k = 2 pi m / len`
/// with the integer `m` running over `-n/2 .. n/2`. The analysis transform
/// carries the `1/n^dims` factor, so synthesis is the plain inverse DFT and
/// `sum_x |f(x)|^2 = n^dims * sum_k |f_hat(k)|^2`.
///
/// A one-dimensional lattice maps its single coordinate to the third axis,
/// so transverse plane waves keep their usual component labels.
#[derive(Clone)]
pub struct Lattice {
    dims: u8,
    n: usize,
    len: f64,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("dims", &self.dims)
            .field("n", &self.n)
            .field("len", &self.len)
            .finish()
    }
}

impl Lattice {
    pub fn new(dims: u8, n: usize, len: f64) -> Result<Self, FieldError> {
        if dims != 1 && dims != 3 {
            return Err(FieldError::BadDims { dims });
        }
        if n < 4 {
            return Err(FieldError::TooFewPoints { n });
        }
        if !(len.is_finite() && len > 0.0) {
            return Err(FieldError::BadLength { len });
        }
        let mut planner = FftPlanner::new();
        Ok(Lattice {
            dims,
            n,
            len,
            fwd: planner.plan_fft_forward(n),
            inv: planner.plan_fft_inverse(n),
        })
    }

    pub fn dims(&self) -> u8 {
        self.dims
    }

    pub fn points_per_axis(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.len
    }

    /// Total number of lattice sites, equal to the number of modes.
    pub fn sites(&self) -> usize {
        self.n.pow(u32::from(self.dims))
    }

    pub fn volume(&self) -> f64 {
        self.len.powi(i32::from(self.dims))
    }

    pub fn cell_volume(&self) -> f64 {
        (self.len / self.n as f64).powi(i32::from(self.dims))
    }

    fn signed_mode(&self, i: usize) -> i64 {
        if i <= (self.n - 1) / 2 {
            i as i64
        } else {
            i as i64 - self.n as i64
        }
    }

    fn axis_indices(&self, flat: usize) -> [usize; 3] {
        match self.dims {
            1 => [0, 0, flat],
            _ => {
                let iz = flat % self.n;
                let iy = (flat / self.n) % self.n;
                let ix = flat / (self.n * self.n);
                [ix, iy, iz]
            }
        }
    }

    pub fn flat_index(&self, axes: [usize; 3]) -> usize {
        match self.dims {
            1 => axes[2],
            _ => (axes[0] * self.n + axes[1]) * self.n + axes[2],
        }
    }

    /// Spatial coordinates of a lattice site; unused axes read zero.
    pub fn position(&self, flat: usize) -> [f64; 3] {
        let step = self.len / self.n as f64;
        let idx = self.axis_indices(flat);
        match self.dims {
            1 => [0.0, 0.0, idx[2] as f64 * step],
            _ => [
                idx[0] as f64 * step,
                idx[1] as f64 * step,
                idx[2] as f64 * step,
            ],
        }
    }

    /// Wave vector of a mode; unused axes read zero.
    pub fn wavevector(&self, flat: usize) -> [f64; 3] {
        let unit = 2.0 * std::f64::consts::PI / self.len;
        let idx = self.axis_indices(flat);
        match self.dims {
            1 => [0.0, 0.0, self.signed_mode(idx[2]) as f64 * unit],
            _ => [
                self.signed_mode(idx[0]) as f64 * unit,
                self.signed_mode(idx[1]) as f64 * unit,
                self.signed_mode(idx[2]) as f64 * unit,
            ],
        }
    }

    pub fn k_squared(&self, flat: usize) -> f64 {
        let k = self.wavevector(flat);
        k[0] * k[0] + k[1] * k[1] + k[2] * k[2]
    }

    /// Flat index of the mode with the opposite wave vector.
    pub fn partner(&self, flat: usize) -> usize {
        let idx = self.axis_indices(flat);
        let flip = |i: usize| (self.n - i) % self.n;
        match self.dims {
            1 => flip(idx[2]),
            _ => self.flat_index([flip(idx[0]), flip(idx[1]), flip(idx[2])]),
        }
    }

    /// Flat index of the mode with integer wave numbers `m` (one per axis;
    /// for one dimension only the third entry is used).
    pub fn mode_index(&self, m: [i64; 3]) -> usize {
        let wrap = |v: i64| v.rem_euclid(self.n as i64) as usize;
        match self.dims {
            1 => wrap(m[2]),
            _ => self.flat_index([wrap(m[0]), wrap(m[1]), wrap(m[2])]),
        }
    }

    fn transform_axes(&self, data: &mut [Complex64], inverse: bool) {
        let plan = if inverse { &self.inv } else { &self.fwd };
        let mut scratch = vec![Complex64::default(); plan.get_inplace_scratch_len()];
        if self.dims == 1 {
            plan.process_with_scratch(data, &mut scratch);
            return;
        }
        let n = self.n;
        let mut line = vec![Complex64::default(); n];
        // axis strides in the z-fastest layout: x -> n^2, y -> n, z -> 1
        for (stride, blocks) in [(1usize, n * n), (n, n * n), (n * n, n * n)] {
            for block in 0..blocks {
                let base = match stride {
                    1 => block * n,
                    s if s == n => (block / n) * n * n + block % n,
                    _ => block,
                };
                for (j, slot) in line.iter_mut().enumerate() {
                    *slot = data[base + j * stride];
                }
                plan.process_with_scratch(&mut line, &mut scratch);
                for (j, slot) in line.iter().enumerate() {
                    data[base + j * stride] = *slot;
                }
            }
        }
    }

    /// Physical samples to spectral coefficients (carries the `1/sites` factor).
    pub fn analyze(&self, phys: &[Complex64]) -> Result<Vec<Complex64>, FieldError> {
        self.check_len(phys.len())?;
        let mut hat = phys.to_vec();
        self.transform_axes(&mut hat, false);
        let scale = 1.0 / self.sites() as f64;
        for c in &mut hat {
            *c *= scale;
        }
        Ok(hat)
    }

    /// Spectral coefficients back to physical samples.
    pub fn synthesize(&self, hat: &[Complex64]) -> Result<Vec<Complex64>, FieldError> {
        self.check_len(hat.len())?;
        let mut phys = hat.to_vec();
        self.transform_axes(&mut phys, true);
        Ok(phys)
    }

    pub fn check_len(&self, got: usize) -> Result<(), FieldError> {
        let expected = self.sites();
        if got == expected {
            Ok(())
        } else {
            Err(FieldError::ShapeMismatch { expected, got })
        }
    }

    /// Largest deviation from the conjugate symmetry a real field must show.
    pub fn hermitian_defect(&self, hat: &[Complex64]) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..hat.len() {
            let d = (hat[self.partner(i)].conj() - hat[i]).norm();
            worst = worst.max(d);
        }
        worst
    }
}
