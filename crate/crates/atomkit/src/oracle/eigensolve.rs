use super::OracleError;

/// Uniform grid for the reduced radial problem on (0, r_max) with Dirichlet
/// ends: `steps` intervals of width r_max / steps, interior points only.
#[derive(Debug, Clone, Copy)]
pub struct RadialGrid {
    pub r_max: f64,
    pub steps: usize,
}

impl RadialGrid {
    pub fn new(r_max: f64, steps: usize) -> Result<Self, OracleError> {
        if !(r_max.is_finite() && r_max > 0.0) {
            return Err(OracleError::BadExtent { r_max });
        }
        if steps < 16 {
            return Err(OracleError::GridTooCoarse { min: 16, got: steps });
        }
        Ok(RadialGrid { r_max, steps })
    }

    /// A grid adequate for bound states up to principal quantum number
    /// n_max: the box extends well past the outer turning point 2 n^2 and
    /// the spacing resolves the innermost lobe.
    pub fn for_bound_states(n_max: u32) -> Self {
        let n = f64::from(n_max.max(1));
        RadialGrid {
            r_max: 30.0 * n + 2.0 * n * n,
            steps: 8000 * n_max.max(1) as usize,
        }
    }

    pub fn spacing(&self) -> f64 {
        self.r_max / self.steps as f64
    }
}

/// Lowest `count` bound levels of u'' = -2 (E - V_eff) u with
/// V_eff = -1/r + l(l+1)/(2 r^2), by three-point finite differences and
/// Sturm-sequence bisection on the tridiagonal matrix. This never touches
/// the closed-form spectrum it is used to check.
pub fn radial_eigensolve(l: u32, count: usize, grid: &RadialGrid) -> Result<Vec<f64>, OracleError> {
    RadialGrid::new(grid.r_max, grid.steps)?;
    let h = grid.spacing();
    let n = grid.steps - 1;
    let ll1 = f64::from(l) * (f64::from(l) + 1.0);
    let diag: Vec<f64> = (1..=n)
        .map(|i| {
            let r = i as f64 * h;
            1.0 / (h * h) - 1.0 / r + ll1 / (2.0 * r * r)
        })
        .collect();
    let off = -0.5 / (h * h);

    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let e = tridiag_eigenvalue(&diag, off, k);
        if e >= 0.0 {
            return Err(OracleError::TooFewBoundStates { requested: count, found: k });
        }
        out.push(e);
    }
    Ok(out)
}

/// Richardson extrapolation of `radial_eigensolve` over grids h and h/2,
/// cancelling the leading h^2 discretization error.
pub fn radial_eigensolve_refined(
    l: u32,
    count: usize,
    grid: &RadialGrid,
) -> Result<Vec<f64>, OracleError> {
    let coarse = radial_eigensolve(l, count, grid)?;
    let fine_grid = RadialGrid { r_max: grid.r_max, steps: grid.steps * 2 };
    let fine = radial_eigensolve(l, count, &fine_grid)?;
    Ok(coarse
        .iter()
        .zip(&fine)
        .map(|(c, f)| (4.0 * f - c) / 3.0)
        .collect())
}

/// Number of eigenvalues of the symmetric tridiagonal matrix strictly below
/// x, via the Sturm sequence of leading principal minors.
fn sturm_count(diag: &[f64], off: f64, x: f64) -> usize {
    let off2 = off * off;
    let mut count = 0;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for &d in &diag[1..] {
        // A zero pivot means x hit a Ritz value of a leading block; treat
        // it as a tiny positive number, as if x were nudged by one ulp.
        let denom = if q == 0.0 { f64::MIN_POSITIVE } else { q };
        q = d - x - off2 / denom;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// k-th smallest eigenvalue (0-based) by bisection on the counting function.
fn tridiag_eigenvalue(diag: &[f64], off: f64, k: usize) -> f64 {
    let width = 2.0 * off.abs();
    let mut lo = diag.iter().copied().fold(f64::INFINITY, f64::min) - width;
    let mut hi = diag.iter().copied().fold(f64::NEG_INFINITY, f64::max) + width;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if sturm_count(diag, off, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= 1e-15 * hi.abs().max(lo.abs()).max(1e-30) {
            break;
        }
    }
    0.5 * (lo + hi)
}
