use num_complex::Complex64;

use super::OracleError;

/// Nodes and weights of a one-dimensional quadrature rule.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// Gauss-Legendre on [-1, 1]; exact for polynomials of degree 2n - 1.
    pub fn gauss_legendre(n: usize) -> Result<Self, OracleError> {
        let (nodes, weights) = gauss_legendre_checked(n)?;
        Ok(QuadratureRule { nodes, weights })
    }

    /// Gauss-Legendre mapped onto [a, b].
    pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> Result<Self, OracleError> {
        let (x, w) = gauss_legendre_checked(n)?;
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        Ok(QuadratureRule {
            nodes: x.iter().map(|t| mid + half * t).collect(),
            weights: w.iter().map(|v| v * half).collect(),
        })
    }

    /// Gauss-Laguerre for the weight e^{-x} on [0, inf); exact for
    /// polynomials of degree 2n - 1 against that weight.
    pub fn gauss_laguerre(n: usize) -> Result<Self, OracleError> {
        gauss_laguerre_checked(n).map(|(nodes, weights)| QuadratureRule { nodes, weights })
    }

    /// Gauss-Laguerre rescaled to integrate f(r) e^{-beta r} dr on [0, inf):
    /// pass the smooth factor f; the exponential is in the weights.
    pub fn gauss_laguerre_scaled(n: usize, beta: f64) -> Result<Self, OracleError> {
        let (x, w) = gauss_laguerre_checked(n)?;
        Ok(QuadratureRule {
            nodes: x.iter().map(|t| t / beta).collect(),
            weights: w.iter().map(|v| v / beta).collect(),
        })
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    pub fn integrate_complex<F: Fn(f64) -> Complex64>(&self, f: F) -> Complex64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .fold(Complex64::new(0.0, 0.0), |acc, v| acc + v)
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration from the
/// Chebyshev initial guess.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    gauss_legendre_checked(n).expect("positive quadrature order")
}

fn gauss_legendre_checked(n: usize) -> Result<(Vec<f64>, Vec<f64>), OracleError> {
    if n == 0 {
        return Err(OracleError::EmptyRule);
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut converged = false;
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= 1e-15 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(OracleError::NodeDivergence { index: i, order: n });
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    Ok((nodes, weights))
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn laguerre_pair(n: usize, x: f64) -> (f64, f64) {
    // Returns (L_n(x), L_{n-1}(x)).
    let mut l0 = 1.0;
    let mut l1 = 1.0 - x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let l2 = ((2.0 * kf + 1.0 - x) * l1 - kf * l0) / (kf + 1.0);
        l0 = l1;
        l1 = l2;
    }
    (l1, l0)
}

fn gauss_laguerre_checked(n: usize) -> Result<(Vec<f64>, Vec<f64>), OracleError> {
    if n == 0 {
        return Err(OracleError::EmptyRule);
    }
    let nf = n as f64;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let mut z = 0.0;
    for i in 0..n {
        // Stieltjes-style initial guesses, then Newton on L_n.
        if i == 0 {
            z = 3.0 / (1.0 + 2.4 * nf);
        } else if i == 1 {
            z += 15.0 / (1.0 + 2.5 * nf);
        } else {
            let ai = (i - 1) as f64;
            z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - nodes[i - 2]);
        }
        let mut converged = false;
        for _ in 0..200 {
            let (l_n, l_nm1) = laguerre_pair(n, z);
            let dl = nf * (l_n - l_nm1) / z;
            let dz = l_n / dl;
            z -= dz;
            if dz.abs() <= 1e-14 * z.max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(OracleError::NodeDivergence { index: i, order: n });
        }
        nodes[i] = z;
        let (l_np1, _) = laguerre_pair(n + 1, z);
        weights[i] = z / ((nf + 1.0) * (nf + 1.0) * l_np1 * l_np1);
    }
    Ok((nodes, weights))
}

/// Integral over the unit sphere of a function of (theta, phi), exact for
/// spherical polynomials up to degree 2 l_max + 1: Gauss-Legendre in
/// cos(theta) crossed with a uniform trapezoid in phi.
pub fn sphere_quadrature<F: Fn(f64, f64) -> f64>(f: F, l_max: u32) -> f64 {
    sphere_quadrature_complex(|t, p| Complex64::new(f(t, p), 0.0), l_max).re
}

pub fn sphere_quadrature_complex<F: Fn(f64, f64) -> Complex64>(f: F, l_max: u32) -> Complex64 {
    let n_theta = l_max as usize + 2;
    let n_phi = 2 * l_max as usize + 4;
    let (x, w) = gauss_legendre(n_theta);
    let dphi = 2.0 * std::f64::consts::PI / n_phi as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for (xi, wi) in x.iter().zip(&w) {
        let theta = xi.acos();
        let mut ring = Complex64::new(0.0, 0.0);
        for k in 0..n_phi {
            ring += f(theta, k as f64 * dphi);
        }
        total += wi * dphi * ring;
    }
    total
}

/// Composite Gauss-Legendre over [a, b] in segments of at most `seg_len`,
/// for integrands with a known oscillation scale.
pub fn integrate_segments<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    seg_len: f64,
    nodes_per_seg: usize,
) -> f64 {
    let segments = (((b - a) / seg_len).ceil() as usize).max(1);
    let h = (b - a) / segments as f64;
    let (x, w) = gauss_legendre(nodes_per_seg);
    let mut total = 0.0;
    for s in 0..segments {
        let lo = a + s as f64 * h;
        let mid = lo + 0.5 * h;
        for (xi, wi) in x.iter().zip(&w) {
            total += 0.5 * h * wi * f(mid + 0.5 * h * xi);
        }
    }
    total
}
