use num_complex::Complex64;

use super::lattice::Lattice;
use super::FieldError;

/// Dispersion law applied mode by mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DispersionKind {
    /// Free Schrödinger phase, `omega = k^2 / 2`.
    Schrodinger,
    /// Klein–Gordon phase with rest energy, `omega = c sqrt(k^2 + c^2)`.
    KleinGordon { c_light: f64 },
}

impl DispersionKind {
    pub fn omega(&self, k_squared: f64) -> f64 {
        match self {
            DispersionKind::Schrodinger => k_squared / 2.0,
            DispersionKind::KleinGordon { c_light } => {
                c_light * (k_squared + c_light * c_light).sqrt()
            }
        }
    }

    /// Group velocity magnitude at wave number `k`.
    pub fn group_speed(&self, k: f64) -> f64 {
        match self {
            DispersionKind::Schrodinger => k.abs(),
            DispersionKind::KleinGordon { c_light } => {
                let omega = self.omega(k * k);
                (k * c_light * c_light / omega).abs()
            }
        }
    }
}

/// Complex scalar field on a lattice, stored spectrally.
#[derive(Debug, Clone)]
pub struct ScalarField {
    lattice: Lattice,
    psi_hat: Vec<Complex64>,
}

impl ScalarField {
    pub fn from_physical(lattice: &Lattice, psi: &[Complex64]) -> Result<Self, FieldError> {
        Ok(ScalarField {
            lattice: lattice.clone(),
            psi_hat: lattice.analyze(psi)?,
        })
    }

    pub fn from_spectral(lattice: &Lattice, psi_hat: Vec<Complex64>) -> Result<Self, FieldError> {
        lattice.check_len(psi_hat.len())?;
        Ok(ScalarField {
            lattice: lattice.clone(),
            psi_hat,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn psi_hat(&self) -> &[Complex64] {
        &self.psi_hat
    }

    pub fn physical(&self) -> Vec<Complex64> {
        self.lattice.synthesize(&self.psi_hat).unwrap()
    }

    /// `int |psi|^2 dx`, evaluated spectrally.
    pub fn charge(&self) -> f64 {
        self.lattice.volume() * self.psi_hat.iter().map(|c| c.norm_sqr()).sum::<f64>()
    }

    /// Expectation of momentum, `int psi* (-i grad) psi dx`.
    pub fn momentum(&self) -> [f64; 3] {
        let mut p = [0.0; 3];
        for (i, c) in self.psi_hat.iter().enumerate() {
            let k = self.lattice.wavevector(i);
            let w = c.norm_sqr();
            for a in 0..3 {
                p[a] += k[a] * w;
            }
        }
        let vol = self.lattice.volume();
        [p[0] * vol, p[1] * vol, p[2] * vol]
    }

    /// Dispersion-weighted energy, `sum omega(k) |psi_hat|^2` times the box
    /// volume. For the Schrödinger law this is the usual kinetic energy.
    pub fn energy(&self, kind: DispersionKind) -> f64 {
        let sum: f64 = self
            .psi_hat
            .iter()
            .enumerate()
            .map(|(i, c)| kind.omega(self.lattice.k_squared(i)) * c.norm_sqr())
            .sum();
        self.lattice.volume() * sum
    }

    /// Density centroid `int x |psi|^2 dx / int |psi|^2 dx` in physical
    /// space. Meaningful for packets that stay clear of the box edges.
    pub fn centroid(&self) -> [f64; 3] {
        let phys = self.physical();
        let cell = self.lattice.cell_volume();
        let mut weight = 0.0;
        let mut first = [0.0; 3];
        for (i, c) in phys.iter().enumerate() {
            let w = c.norm_sqr() * cell;
            let x = self.lattice.position(i);
            weight += w;
            for a in 0..3 {
                first[a] += w * x[a];
            }
        }
        [first[0] / weight, first[1] / weight, first[2] / weight]
    }
}

/// Multiply every mode by `exp(-i omega(k) t)`. Charge is conserved to
/// rounding, and so are the energy and momentum functionals, because all
/// three are diagonal in `k`.
pub fn free_dispersion_evolve(field: &ScalarField, kind: DispersionKind, t: f64) -> ScalarField {
    let psi_hat = field
        .psi_hat
        .iter()
        .enumerate()
        .map(|(i, c)| c * Complex64::from_polar(1.0, -kind.omega(field.lattice.k_squared(i)) * t))
        .collect();
    ScalarField {
        lattice: field.lattice.clone(),
        psi_hat,
    }
}

/// Normalized Gaussian wave packet with carrier `wavevector`.
///
/// For a one-dimensional lattice only the third components of `center` and
/// `wavevector` are used. The box must be at least eight widths across so
/// the periodic images stay negligible.
#[derive(Debug, Clone, Copy)]
pub struct PacketSpec {
    pub center: [f64; 3],
    pub sigma: f64,
    pub wavevector: [f64; 3],
}

pub fn gaussian_packet(lattice: &Lattice, spec: PacketSpec) -> Result<ScalarField, FieldError> {
    if !(spec.sigma.is_finite() && spec.sigma > 0.0) {
        return Err(FieldError::BadPacket {
            reason: format!("width must be positive, got {}", spec.sigma),
        });
    }
    if lattice.length() < 8.0 * spec.sigma {
        return Err(FieldError::BadPacket {
            reason: format!(
                "box of length {} is narrower than eight widths ({})",
                lattice.length(),
                8.0 * spec.sigma
            ),
        });
    }
    let axes: &[usize] = if lattice.dims() == 1 { &[2] } else { &[0, 1, 2] };
    let nyquist = std::f64::consts::PI * lattice.points_per_axis() as f64 / lattice.length();
    for &a in axes {
        let c = spec.center[a];
        if !(0.0..lattice.length()).contains(&c) {
            return Err(FieldError::BadPacket {
                reason: format!("center {c} lies outside the box [0, {})", lattice.length()),
            });
        }
        if spec.wavevector[a].abs() + 4.0 / spec.sigma > nyquist {
            return Err(FieldError::BadPacket {
                reason: format!(
                    "carrier {} plus packet bandwidth exceeds the resolvable band {nyquist}",
                    spec.wavevector[a]
                ),
            });
        }
    }
    let norm = (2.0 * std::f64::consts::PI * spec.sigma * spec.sigma)
        .powf(-(axes.len() as f64) / 4.0);
    let phys: Vec<Complex64> = (0..lattice.sites())
        .map(|i| {
            let x = lattice.position(i);
            let mut envelope = 0.0;
            let mut phase = 0.0;
            for &a in axes {
                let d = x[a] - spec.center[a];
                envelope += d * d;
                phase += spec.wavevector[a] * x[a];
            }
            Complex64::from_polar(
                norm * (-envelope / (4.0 * spec.sigma * spec.sigma)).exp(),
                phase,
            )
        })
        .collect();
    ScalarField::from_physical(lattice, &phys)
}
