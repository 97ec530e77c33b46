//! atomkit: closed-form atomic physics with built-in numerical cross-checks.
//!
//! Every subcommand prints one table to stdout and nothing else there;
//! diagnostics go to stderr. Identical flags produce byte-identical output.
//! Exit codes: 0 success, 1 computation or domain error (the typed error
//! name leads the stderr line), 2 flag errors (from the parser).

mod table;
mod verify;

use std::fmt;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use atomkit::angular::{AngularError, HalfInt};
use atomkit::fields::{
    classical_zeeman_modes, free_dispersion_evolve, fresnel, gaussian_packet, hertz_dipole,
    plane_wave, radiated_power, DipoleSource, DispersionKind, FieldError, Lattice, PacketSpec,
    Polarization,
};
use atomkit::oracle::OracleError;
use atomkit::response::{
    drude_epsilon, hydrogen_transitions, kk_susceptibility, langevin_chi, paramagnetic_moment,
    FrequencyConvention, Oscillator, OscillatorSet, ResponseError,
};
use atomkit::scattering::{
    atom_form_factor, classical_rutherford, deflection_angle, deflection_angle_numeric,
    kepler_trajectory, photo_regime, photoeffect_pattern, quantum_rutherford, red_bound,
    thomson_differential, thomson_differential_unpolarized, thomson_total, ConicClass,
    PhotoRegime, ScatteringError,
};
use atomkit::spectra::{
    anomalous_zeeman_lines, degeneracy, dirac_binding_energy, dirac_level, dirac_level_binomial,
    schrodinger_level, selection_allowed, series_lines, series_name, SpectraError, Term,
    ZeemanMode,
};
use atomkit::units::{classical_electron_radius, speed_of_light, ALPHA};

use table::{Cell, Column, Dim, Format, Table, UnitSystem};

const UNITS_NOTE: &str = "All flag values are in hartree atomic units. --units converts printed \
columns only and renames them accordingly; dimensionless columns (angles in radians, ratios, \
counts) never change. ATOMKIT_ALPHA overrides the fine-structure constant.";

#[derive(Parser)]
#[command(
    name = "atomkit",
    version,
    about = "Hydrogen spectra, angular momentum, scattering, radiation and response functions, \
             each backed by an independent numerical cross-check",
    after_help = UNITS_NOTE,
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for the data table.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Unit system for printed columns.
    #[arg(long, global = true, value_enum, default_value_t = UnitSystem::Au)]
    units: UnitSystem,

    /// Fine-structure constant.
    #[arg(long, global = true, env = "ATOMKIT_ALPHA", value_parser = parse_alpha,
          default_value_t = ALPHA)]
    alpha: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Nonrelativistic hydrogen levels -1/(2n^2) with degeneracies.
    #[command(after_help = "Columns: n, E (level energy), degeneracy (n^2).")]
    Spectrum {
        /// Largest principal quantum number.
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },

    /// Emission lines sharing a lower level (Lyman, Balmer, ...).
    #[command(after_help = "Columns: n_upper, n_lower, omega (line frequency). The series \
                            name, when it has one, goes to stderr.")]
    Series {
        /// Lower level of the series.
        #[arg(long, default_value_t = 2)]
        n_lower: u32,
        /// Largest upper level to include.
        #[arg(long, default_value_t = 8)]
        n_upper_max: u32,
    },

    /// Magnetic level shifts and line patterns.
    #[command(subcommand)]
    Zeeman(ZeemanCommand),

    /// Relativistic hydrogen level from the terminating Dirac radial series.
    #[command(after_help = "Columns: nr (radial number), l, e_ratio (E/mu c^2, exact form), \
                            e_ratio_binomial (alpha^4 expansion), binding (E - mu c^2).")]
    Dirac {
        /// Radial quantum number.
        #[arg(long)]
        nr: u32,
        /// Orbital quantum number.
        #[arg(long)]
        l: u32,
    },

    /// Electric dipole selection rule for a pair of orbitals.
    #[command(after_help = "Columns: l_from, m_from, l_to, m_to, allowed (true iff \
                            delta l = +/-1 and delta m in {-1, 0, +1}).")]
    Select {
        #[arg(long)]
        l_from: u32,
        #[arg(long)]
        m_from: i32,
        #[arg(long)]
        l_to: u32,
        #[arg(long)]
        m_to: i32,
    },

    /// Cross sections: Thomson, Rutherford, form factors, photoeffect.
    #[command(subcommand)]
    Scatter(ScatterCommand),

    /// Planar orbit in a -gamma/r potential with conserved-quantity audit.
    #[command(after_help = "Columns without --summary: t, x, y, vx, vy. With --summary: \
                            energy, angular_momentum, eccentricity, class, period (empty for \
                            unbound orbits), max_energy_drift, max_momentum_drift.")]
    Kepler {
        /// Launch position x.
        #[arg(long, default_value_t = 1.0)]
        x0: f64,
        /// Launch position y.
        #[arg(long, default_value_t = 0.0)]
        y0: f64,
        /// Launch velocity x.
        #[arg(long, default_value_t = 0.0)]
        vx0: f64,
        /// Launch velocity y.
        #[arg(long, default_value_t = 1.2)]
        vy0: f64,
        /// Coupling strength of the attractive -gamma/r potential.
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
        /// Integration span.
        #[arg(long, default_value_t = 40.0, value_parser = parse_positive)]
        t_end: f64,
        /// Number of evenly spaced output samples.
        #[arg(long, default_value_t = 256, value_parser = parse_samples)]
        samples: usize,
        /// Print conserved quantities and classification instead of the orbit.
        #[arg(long)]
        summary: bool,
    },

    /// Exact spectral evolution of free fields and radiating sources.
    #[command(subcommand)]
    Fields(FieldsCommand),

    /// Reflection and transmission at a plane interface.
    #[command(after_help = "Columns: alpha (incidence angle, radians), R_perp, T_perp, \
                            R_par, T_par (energy coefficients; under total internal \
                            reflection R = 1 and T = 0).")]
    Fresnel {
        /// Index on the incidence side.
        #[arg(long, default_value_t = 1.0)]
        n1: f64,
        /// Index on the far side.
        #[arg(long, default_value_t = 1.5)]
        n2: f64,
        /// Single incidence angle in radians; omit for a sweep over [0, pi/2).
        #[arg(long)]
        angle: Option<f64>,
        /// Sweep resolution.
        #[arg(long, default_value_t = 19, value_parser = parse_samples)]
        samples: usize,
    },

    /// Dispersion, absorption and magnetic response of bound electrons.
    #[command(subcommand)]
    Response(ResponseCommand),

    /// Run every numerical cross-check and report residuals vs budgets.
    #[command(after_help = "Columns: check, residual, budget, status. Exits 1 if any check \
                            breaches its budget. Grid sizes are trimmed for speed; budgets \
                            are the library's full-scale promises.")]
    Verify,
}

#[derive(Subcommand)]
enum ZeemanCommand {
    /// Normal-effect levels of shell n: one row per magnetic number.
    #[command(after_help = "Columns: n, m, E (shifted level). The electron charge makes \
                            omega_L negative for b > 0.")]
    Levels {
        /// Principal quantum number.
        #[arg(long)]
        n: u32,
        /// Magnetic field along z.
        #[arg(long)]
        b: f64,
        /// Moment coupling: orbit only, or orbit plus a frozen spin projection.
        #[arg(long, value_enum, default_value_t = LevelMode::Orbital)]
        mode: LevelMode,
    },

    /// Anomalous-effect line pattern between two fine-structure terms.
    #[command(after_help = "Columns: omega (line frequency), m_upper, m_lower (magnetic \
                            numbers, half-integers like 3/2), polarization (pi, sigma+, \
                            sigma-). Half-integer flags accept forms like 3/2 or 2.")]
    Lines {
        /// Orbital number of the upper term.
        #[arg(long)]
        l_upper: u32,
        /// Total angular momentum of the upper term.
        #[arg(long, value_parser = parse_half)]
        j_upper: HalfInt,
        /// Orbital number of the lower term.
        #[arg(long)]
        l_lower: u32,
        /// Total angular momentum of the lower term.
        #[arg(long, value_parser = parse_half)]
        j_lower: HalfInt,
        /// Unperturbed line frequency.
        #[arg(long)]
        omega0: f64,
        /// Magnetic field along z.
        #[arg(long)]
        b: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelMode {
    Orbital,
    SpinUp,
    SpinDown,
}

#[derive(Subcommand)]
enum ScatterCommand {
    /// Light on a free electron; all values in units of r_e^2.
    #[command(after_help = "Columns with --total: sigma_re2 (8 pi / 3). Otherwise: theta, \
                            dsigma_re2 per solid angle, unpolarized unless --phi fixes the \
                            azimuth from the polarization axis.")]
    Thomson {
        /// Print the total cross section instead of the angular pattern.
        #[arg(long)]
        total: bool,
        /// Single scattering angle; omit for a sweep over [0, pi].
        #[arg(long)]
        theta: Option<f64>,
        /// Azimuth from the polarization axis; selects the polarized pattern.
        #[arg(long)]
        phi: Option<f64>,
        /// Sweep resolution.
        #[arg(long, default_value_t = 19, value_parser = parse_samples)]
        samples: usize,
    },

    /// Coulomb scattering off a fixed charge.
    #[command(after_help = "Columns: theta, dsigma (classical cross section per solid \
                            angle); with --born also dsigma_born, the screened Born form \
                            for unit charges at wavenumber k = m v and screening eps.")]
    Rutherford {
        /// Single scattering angle; omit for a sweep over (0, pi].
        #[arg(long)]
        theta: Option<f64>,
        /// Projectile charge in elementary units.
        #[arg(long, default_value_t = 1.0)]
        q: f64,
        /// Center charge in elementary units.
        #[arg(long, default_value_t = 1.0)]
        z: f64,
        /// Projectile mass.
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        /// Asymptotic speed.
        #[arg(long, default_value_t = 1.0)]
        v: f64,
        /// Add the Born column.
        #[arg(long)]
        born: bool,
        /// Screening wavenumber for the Born column.
        #[arg(long, default_value_t = 0.0)]
        eps: f64,
        /// Sweep resolution.
        #[arg(long, default_value_t = 19, value_parser = parse_samples)]
        samples: usize,
    },

    /// Elastic form factor of a hydrogen-like ground state.
    #[command(after_help = "Columns: theta, form_factor (1 at forward scattering), \
                            dsigma_re2 (unpolarized coherent pattern in r_e^2 units).")]
    FormFactor {
        /// Incident wavenumber.
        #[arg(long, default_value_t = 2.0)]
        k: f64,
        /// Orbital length scale.
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        /// Single scattering angle; omit for a sweep over [0, pi].
        #[arg(long)]
        theta: Option<f64>,
        /// Sweep resolution.
        #[arg(long, default_value_t = 19, value_parser = parse_samples)]
        samples: usize,
    },

    /// Photoeffect threshold, or the photoelectron angular pattern.
    #[command(after_help = "Columns: omega, omega1 (bound level), red_bound (threshold), \
                            regime. With --pattern: theta, intensity (normalized emission \
                            pattern at azimuth --phi).")]
    Photo {
        /// Light frequency.
        #[arg(long, default_value_t = 0.6)]
        omega: f64,
        /// Energy of the bound state (negative).
        #[arg(long, default_value_t = -0.5)]
        omega1: f64,
        /// Print the emission pattern instead of the threshold row.
        #[arg(long)]
        pattern: bool,
        /// Azimuth from the polarization axis for the pattern.
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// Sweep resolution.
        #[arg(long, default_value_t = 19, value_parser = parse_samples)]
        samples: usize,
    },

    /// Classical deflection function theta(b), closed form vs trajectory.
    #[command(after_help = "Columns: b (impact parameter), theta (closed-form deflection); \
                            with --numeric also theta_numeric from an integrated orbit. \
                            Without --b the sweep is log-spaced over [--b-min, --b-max].")]
    Deflection {
        /// Single impact parameter; omit for a log-spaced sweep.
        #[arg(long)]
        b: Option<f64>,
        #[arg(long, default_value_t = 0.1, value_parser = parse_positive)]
        b_min: f64,
        #[arg(long, default_value_t = 10.0, value_parser = parse_positive)]
        b_max: f64,
        /// Projectile charge in elementary units.
        #[arg(long, default_value_t = 1.0)]
        q: f64,
        /// Center charge in elementary units.
        #[arg(long, default_value_t = 1.0)]
        z: f64,
        /// Projectile mass.
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        /// Asymptotic speed.
        #[arg(long, default_value_t = 1.0)]
        v: f64,
        /// Cross-check against an integrated trajectory.
        #[arg(long)]
        numeric: bool,
        /// Sweep resolution.
        #[arg(long, default_value_t = 9, value_parser = parse_samples)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum FieldsCommand {
    /// Plane electromagnetic wave advected by the exact spectral propagator.
    #[command(after_help = "Columns: x (position along the axis), e1, b2 (transverse field \
                            components, atomic units). The snapshot is taken after \
                            propagating for --time.")]
    PlaneWave {
        /// Grid points.
        #[arg(long, default_value_t = 64, value_parser = parse_grid)]
        n: usize,
        /// Box length.
        #[arg(long, default_value_t = 10.0, value_parser = parse_positive)]
        length: f64,
        /// Integer mode number along the axis.
        #[arg(long, default_value_t = 3)]
        mode: i64,
        /// Field amplitude.
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        /// Evolution time.
        #[arg(long, default_value_t = 0.0)]
        time: f64,
    },

    /// Gaussian packet under an exact dispersion flow; group-velocity audit.
    #[command(after_help = "Columns: kind, time, centroid_start, centroid_end, speed \
                            (measured centroid speed), group_speed (from the dispersion \
                            relation at the carrier), rel_error.")]
    Packet {
        #[arg(long, value_enum, default_value_t = PacketKind::Schrodinger)]
        kind: PacketKind,
        /// Grid points.
        #[arg(long, default_value_t = 512, value_parser = parse_grid)]
        n: usize,
        /// Box length.
        #[arg(long, default_value_t = 100.0, value_parser = parse_positive)]
        length: f64,
        /// Packet center along the axis.
        #[arg(long, default_value_t = 30.0)]
        center: f64,
        /// Packet width.
        #[arg(long, default_value_t = 3.0, value_parser = parse_positive)]
        sigma: f64,
        /// Carrier wavenumber along the axis.
        #[arg(long, default_value_t = 1.5)]
        k: f64,
        /// Evolution time.
        #[arg(long, default_value_t = 20.0, value_parser = parse_positive)]
        time: f64,
    },

    /// Classical Zeeman triplet of an isotropic charged oscillator.
    #[command(after_help = "Columns: omega_pi (axial mode), omega_plus, omega_minus \
                            (circular modes omega0 +/- |omega_L| to first order).")]
    ZeemanModes {
        /// Oscillator frequency.
        #[arg(long, default_value_t = 1.0, value_parser = parse_positive)]
        omega0: f64,
        /// Magnetic field along z.
        #[arg(long)]
        b: f64,
    },

    /// Hertz dipole radiation: angular pattern or emitted power.
    #[command(after_help = "Columns: theta, dpower (radiated power per solid angle through \
                            a sphere of radius --r at time --time). With --total: time, \
                            power (instantaneous total emission 2 p''^2 / 3c^3).")]
    Hertz {
        /// Dipole amplitude along z.
        #[arg(long, default_value_t = 1.0)]
        p0: f64,
        /// Oscillation frequency.
        #[arg(long, default_value_t = 1.0, value_parser = parse_positive)]
        omega: f64,
        /// Observation sphere radius.
        #[arg(long, default_value_t = 1000.0, value_parser = parse_positive)]
        r: f64,
        /// Observation time.
        #[arg(long, default_value_t = 0.0)]
        time: f64,
        /// Sweep resolution over theta.
        #[arg(long, default_value_t = 19, value_parser = parse_samples)]
        samples: usize,
        /// Print the instantaneous total power instead of the pattern.
        #[arg(long)]
        total: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PacketKind {
    Schrodinger,
    KleinGordon,
}

#[derive(Subcommand)]
enum ResponseCommand {
    /// Drude-Lorentz permittivity of one damped oscillator species.
    #[command(after_help = "Columns: omega, eps_re, eps_im. With --damping 0 a sweep point \
                            landing exactly on omega0 is a pole-hit error.")]
    Drude {
        /// Oscillator eigenfrequency.
        #[arg(long, default_value_t = 1.0)]
        omega0: f64,
        /// Oscillator strength.
        #[arg(long, default_value_t = 1.0)]
        weight: f64,
        /// Damping rate.
        #[arg(long, default_value_t = 0.1)]
        damping: f64,
        /// Number density of oscillators.
        #[arg(long, default_value_t = 0.01)]
        density: f64,
        #[arg(long, default_value_t = 0.0)]
        omega_min: f64,
        #[arg(long, default_value_t = 2.0)]
        omega_max: f64,
        /// Sweep resolution.
        #[arg(long, default_value_t = 21, value_parser = parse_samples)]
        samples: usize,
    },

    /// Kramers-Kronig susceptibility from hydrogen 1s -> np lines.
    #[command(after_help = "Columns: omega, chi (real susceptibility, atomic units; poles \
                            sit at the transition frequencies). The truncation tail \
                            estimate goes to stderr.")]
    Kk {
        /// Largest principal number in the transition sum.
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        /// Number density of atoms.
        #[arg(long, default_value_t = 0.01)]
        density: f64,
        #[arg(long, default_value_t = 0.0)]
        omega_min: f64,
        #[arg(long, default_value_t = 0.3)]
        omega_max: f64,
        /// Sweep resolution.
        #[arg(long, default_value_t = 21, value_parser = parse_samples)]
        samples: usize,
        /// Sign convention for the transition frequencies.
        #[arg(long, value_enum, default_value_t = Convention::ExcitedMinusGround)]
        convention: Convention,
    },

    /// Discrete 1s -> np transition table.
    #[command(after_help = "Columns: n, omega (transition frequency), dipole_sq (squared \
                            axial matrix element), oscillator_strength (axial, \
                            2 omega dipole_sq). The tail estimate goes to stderr.")]
    Transitions {
        /// Largest principal number.
        #[arg(long, default_value_t = 6)]
        n_max: u32,
    },

    /// Diamagnetic (Langevin) susceptibility from the orbital spread.
    #[command(after_help = "Columns: mean_r2 (orbital spread), chi_atom, chi_bulk \
                            (susceptibilities, always atomic units; for the hydrogen \
                            ground state chi_atom = -alpha^2/2).")]
    Langevin {
        /// Mean squared orbital radius; 3 is the hydrogen ground state.
        #[arg(long, default_value_t = 3.0)]
        mean_r2: f64,
        /// Number density of atoms.
        #[arg(long, default_value_t = 0.01)]
        density: f64,
    },

    /// Orbital paramagnetic moment of a circulating state.
    #[command(after_help = "Columns: m (magnetic quantum number), mu (magnetic moment; \
                            negative for positive m because the electron charge is \
                            negative).")]
    Moment {
        /// Magnetic quantum number.
        #[arg(long, default_value_t = 1)]
        m: i32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Convention {
    ExcitedMinusGround,
    GroundMinusExcited,
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() && v > 0.0 && v < 1.0 {
        Ok(v)
    } else {
        Err("fine-structure constant must lie in (0, 1)".into())
    }
}

fn parse_positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err("value must be positive".into())
    }
}

fn parse_samples(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if (2..=1_000_000).contains(&v) {
        Ok(v)
    } else {
        Err("sample count must lie in [2, 1000000]".into())
    }
}

fn parse_grid(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    if (4..=1 << 20).contains(&v) {
        Ok(v)
    } else {
        Err("grid size must lie in [4, 1048576]".into())
    }
}

fn parse_half(s: &str) -> Result<HalfInt, String> {
    let t = s.trim();
    let bad = || format!("`{s}` is not a half-integer like 3/2 or 2");
    if let Some(head) = t.strip_suffix("/2") {
        Ok(HalfInt::from_doubled(head.parse().map_err(|_| bad())?))
    } else {
        Ok(HalfInt::from_int(t.parse().map_err(|_| bad())?))
    }
}

#[derive(Debug)]
enum AppError {
    Angular(AngularError),
    Spectra(SpectraError),
    Oracle(OracleError),
    Scattering(ScatteringError),
    Field(FieldError),
    Response(ResponseError),
    Io(io::Error),
    VerifyFailed { failed: usize, total: usize },
}

impl AppError {
    fn name(&self) -> &'static str {
        match self {
            AppError::Angular(e) => e.name(),
            AppError::Spectra(e) => e.name(),
            AppError::Oracle(e) => e.name(),
            AppError::Scattering(e) => e.name(),
            AppError::Field(e) => e.name(),
            AppError::Response(e) => e.name(),
            AppError::Io(_) => "io",
            AppError::VerifyFailed { .. } => "verify-failed",
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Angular(e) => e.fmt(f),
            AppError::Spectra(e) => e.fmt(f),
            AppError::Oracle(e) => e.fmt(f),
            AppError::Scattering(e) => e.fmt(f),
            AppError::Field(e) => e.fmt(f),
            AppError::Response(e) => e.fmt(f),
            AppError::Io(e) => e.fmt(f),
            AppError::VerifyFailed { failed, total } => {
                write!(f, "{failed} of {total} cross-checks breached their residual budget")
            }
        }
    }
}

macro_rules! from_error {
    ($variant:ident, $err:ty) => {
        impl From<$err> for AppError {
            fn from(e: $err) -> Self {
                AppError::$variant(e)
            }
        }
    };
}

from_error!(Angular, AngularError);
from_error!(Spectra, SpectraError);
from_error!(Oracle, OracleError);
from_error!(Scattering, ScatteringError);
from_error!(Field, FieldError);
from_error!(Response, ResponseError);
from_error!(Io, io::Error);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<(), AppError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match &cli.command {
        Command::Verify => {
            let checks = verify::run_all(cli.alpha);
            let mut t = Table::new(vec![
                Column::new("check", Dim::Pure),
                Column::new("residual", Dim::Pure),
                Column::new("budget", Dim::Pure),
                Column::new("status", Dim::Pure),
            ]);
            let mut failed = 0usize;
            for c in &checks {
                let ok = c.passed();
                if !ok {
                    failed += 1;
                }
                t.push(vec![
                    Cell::Text(c.name.into()),
                    Cell::Num(c.residual),
                    Cell::Num(c.budget),
                    Cell::Text(if ok { "pass" } else { "fail" }.into()),
                ]);
            }
            t.emit(&mut out, cli.format, cli.units)?;
            out.flush()?;
            if failed > 0 {
                return Err(AppError::VerifyFailed { failed, total: checks.len() });
            }
            Ok(())
        }
        command => {
            let t = build_table(command, cli.alpha)?;
            t.emit(&mut out, cli.format, cli.units)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn build_table(command: &Command, alpha: f64) -> Result<Table, AppError> {
    match command {
        Command::Spectrum { n_max } => spectrum_table(*n_max),
        Command::Series { n_lower, n_upper_max } => series_table(*n_lower, *n_upper_max),
        Command::Zeeman(z) => zeeman_table(z, alpha),
        Command::Dirac { nr, l } => dirac_table(*nr, *l, alpha),
        Command::Select { l_from, m_from, l_to, m_to } => {
            select_table(*l_from, *m_from, *l_to, *m_to)
        }
        Command::Scatter(s) => scatter_table(s, alpha),
        Command::Kepler { x0, y0, vx0, vy0, gamma, t_end, samples, summary } => {
            kepler_table([*x0, *y0], [*vx0, *vy0], *gamma, *t_end, *samples, *summary)
        }
        Command::Fields(f) => fields_table(f, alpha),
        Command::Fresnel { n1, n2, angle, samples } => {
            fresnel_table(*n1, *n2, *angle, *samples)
        }
        Command::Response(r) => response_table(r, alpha),
        Command::Verify => unreachable!("verify is handled by run"),
    }
}

fn spectrum_table(n_max: u32) -> Result<Table, AppError> {
    let mut t = Table::new(vec![
        Column::new("n", Dim::Pure),
        Column::new("E", Dim::Energy),
        Column::new("degeneracy", Dim::Pure),
    ]);
    for n in 1..=n_max.max(1) {
        t.push(vec![
            Cell::Int(i64::from(n)),
            Cell::Num(schrodinger_level(n)?),
            Cell::Int(degeneracy(n)? as i64),
        ]);
    }
    Ok(t)
}

fn series_table(n_lower: u32, n_upper_max: u32) -> Result<Table, AppError> {
    let lines = series_lines(n_lower, n_upper_max)?;
    if let Some(name) = series_name(n_lower) {
        eprintln!("series: {name}");
    }
    let mut t = Table::new(vec![
        Column::new("n_upper", Dim::Pure),
        Column::new("n_lower", Dim::Pure),
        Column::new("omega", Dim::Frequency),
    ]);
    for line in lines {
        t.push(vec![
            Cell::Int(i64::from(line.n_upper)),
            Cell::Int(i64::from(line.n_lower)),
            Cell::Num(line.omega),
        ]);
    }
    Ok(t)
}

fn zeeman_table(command: &ZeemanCommand, alpha: f64) -> Result<Table, AppError> {
    match command {
        ZeemanCommand::Levels { n, b, mode } => {
            let mode = match mode {
                LevelMode::Orbital => ZeemanMode::Orbital,
                LevelMode::SpinUp => ZeemanMode::SpinUp,
                LevelMode::SpinDown => ZeemanMode::SpinDown,
            };
            let mut t = Table::new(vec![
                Column::new("n", Dim::Pure),
                Column::new("m", Dim::Pure),
                Column::new("E", Dim::Energy),
            ]);
            let n = (*n).max(1);
            let span = n as i32 - 1;
            for m in -span..=span {
                t.push(vec![
                    Cell::Int(i64::from(n)),
                    Cell::Int(i64::from(m)),
                    Cell::Num(atomkit::spectra::zeeman_levels(n, m, *b, mode, alpha)?),
                ]);
            }
            Ok(t)
        }
        ZeemanCommand::Lines { l_upper, j_upper, l_lower, j_lower, omega0, b } => {
            let lines = anomalous_zeeman_lines(
                Term { l: *l_upper, j: *j_upper },
                Term { l: *l_lower, j: *j_lower },
                *omega0,
                *b,
                alpha,
            )?;
            let mut t = Table::new(vec![
                Column::new("omega", Dim::Frequency),
                Column::new("m_upper", Dim::Pure),
                Column::new("m_lower", Dim::Pure),
                Column::new("polarization", Dim::Pure),
            ]);
            for line in lines {
                let pol = match line.polarization {
                    atomkit::spectra::Polarization::Pi => "pi",
                    atomkit::spectra::Polarization::SigmaPlus => "sigma+",
                    atomkit::spectra::Polarization::SigmaMinus => "sigma-",
                };
                t.push(vec![
                    Cell::Num(line.omega),
                    Cell::Text(line.m_upper.to_string()),
                    Cell::Text(line.m_lower.to_string()),
                    Cell::Text(pol.into()),
                ]);
            }
            Ok(t)
        }
    }
}

fn dirac_table(nr: u32, l: u32, alpha: f64) -> Result<Table, AppError> {
    let mut t = Table::new(vec![
        Column::new("nr", Dim::Pure),
        Column::new("l", Dim::Pure),
        Column::new("e_ratio", Dim::Pure),
        Column::new("e_ratio_binomial", Dim::Pure),
        Column::new("binding", Dim::Energy),
    ]);
    t.push(vec![
        Cell::Int(i64::from(nr)),
        Cell::Int(i64::from(l)),
        Cell::Num(dirac_level(nr, l, alpha)?),
        Cell::Num(dirac_level_binomial(nr, l, alpha)?),
        Cell::Num(dirac_binding_energy(nr, l, alpha)?),
    ]);
    Ok(t)
}

fn select_table(l_from: u32, m_from: i32, l_to: u32, m_to: i32) -> Result<Table, AppError> {
    let mut t = Table::new(vec![
        Column::new("l_from", Dim::Pure),
        Column::new("m_from", Dim::Pure),
        Column::new("l_to", Dim::Pure),
        Column::new("m_to", Dim::Pure),
        Column::new("allowed", Dim::Pure),
    ]);
    t.push(vec![
        Cell::Int(i64::from(l_from)),
        Cell::Int(i64::from(m_from)),
        Cell::Int(i64::from(l_to)),
        Cell::Int(i64::from(m_to)),
        Cell::Bool(selection_allowed(l_from, m_from, l_to, m_to)),
    ]);
    Ok(t)
}

fn scatter_table(command: &ScatterCommand, alpha: f64) -> Result<Table, AppError> {
    let re2 = classical_electron_radius(alpha).powi(2);
    match command {
        ScatterCommand::Thomson { total, theta, phi, samples } => {
            if *total {
                let mut t = Table::new(vec![Column::new("sigma_re2", Dim::Pure)]);
                t.push(vec![Cell::Num(thomson_total(alpha) / re2)]);
                return Ok(t);
            }
            let mut t = Table::new(vec![
                Column::new("theta", Dim::Pure),
                Column::new("dsigma_re2", Dim::Pure),
            ]);
            let pattern = |theta: f64| match phi {
                Some(phi) => thomson_differential(*phi, theta, alpha) / re2,
                None => thomson_differential_unpolarized(theta, alpha) / re2,
            };
            for theta in angle_grid(*theta, 0.0, std::f64::consts::PI, *samples) {
                t.push(vec![Cell::Num(theta), Cell::Num(pattern(theta))]);
            }
            Ok(t)
        }
        ScatterCommand::Rutherford { theta, q, z, m, v, born, eps, samples } => {
            let mut columns = vec![
                Column::new("theta", Dim::Pure),
                Column::new("dsigma", Dim::Area),
            ];
            if *born {
                columns.push(Column::new("dsigma_born", Dim::Area));
            }
            let mut t = Table::new(columns);
            let angles: Vec<f64> = match theta {
                Some(theta) => vec![*theta],
                None => (1..=*samples)
                    .map(|i| std::f64::consts::PI * i as f64 / *samples as f64)
                    .collect(),
            };
            for theta in angles {
                let mut row = vec![
                    Cell::Num(theta),
                    Cell::Num(classical_rutherford(theta, *q, *z, *m, *v)?),
                ];
                if *born {
                    row.push(Cell::Num(quantum_rutherford(theta, *m * *v, *eps)?));
                }
                t.push(row);
            }
            Ok(t)
        }
        ScatterCommand::FormFactor { k, a, theta, samples } => {
            let mut t = Table::new(vec![
                Column::new("theta", Dim::Pure),
                Column::new("form_factor", Dim::Pure),
                Column::new("dsigma_re2", Dim::Pure),
            ]);
            for theta in angle_grid(*theta, 0.0, std::f64::consts::PI, *samples) {
                let f = atom_form_factor(*k, theta, *a)?;
                let dsigma = f * f * thomson_differential_unpolarized(theta, alpha) / re2;
                t.push(vec![Cell::Num(theta), Cell::Num(f), Cell::Num(dsigma)]);
            }
            Ok(t)
        }
        ScatterCommand::Photo { omega, omega1, pattern, phi, samples } => {
            if *pattern {
                let mut t = Table::new(vec![
                    Column::new("theta", Dim::Pure),
                    Column::new("intensity", Dim::Pure),
                ]);
                for theta in angle_grid(None, 0.0, std::f64::consts::PI, *samples) {
                    t.push(vec![Cell::Num(theta), Cell::Num(photoeffect_pattern(theta, *phi))]);
                }
                return Ok(t);
            }
            let bound = red_bound(*omega1)?;
            let regime = match photo_regime(*omega, *omega1)? {
                PhotoRegime::BelowThreshold => "below-threshold",
                PhotoRegime::Ionizing => "ionizing",
            };
            let mut t = Table::new(vec![
                Column::new("omega", Dim::Frequency),
                Column::new("omega1", Dim::Energy),
                Column::new("red_bound", Dim::Frequency),
                Column::new("regime", Dim::Pure),
            ]);
            t.push(vec![
                Cell::Num(*omega),
                Cell::Num(*omega1),
                Cell::Num(bound),
                Cell::Text(regime.into()),
            ]);
            Ok(t)
        }
        ScatterCommand::Deflection { b, b_min, b_max, q, z, m, v, numeric, samples } => {
            let mut columns = vec![
                Column::new("b", Dim::Length),
                Column::new("theta", Dim::Pure),
            ];
            if *numeric {
                columns.push(Column::new("theta_numeric", Dim::Pure));
            }
            let mut t = Table::new(columns);
            let impacts: Vec<f64> = match b {
                Some(b) => vec![*b],
                None => (0..*samples)
                    .map(|i| {
                        b_min * (b_max / b_min).powf(i as f64 / (*samples - 1) as f64)
                    })
                    .collect(),
            };
            for b in impacts {
                let mut row = vec![
                    Cell::Num(b),
                    Cell::Num(deflection_angle(b, *q, *z, *m, *v)?),
                ];
                if *numeric {
                    row.push(Cell::Num(deflection_angle_numeric(b, *q, *z, *m, *v)?));
                }
                t.push(row);
            }
            Ok(t)
        }
    }
}

fn kepler_table(
    x0: [f64; 2],
    v0: [f64; 2],
    gamma: f64,
    t_end: f64,
    samples: usize,
    summary: bool,
) -> Result<Table, AppError> {
    let orbit = kepler_trajectory(x0, v0, gamma, t_end, samples)?;
    if summary {
        let class = match orbit.class {
            ConicClass::Ellipse => "ellipse",
            ConicClass::Parabola => "parabola",
            ConicClass::Hyperbola => "hyperbola",
        };
        let mut t = Table::new(vec![
            Column::new("energy", Dim::Energy),
            Column::new("angular_momentum", Dim::Action),
            Column::new("eccentricity", Dim::Pure),
            Column::new("class", Dim::Pure),
            Column::new("period", Dim::Time),
            Column::new("max_energy_drift", Dim::Pure),
            Column::new("max_momentum_drift", Dim::Pure),
        ]);
        t.push(vec![
            Cell::Num(orbit.energy),
            Cell::Num(orbit.angular_momentum),
            Cell::Num(orbit.eccentricity),
            Cell::Text(class.into()),
            Cell::Maybe(orbit.period),
            Cell::Num(orbit.max_energy_drift),
            Cell::Num(orbit.max_momentum_drift),
        ]);
        return Ok(t);
    }
    let mut t = Table::new(vec![
        Column::new("t", Dim::Time),
        Column::new("x", Dim::Length),
        Column::new("y", Dim::Length),
        Column::new("vx", Dim::Velocity),
        Column::new("vy", Dim::Velocity),
    ]);
    for s in &orbit.samples {
        t.push(vec![
            Cell::Num(s.t),
            Cell::Num(s.x),
            Cell::Num(s.y),
            Cell::Num(s.vx),
            Cell::Num(s.vy),
        ]);
    }
    Ok(t)
}

fn fields_table(command: &FieldsCommand, alpha: f64) -> Result<Table, AppError> {
    let c = speed_of_light(alpha);
    match command {
        FieldsCommand::PlaneWave { n, length, mode, amplitude, time } => {
            let lattice = Lattice::new(1, *n, *length)?;
            let mut field = plane_wave(&lattice, *mode, *amplitude)?;
            if *time != 0.0 {
                field = field.propagate(*time, c, None)?;
            }
            let e1 = field.e_physical(0);
            let b2 = field.b_physical(1);
            let mut t = Table::new(vec![
                Column::new("x", Dim::Length),
                Column::new("e1", Dim::Pure),
                Column::new("b2", Dim::Pure),
            ]);
            for i in 0..lattice.sites() {
                t.push(vec![
                    Cell::Num(lattice.position(i)[2]),
                    Cell::Num(e1[i]),
                    Cell::Num(b2[i]),
                ]);
            }
            Ok(t)
        }
        FieldsCommand::Packet { kind, n, length, center, sigma, k, time } => {
            let lattice = Lattice::new(1, *n, *length)?;
            let spec = PacketSpec {
                center: [0.0, 0.0, *center],
                sigma: *sigma,
                wavevector: [0.0, 0.0, *k],
            };
            let (kind_name, dispersion) = match kind {
                PacketKind::Schrodinger => ("schrodinger", DispersionKind::Schrodinger),
                PacketKind::KleinGordon => {
                    ("klein-gordon", DispersionKind::KleinGordon { c_light: c })
                }
            };
            let field = gaussian_packet(&lattice, spec)?;
            let start = field.centroid()[2];
            let moved = free_dispersion_evolve(&field, dispersion, *time);
            let end = moved.centroid()[2];
            let speed = (end - start) / time;
            let expected = dispersion.group_speed(k.abs());
            let mut t = Table::new(vec![
                Column::new("kind", Dim::Pure),
                Column::new("time", Dim::Time),
                Column::new("centroid_start", Dim::Length),
                Column::new("centroid_end", Dim::Length),
                Column::new("speed", Dim::Velocity),
                Column::new("group_speed", Dim::Velocity),
                Column::new("rel_error", Dim::Pure),
            ]);
            t.push(vec![
                Cell::Text(kind_name.into()),
                Cell::Num(*time),
                Cell::Num(start),
                Cell::Num(end),
                Cell::Num(speed),
                Cell::Num(expected),
                Cell::Num((speed - expected).abs() / expected.abs()),
            ]);
            Ok(t)
        }
        FieldsCommand::ZeemanModes { omega0, b } => {
            let modes = classical_zeeman_modes(*omega0, *b, alpha)?;
            let mut t = Table::new(vec![
                Column::new("omega_pi", Dim::Frequency),
                Column::new("omega_plus", Dim::Frequency),
                Column::new("omega_minus", Dim::Frequency),
            ]);
            t.push(vec![
                Cell::Num(modes.pi),
                Cell::Num(modes.plus),
                Cell::Num(modes.minus),
            ]);
            Ok(t)
        }
        FieldsCommand::Hertz { p0, omega, r, time, samples, total } => {
            let source = DipoleSource { amplitude: [0.0, 0.0, *p0], frequency: *omega };
            if *total {
                let mut t = Table::new(vec![
                    Column::new("time", Dim::Time),
                    Column::new("power", Dim::Power),
                ]);
                t.push(vec![
                    Cell::Num(*time),
                    Cell::Num(radiated_power(source.moment_accel(*time), c)),
                ]);
                return Ok(t);
            }
            let mut t = Table::new(vec![
                Column::new("theta", Dim::Pure),
                Column::new("dpower", Dim::Power),
            ]);
            for theta in angle_grid(None, 0.0, std::f64::consts::PI, *samples) {
                let n = [theta.sin(), 0.0, theta.cos()];
                let sample = hertz_dipole(&source, [r * n[0], r * n[1], r * n[2]], *time, c)?;
                let s = sample.poynting;
                let dpower = (s[0] * n[0] + s[1] * n[1] + s[2] * n[2]) * r * r;
                t.push(vec![Cell::Num(theta), Cell::Num(dpower)]);
            }
            Ok(t)
        }
    }
}

fn fresnel_table(
    n1: f64,
    n2: f64,
    angle: Option<f64>,
    samples: usize,
) -> Result<Table, AppError> {
    let mut t = Table::new(vec![
        Column::new("alpha", Dim::Pure),
        Column::new("R_perp", Dim::Pure),
        Column::new("T_perp", Dim::Pure),
        Column::new("R_par", Dim::Pure),
        Column::new("T_par", Dim::Pure),
    ]);
    let angles: Vec<f64> = match angle {
        Some(a) => vec![a],
        None => (0..samples)
            .map(|i| std::f64::consts::FRAC_PI_2 * i as f64 / samples as f64)
            .collect(),
    };
    for a in angles {
        let perp = fresnel(a, n1, n2, Polarization::Perpendicular)?;
        let par = fresnel(a, n1, n2, Polarization::Parallel)?;
        t.push(vec![
            Cell::Num(a),
            Cell::Num(perp.reflectance()),
            Cell::Num(perp.transmittance()),
            Cell::Num(par.reflectance()),
            Cell::Num(par.transmittance()),
        ]);
    }
    Ok(t)
}

fn response_table(command: &ResponseCommand, alpha: f64) -> Result<Table, AppError> {
    match command {
        ResponseCommand::Drude { omega0, weight, damping, density, omega_min, omega_max, samples } => {
            let set = OscillatorSet::new(
                vec![Oscillator { omega: *omega0, weight: *weight, damping: *damping }],
                *density,
            )?;
            let mut t = Table::new(vec![
                Column::new("omega", Dim::Frequency),
                Column::new("eps_re", Dim::Pure),
                Column::new("eps_im", Dim::Pure),
            ]);
            for omega in linspace(*omega_min, *omega_max, *samples) {
                let eps = drude_epsilon(omega, &set)?;
                t.push(vec![Cell::Num(omega), Cell::Num(eps.re), Cell::Num(eps.im)]);
            }
            Ok(t)
        }
        ResponseCommand::Kk { n_max, density, omega_min, omega_max, samples, convention } => {
            let lines = hydrogen_transitions(*n_max)?;
            eprintln!("tail estimate beyond n_max: {:.3e}", lines.tail_estimate);
            let convention = match convention {
                Convention::ExcitedMinusGround => FrequencyConvention::ExcitedMinusGround,
                Convention::GroundMinusExcited => FrequencyConvention::GroundMinusExcited,
            };
            let mut t = Table::new(vec![
                Column::new("omega", Dim::Frequency),
                Column::new("chi", Dim::Pure),
            ]);
            for omega in linspace(*omega_min, *omega_max, *samples) {
                let chi = kk_susceptibility(omega, &lines.transitions, *density, convention)?;
                t.push(vec![Cell::Num(omega), Cell::Num(chi)]);
            }
            Ok(t)
        }
        ResponseCommand::Transitions { n_max } => {
            let lines = hydrogen_transitions(*n_max)?;
            eprintln!("tail estimate beyond n_max: {:.3e}", lines.tail_estimate);
            let mut t = Table::new(vec![
                Column::new("n", Dim::Pure),
                Column::new("omega", Dim::Frequency),
                Column::new("dipole_sq", Dim::Area),
                Column::new("oscillator_strength", Dim::Pure),
            ]);
            for (i, line) in lines.transitions.iter().enumerate() {
                t.push(vec![
                    Cell::Int(i as i64 + 2),
                    Cell::Num(line.frequency),
                    Cell::Num(line.dipole_sq),
                    Cell::Num(2.0 * line.frequency * line.dipole_sq),
                ]);
            }
            Ok(t)
        }
        ResponseCommand::Langevin { mean_r2, density } => {
            let chi = langevin_chi(*mean_r2, *density, alpha)?;
            let mut t = Table::new(vec![
                Column::new("mean_r2", Dim::Area),
                Column::new("chi_atom", Dim::Pure),
                Column::new("chi_bulk", Dim::Pure),
            ]);
            t.push(vec![
                Cell::Num(*mean_r2),
                Cell::Num(chi.per_atom),
                Cell::Num(chi.bulk),
            ]);
            Ok(t)
        }
        ResponseCommand::Moment { m } => {
            let mut t = Table::new(vec![
                Column::new("m", Dim::Pure),
                Column::new("mu", Dim::Moment),
            ]);
            t.push(vec![Cell::Int(i64::from(*m)), Cell::Num(paramagnetic_moment(*m, alpha))]);
            Ok(t)
        }
    }
}

/// One fixed angle, or `samples` points spanning [lo, hi] inclusive.
fn angle_grid(fixed: Option<f64>, lo: f64, hi: f64, samples: usize) -> Vec<f64> {
    match fixed {
        Some(a) => vec![a],
        None => linspace(lo, hi, samples).collect(),
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(move |i| lo + step * i as f64)
}
