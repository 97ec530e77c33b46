//! Columnar output shared by every subcommand.
//!
//! A table owns its schema: each column carries a physical dimension, and
//! the emitter applies the unit conversion and the matching column-name
//! suffix at print time. Values are stored in atomic units throughout;
//! nothing upstream of `emit` knows which unit system was requested.
//!
//! Floats print as `{:.16e}` (17 significant digits), which round-trips
//! f64 exactly and is locale-independent, so identical flags produce
//! byte-identical output.

use clap::ValueEnum;
use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitSystem {
    /// Hartree atomic units.
    Au,
    Si,
    Gaussian,
}

/// Physical dimension of a column, in the coarse sense needed for output
/// conversion. `Pure` covers angles, ratios, counts and anything already
/// reported as a dimensionless multiple of a named scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim {
    Pure,
    Energy,
    Frequency,
    Time,
    Length,
    Velocity,
    Area,
    Action,
    Power,
    /// Magnetic moment.
    Moment,
}

// CODATA 2018 values of the atomic units, SI first, then the Gaussian
// (cgs) equivalents.
const BOHR_M: f64 = 5.291_772_109_03e-11;
const BOHR_CM: f64 = 5.291_772_109_03e-9;
const HARTREE_J: f64 = 4.359_744_722_207_1e-18;
const HARTREE_ERG: f64 = 4.359_744_722_207_1e-11;
const TIME_S: f64 = 2.418_884_326_585_7e-17;
const FREQ_PER_S: f64 = 4.134_137_333_518e16;
const VELOCITY_M_S: f64 = 2.187_691_263_64e6;
const VELOCITY_CM_S: f64 = 2.187_691_263_64e8;
const ACTION_J_S: f64 = 1.054_571_817e-34;
const ACTION_ERG_S: f64 = 1.054_571_817e-27;
const MOMENT_J_T: f64 = 1.854_802_015_66e-23;
const MOMENT_ERG_G: f64 = 1.854_802_015_66e-20;

impl Dim {
    fn factor(self, units: UnitSystem) -> f64 {
        use UnitSystem::*;
        match units {
            Au => 1.0,
            Si => match self {
                Dim::Pure => 1.0,
                Dim::Energy => HARTREE_J,
                Dim::Frequency => FREQ_PER_S,
                Dim::Time => TIME_S,
                Dim::Length => BOHR_M,
                Dim::Velocity => VELOCITY_M_S,
                Dim::Area => BOHR_M * BOHR_M,
                Dim::Action => ACTION_J_S,
                Dim::Power => HARTREE_J / TIME_S,
                Dim::Moment => MOMENT_J_T,
            },
            Gaussian => match self {
                Dim::Pure => 1.0,
                Dim::Energy => HARTREE_ERG,
                Dim::Frequency => FREQ_PER_S,
                Dim::Time => TIME_S,
                Dim::Length => BOHR_CM,
                Dim::Velocity => VELOCITY_CM_S,
                Dim::Area => BOHR_CM * BOHR_CM,
                Dim::Action => ACTION_ERG_S,
                Dim::Power => HARTREE_ERG / TIME_S,
                Dim::Moment => MOMENT_ERG_G,
            },
        }
    }

    fn suffix(self, units: UnitSystem) -> Option<&'static str> {
        use UnitSystem::*;
        Some(match (self, units) {
            (Dim::Pure, _) => return None,
            (Dim::Energy, Au) => "hartree",
            (Dim::Energy, Si) => "J",
            (Dim::Energy, Gaussian) => "erg",
            (Dim::Frequency, Au) => "au",
            (Dim::Frequency, Si | Gaussian) => "rad_per_s",
            (Dim::Time, Au) => "au",
            (Dim::Time, Si | Gaussian) => "s",
            (Dim::Length, Au) => "bohr",
            (Dim::Length, Si) => "m",
            (Dim::Length, Gaussian) => "cm",
            (Dim::Velocity, Au) => "au",
            (Dim::Velocity, Si) => "m_per_s",
            (Dim::Velocity, Gaussian) => "cm_per_s",
            (Dim::Area, Au) => "bohr2",
            (Dim::Area, Si) => "m2",
            (Dim::Area, Gaussian) => "cm2",
            (Dim::Action, Au) => "au",
            (Dim::Action, Si) => "J_s",
            (Dim::Action, Gaussian) => "erg_s",
            (Dim::Power, Au) => "au",
            (Dim::Power, Si) => "W",
            (Dim::Power, Gaussian) => "erg_per_s",
            (Dim::Moment, Au) => "au",
            (Dim::Moment, Si) => "J_per_T",
            (Dim::Moment, Gaussian) => "erg_per_G",
        })
    }
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Num(f64),
    /// A float that may be absent (CSV: empty field, JSON: null).
    Maybe(Option<f64>),
    Text(String),
    Bool(bool),
}

pub struct Column {
    pub name: &'static str,
    pub dim: Dim,
}

impl Column {
    pub fn new(name: &'static str, dim: Dim) -> Self {
        Column { name, dim }
    }

    fn header(&self, units: UnitSystem) -> String {
        match self.dim.suffix(units) {
            Some(s) => format!("{}_{}", self.name, s),
            None => self.name.to_string(),
        }
    }
}

pub struct Table {
    columns: Vec<Column>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<Column>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match schema");
        self.rows.push(row);
    }

    pub fn emit<W: Write>(&self, out: &mut W, format: Format, units: UnitSystem) -> io::Result<()> {
        match format {
            Format::Csv => self.emit_csv(out, units),
            Format::Json => self.emit_json(out, units),
        }
    }

    fn emit_csv<W: Write>(&self, out: &mut W, units: UnitSystem) -> io::Result<()> {
        let header: Vec<String> = self.columns.iter().map(|c| c.header(units)).collect();
        writeln!(out, "{}", header.join(","))?;
        for row in &self.rows {
            let mut line = String::new();
            for (i, (cell, col)) in row.iter().zip(&self.columns).enumerate() {
                if i > 0 {
                    line.push(',');
                }
                match cell {
                    Cell::Int(v) => line.push_str(&v.to_string()),
                    Cell::Num(v) => line.push_str(&format!("{:.16e}", v * col.dim.factor(units))),
                    Cell::Maybe(Some(v)) => {
                        line.push_str(&format!("{:.16e}", v * col.dim.factor(units)))
                    }
                    Cell::Maybe(None) => {}
                    Cell::Text(s) => line.push_str(s),
                    Cell::Bool(b) => line.push_str(if *b { "true" } else { "false" }),
                }
            }
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    fn emit_json<W: Write>(&self, out: &mut W, units: UnitSystem) -> io::Result<()> {
        let headers: Vec<String> = self.columns.iter().map(|c| c.header(units)).collect();
        writeln!(out, "[")?;
        for (r, row) in self.rows.iter().enumerate() {
            let mut line = String::from("{");
            for (i, (cell, col)) in row.iter().zip(&self.columns).enumerate() {
                if i > 0 {
                    line.push(',');
                }
                line.push_str(&json_string(&headers[i]));
                line.push(':');
                match cell {
                    Cell::Int(v) => line.push_str(&v.to_string()),
                    Cell::Num(v) => line.push_str(&format!("{:.16e}", v * col.dim.factor(units))),
                    Cell::Maybe(Some(v)) => {
                        line.push_str(&format!("{:.16e}", v * col.dim.factor(units)))
                    }
                    Cell::Maybe(None) => line.push_str("null"),
                    Cell::Text(s) => line.push_str(&json_string(s)),
                    Cell::Bool(b) => line.push_str(if *b { "true" } else { "false" }),
                }
            }
            line.push('}');
            if r + 1 < self.rows.len() {
                line.push(',');
            }
            writeln!(out, "{line}")?;
        }
        writeln!(out, "]")
    }
}

fn json_string(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for ch in s.chars() {
        match ch {
            '"' => q.push_str("\\\""),
            '\\' => q.push_str("\\\\"),
            c if (c as u32) < 0x20 => q.push_str(&format!("\\u{:04x}", c as u32)),
            c => q.push(c),
        }
    }
    q.push('"');
    q
}
