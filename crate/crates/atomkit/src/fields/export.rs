use std::io::Write;

use super::lattice::Lattice;
use super::FieldError;

/// Metadata accompanying a raw snapshot: enough to reconstruct the lattice
/// and name the flat arrays that follow in the data stream.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct RawHeader {
    pub dims: u8,
    pub points_per_axis: usize,
    pub length: f64,
    pub components: Vec<String>,
}

fn io_failed(err: std::io::Error) -> FieldError {
    FieldError::WriteFailed {
        reason: err.to_string(),
    }
}

/// Write lattice samples as CSV: coordinate columns first, then one column
/// per named component, every number with 17 significant digits.
pub fn write_component_csv<W: Write>(
    out: &mut W,
    lattice: &Lattice,
    components: &[(&str, &[f64])],
) -> Result<(), FieldError> {
    for (_, values) in components {
        lattice.check_len(values.len())?;
    }
    let coord_names: &[&str] = if lattice.dims() == 1 {
        &["x"]
    } else {
        &["x", "y", "z"]
    };
    let mut header = coord_names.join(",");
    for (name, _) in components {
        header.push(',');
        header.push_str(name);
    }
    writeln!(out, "{header}").map_err(io_failed)?;
    for i in 0..lattice.sites() {
        let pos = lattice.position(i);
        let mut row = String::new();
        if lattice.dims() == 1 {
            row.push_str(&format!("{:.16e}", pos[2]));
        } else {
            row.push_str(&format!("{:.16e},{:.16e},{:.16e}", pos[0], pos[1], pos[2]));
        }
        for (_, values) in components {
            row.push_str(&format!(",{:.16e}", values[i]));
        }
        writeln!(out, "{row}").map_err(io_failed)?;
    }
    Ok(())
}

/// Write components as concatenated little-endian f64 arrays plus a JSON
/// header describing the lattice and the array order.
pub fn write_raw_with_header<W: Write, H: Write>(
    data_out: &mut W,
    header_out: &mut H,
    lattice: &Lattice,
    components: &[(&str, &[f64])],
) -> Result<RawHeader, FieldError> {
    for (_, values) in components {
        lattice.check_len(values.len())?;
    }
    let header = RawHeader {
        dims: lattice.dims(),
        points_per_axis: lattice.points_per_axis(),
        length: lattice.length(),
        components: components.iter().map(|(n, _)| (*n).to_string()).collect(),
    };
    serde_json::to_writer(&mut *header_out, &header).map_err(|e| FieldError::WriteFailed {
        reason: e.to_string(),
    })?;
    header_out.write_all(b"\n").map_err(io_failed)?;
    for (_, values) in components {
        for v in *values {
            data_out.write_all(&v.to_le_bytes()).map_err(io_failed)?;
        }
    }
    Ok(header)
}
