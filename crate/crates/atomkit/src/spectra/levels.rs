use serde::Serialize;

use super::{validate_nl, SpectraError};

/// A labeled bound-state energy. `l` and `m` stay `None` for quantities that
/// depend only on n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Level {
    pub n: u32,
    pub l: Option<u32>,
    pub m: Option<i32>,
    pub energy: f64,
}

/// One emission line: angular frequency and the principal numbers it links.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralLine {
    pub omega: f64,
    pub n_upper: u32,
    pub n_lower: u32,
}

/// E_n = -1/(2 n^2), the nonrelativistic hydrogen level in hartrees.
pub fn schrodinger_level(n: u32) -> Result<f64, SpectraError> {
    if n == 0 {
        return Err(SpectraError::ZeroPrincipal);
    }
    let nf = f64::from(n);
    Ok(-0.5 / (nf * nf))
}

/// Number of independent (l, m) states at level n, spin not counted.
pub fn degeneracy(n: u32) -> Result<u64, SpectraError> {
    if n == 0 {
        return Err(SpectraError::ZeroPrincipal);
    }
    Ok(u64::from(n) * u64::from(n))
}

/// Emission lines into the level `n_lower` from upper levels up to
/// `n_upper_max`, in increasing frequency.
pub fn series_lines(n_lower: u32, n_upper_max: u32) -> Result<Vec<SpectralLine>, SpectraError> {
    validate_nl(n_lower, 0)?;
    if n_upper_max <= n_lower {
        return Err(SpectraError::EmptySeries { n_lower, n_upper_max });
    }
    let e_low = schrodinger_level(n_lower)?;
    (n_lower + 1..=n_upper_max)
        .map(|n_upper| {
            Ok(SpectralLine {
                omega: schrodinger_level(n_upper)? - e_low,
                n_upper,
                n_lower,
            })
        })
        .collect()
}

/// Conventional name of the series ending on `n_lower`, when it has one.
pub fn series_name(n_lower: u32) -> Option<&'static str> {
    match n_lower {
        1 => Some("Lyman"),
        2 => Some("Balmer"),
        3 => Some("Paschen"),
        4 => Some("Brackett"),
        5 => Some("Pfund"),
        _ => None,
    }
}
