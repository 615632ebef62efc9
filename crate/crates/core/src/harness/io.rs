//! Text formats: square matrices as CSV, point sets as CSV/XYZ/PDB.
//!
//! Matrix files hold one row per line, comma separated, with at most one
//! leading header line starting with `#`. Dissimilarity matrices are
//! squared distances.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use nalgebra::DMatrix;

use super::{HarnessError, Result};
use crate::edm::{SymHollowMatrix, LOAD_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordFormat {
    Csv,
    Xyz,
    Pdb,
}

impl FromStr for CoordFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(CoordFormat::Csv),
            "xyz" => Ok(CoordFormat::Xyz),
            "pdb" => Ok(CoordFormat::Pdb),
            other => Err(format!("unknown coordinate format '{other}'")),
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.to_path_buf(), source })
}

fn parse_err(path: &Path, line: usize, msg: impl Into<String>) -> HarnessError {
    HarnessError::Parse { path: path.to_path_buf(), line, msg: msg.into() }
}

fn parse_float(path: &Path, line: usize, tok: &str) -> Result<f64> {
    let tok = tok.trim();
    let v: f64 = tok.parse().map_err(|_| parse_err(path, line, format!("not a number: '{tok}'")))?;
    if !v.is_finite() {
        return Err(parse_err(path, line, format!("non-finite value '{tok}'")));
    }
    Ok(v)
}

/// Parses comma-separated rows; `#` lines are allowed only before the data.
fn parse_csv_rows(text: &str, path: &Path) -> Result<Vec<Vec<f64>>> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut headers = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            headers += 1;
            if headers > 1 || !rows.is_empty() {
                return Err(parse_err(path, lineno, "only a single leading '#' header line is allowed"));
            }
            continue;
        }
        let row = line.split(',').map(|t| parse_float(path, lineno, t)).collect::<Result<Vec<_>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(parse_err(path, lineno, format!("expected {} columns, found {}", first.len(), row.len())));
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

fn to_matrix(rows: &[Vec<f64>]) -> DMatrix<f64> {
    let nc = rows.first().map_or(0, Vec::len);
    DMatrix::from_fn(rows.len(), nc, |i, j| rows[i][j])
}

pub fn parse_matrix_csv(text: &str, path: &Path) -> Result<DMatrix<f64>> {
    let rows = parse_csv_rows(text, path)?;
    let m = to_matrix(&rows);
    if m.nrows() != m.ncols() {
        return Err(parse_err(path, 0, format!("matrix is {}x{}, expected square", m.nrows(), m.ncols())));
    }
    Ok(m)
}

/// Reads a square matrix without further validation.
pub fn read_matrix_csv(path: impl AsRef<Path>) -> Result<DMatrix<f64>> {
    let path = path.as_ref();
    parse_matrix_csv(&read_text(path)?, path)
}

/// Reads a dissimilarity matrix, symmetrizing and hollowing within an
/// absolute tolerance of `1e-9`.
pub fn read_sym_hollow_csv(path: impl AsRef<Path>) -> Result<SymHollowMatrix> {
    let m = read_matrix_csv(path)?;
    Ok(SymHollowMatrix::with_tolerance(m, LOAD_TOL)?)
}

/// Formats a float with 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn matrix_to_csv(m: &DMatrix<f64>, header: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(h) = header {
        let _ = writeln!(out, "# {h}");
    }
    for i in 0..m.nrows() {
        let row: Vec<String> = m.row(i).iter().map(|&v| fmt_f64(v)).collect();
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| HarnessError::Io { path: path.to_path_buf(), source })
}

pub fn write_matrix_csv(path: impl AsRef<Path>, m: &DMatrix<f64>, header: Option<&str>) -> Result<()> {
    write_text(path.as_ref(), &matrix_to_csv(m, header))
}

/// Loads point coordinates (not centered).
///
/// * `csv`: one point per line, any number of columns.
/// * `xyz`: atom count, comment line, then `symbol x y z` lines.
/// * `pdb`: `ATOM` records of the first model, coordinates from the fixed
///   columns 31–38, 39–46 and 47–54. `HETATM` records are skipped.
pub fn load_coords(path: impl AsRef<Path>, format: CoordFormat) -> Result<DMatrix<f64>> {
    let path = path.as_ref();
    let text = read_text(path)?;
    parse_coords(&text, path, format)
}

pub fn parse_coords(text: &str, path: &Path, format: CoordFormat) -> Result<DMatrix<f64>> {
    let rows = match format {
        CoordFormat::Csv => parse_csv_rows(text, path)?,
        CoordFormat::Xyz => parse_xyz(text, path)?,
        CoordFormat::Pdb => parse_pdb(text, path)?,
    };
    if rows.len() < 2 {
        return Err(parse_err(path, 0, format!("need at least 2 points, found {}", rows.len())));
    }
    Ok(to_matrix(&rows))
}

fn parse_xyz(text: &str, path: &Path) -> Result<Vec<Vec<f64>>> {
    let mut lines = text.lines().enumerate();
    let (_, first) = lines.next().ok_or_else(|| parse_err(path, 1, "empty file"))?;
    let count: usize = first
        .trim()
        .parse()
        .map_err(|_| parse_err(path, 1, format!("expected atom count, found '{}'", first.trim())))?;
    lines.next();
    let mut rows = Vec::with_capacity(count);
    for (idx, raw) in lines {
        if rows.len() == count {
            break;
        }
        let lineno = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        if toks.len() < 4 {
            return Err(parse_err(path, lineno, "expected 'symbol x y z'"));
        }
        let row = toks[1..4].iter().map(|t| parse_float(path, lineno, t)).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.len() != count {
        return Err(parse_err(path, 1, format!("header declares {count} atoms, found {}", rows.len())));
    }
    Ok(rows)
}

fn parse_pdb(text: &str, path: &Path) -> Result<Vec<Vec<f64>>> {
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.starts_with("ENDMDL") {
            break;
        }
        if !line.starts_with("ATOM") {
            continue;
        }
        let field = |lo: usize, hi: usize| -> Result<f64> {
            let tok = line
                .get(lo..hi)
                .ok_or_else(|| parse_err(path, lineno, format!("ATOM record too short for columns {}-{hi}", lo + 1)))?;
            parse_float(path, lineno, tok)
        };
        rows.push(vec![field(30, 38)?, field(38, 46)?, field(46, 54)?]);
    }
    Ok(rows)
}

/// Path with a suffix appended to the file stem: `out/fit` + `dhat.csv` →
/// `out/fit_dhat.csv`.
pub fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.file_name().map(|s| s.to_os_string()).unwrap_or_default();
    name.push("_");
    name.push(suffix);
    prefix.with_file_name(name)
}
