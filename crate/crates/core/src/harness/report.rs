//! Serializing a [`StressReport`].

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use super::experiment::StressReport;
use super::io::{fmt_f64, write_text};
use super::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown report format '{other}'")),
        }
    }
}

/// Pretty-printed JSON. Floats use the shortest representation that reads
/// back to the same bits.
pub fn to_json(report: &StressReport) -> serde_json::Result<String> {
    serde_json::to_string_pretty(report)
}

/// One row per (method, replicate). A non-converged shrinkage replicate has
/// an empty stress field.
pub fn to_csv(report: &StressReport) -> String {
    let mut out = String::from("method,replicate,stress,cycles,converged\n");
    for r in &report.replicates {
        let s = r.shrinkage_stress.map(fmt_f64).unwrap_or_default();
        let _ = writeln!(out, "shrinkage,{},{},{},{}", r.replicate, s, r.cycles, r.converged);
    }
    for r in &report.replicates {
        let _ = writeln!(out, "classical_mds,{},{},0,true", r.replicate, fmt_f64(r.mds_stress));
    }
    out
}

pub fn report_write(report: &StressReport, path: impl AsRef<Path>, format: ReportFormat) -> Result<()> {
    let path = path.as_ref();
    let text = match format {
        ReportFormat::Json => {
            to_json(report).map_err(|source| HarnessError::Json { path: path.to_path_buf(), source })? + "\n"
        }
        ReportFormat::Csv => to_csv(report),
    };
    write_text(path, &text)
}
