//! Data ingestion, noise generation, replicated experiments and reporting.

use std::path::PathBuf;

use thiserror::Error;

use crate::error::EdmError;

pub mod experiment;
pub mod geometry;
pub mod io;
pub mod noise;
pub mod report;

pub use experiment::{run_experiment, run_replicate, LambdaChoice, ReplicateRecord, SimConfig, StressReport};
pub use geometry::Helix;
pub use io::{load_coords, read_matrix_csv, read_sym_hollow_csv, write_matrix_csv, CoordFormat};
pub use noise::{add_noise, NoiseModel};
pub use report::{report_write, ReportFormat};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{}:{line}: {msg}", path.display())]
    Parse { path: PathBuf, line: usize, msg: String },

    #[error("{}: {source}", path.display())]
    Json { path: PathBuf, source: serde_json::Error },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Edm(#[from] EdmError),
}

pub type Result<T> = std::result::Result<T, HarnessError>;
