//! Replicated comparison of the shrinkage estimator against classical MDS.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::noise::{add_noise, NoiseModel};
use super::{HarnessError, Result};
use crate::cone::DykstraConfig;
use crate::edm::{kruskal_stress, EdmMatrix};
use crate::error::EdmError;
use crate::shrinkage::{classical_mds, default_lambda, distance_shrinkage};

/// How the tuning parameter is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum LambdaChoice {
    /// Use this λ directly.
    Lambda(f64),
    /// `λ = 4σ(√n + 1)` for the given σ.
    Sigma(f64),
    /// `λ = 4σ(√n + 1)` with σ taken from the noise model.
    FromNoise,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub reps: usize,
    pub seed: u64,
    pub noise: NoiseModel,
    pub lambda: LambdaChoice,
    pub rank_r: usize,
    pub dykstra: DykstraConfig,
}

impl SimConfig {
    pub fn new(reps: usize, seed: u64, noise: NoiseModel) -> Self {
        SimConfig { reps, seed, noise, lambda: LambdaChoice::FromNoise, rank_r: 3, dykstra: DykstraConfig::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.reps < 1 {
            return Err(HarnessError::Config("reps must be at least 1".into()));
        }
        self.noise.validate()?;
        self.dykstra.validate()?;
        match self.lambda {
            LambdaChoice::Lambda(v) | LambdaChoice::Sigma(v) if !(v >= 0.0 && v.is_finite()) => {
                Err(HarnessError::Config(format!("lambda/sigma must be finite and >= 0, got {v}")))
            }
            _ => Ok(()),
        }
    }

    /// The λ used for a truth matrix with `n` points.
    pub fn resolve_lambda(&self, truth: &EdmMatrix) -> f64 {
        let n = truth.n();
        match self.lambda {
            LambdaChoice::Lambda(l) => l,
            LambdaChoice::Sigma(s) => default_lambda(n, s),
            LambdaChoice::FromNoise => default_lambda(n, self.noise.effective_sigma(truth)),
        }
    }
}

/// Outcome of one replicate. `shrinkage_stress` is `None` when the
/// projection did not converge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReplicateRecord {
    pub replicate: u64,
    pub shrinkage_stress: Option<f64>,
    pub mds_stress: f64,
    pub shrinkage_dim: Option<usize>,
    pub cycles: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodSummary {
    pub mean: Option<f64>,
    /// Sample standard deviation over `√count`.
    pub std_error: Option<f64>,
    pub count: usize,
    pub values: Vec<f64>,
}

impl MethodSummary {
    fn from_values(values: Vec<f64>) -> Self {
        let count = values.len();
        let mean = (count > 0).then(|| values.iter().sum::<f64>() / count as f64);
        let std_error = mean.map(|m| {
            if count < 2 {
                0.0
            } else {
                let var = values.iter().map(|v| (v - m).powi(2)).sum::<f64>() / (count - 1) as f64;
                (var / count as f64).sqrt()
            }
        });
        MethodSummary { mean, std_error, count, values }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceSummary {
    pub converged: usize,
    pub not_converged: usize,
    pub mean_cycles: f64,
    pub max_cycles: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StressReport {
    pub n: usize,
    pub config: SimConfig,
    pub lambda: f64,
    pub shrinkage: MethodSummary,
    pub classical_mds: MethodSummary,
    pub convergence: ConvergenceSummary,
    pub replicates: Vec<ReplicateRecord>,
}

impl StressReport {
    /// Mean MDS stress over mean shrinkage stress.
    pub fn stress_ratio(&self) -> Option<f64> {
        Some(self.classical_mds.mean? / self.shrinkage.mean?)
    }
}

/// Runs replicate `replicate` on its own; the result does not depend on
/// which other replicates run or in what order.
pub fn run_replicate(truth: &EdmMatrix, cfg: &SimConfig, lambda: f64, replicate: u64) -> Result<ReplicateRecord> {
    let x = add_noise(truth, cfg.noise, cfg.seed, replicate)?;
    let mds = classical_mds(&x, cfg.rank_r)?;
    let mds_stress = kruskal_stress(mds.d_hat_r.base(), truth.base())?;
    match distance_shrinkage(&x, lambda, &cfg.dykstra) {
        Ok(fit) => Ok(ReplicateRecord {
            replicate,
            shrinkage_stress: Some(kruskal_stress(fit.d_hat.base(), truth.base())?),
            mds_stress,
            shrinkage_dim: Some(fit.d_hat.embed_dim()),
            cycles: fit.diagnostics.cycles,
            converged: true,
        }),
        Err(EdmError::NotConverged(diag)) => {
            log::warn!("replicate {replicate}: projection did not converge after {} cycles", diag.cycles);
            Ok(ReplicateRecord {
                replicate,
                shrinkage_stress: None,
                mds_stress,
                shrinkage_dim: None,
                cycles: diag.cycles,
                converged: false,
            })
        }
        Err(e) => Err(e.into()),
    }
}

/// Runs all replicates (in parallel) and aggregates them in replicate order.
pub fn run_experiment(truth: &EdmMatrix, cfg: &SimConfig) -> Result<StressReport> {
    cfg.validate()?;
    let lambda = cfg.resolve_lambda(truth);
    let replicates = (0..cfg.reps as u64)
        .into_par_iter()
        .map(|k| run_replicate(truth, cfg, lambda, k))
        .collect::<Result<Vec<_>>>()?;

    let shrinkage = MethodSummary::from_values(replicates.iter().filter_map(|r| r.shrinkage_stress).collect());
    // MDS always succeeds, but only replicates with both fits are compared.
    let classical_mds =
        MethodSummary::from_values(replicates.iter().filter(|r| r.converged).map(|r| r.mds_stress).collect());
    let converged = replicates.iter().filter(|r| r.converged).count();
    let convergence = ConvergenceSummary {
        converged,
        not_converged: replicates.len() - converged,
        mean_cycles: replicates.iter().map(|r| r.cycles as f64).sum::<f64>() / replicates.len() as f64,
        max_cycles: replicates.iter().map(|r| r.cycles).max().unwrap_or(0),
    };
    Ok(StressReport { n: truth.n(), config: cfg.clone(), lambda, shrinkage, classical_mds, convergence, replicates })
}
