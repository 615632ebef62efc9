//! Measurement-error models for simulated dissimilarities.
//!
//! Each replicate draws from its own ChaCha8 stream: the key is the
//! experiment seed and the stream id is the replicate index, so replicate
//! `k` is reproducible on its own and independent of execution order.
//! Within a replicate, pairs `(i, j)` with `i < j` are visited in row-major
//! order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::edm::{EdmMatrix, SymHollowMatrix};
use crate::error::{EdmError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum NoiseModel {
    /// `x_ij = d_ij + ε`, `ε ~ N(0, σ²)`. `sigma2 = 0` is accepted as a
    /// noiseless smoke-test setting.
    Gaussian { sigma2: f64 },
    /// `x_ij ~ Gamma(shape = d_ij, rate = 1)`: mean and variance both `d_ij`.
    Gamma,
}

impl NoiseModel {
    pub fn validate(&self) -> Result<()> {
        match *self {
            NoiseModel::Gaussian { sigma2 } if !(sigma2 >= 0.0 && sigma2.is_finite()) => {
                Err(EdmError::InvalidArgument(format!("sigma2 must be finite and >= 0, got {sigma2}")))
            }
            _ => Ok(()),
        }
    }

    /// Noise standard deviation used to pick λ: `σ` for Gaussian noise,
    /// the root mean off-diagonal distance for Gamma noise.
    pub fn effective_sigma(&self, d: &EdmMatrix) -> f64 {
        match *self {
            NoiseModel::Gaussian { sigma2 } => sigma2.sqrt(),
            NoiseModel::Gamma => {
                let (sum, count) = d.base().upper().fold((0.0, 0usize), |(s, c), (_, _, v)| (s + v, c + 1));
                (sum / count as f64).sqrt()
            }
        }
    }
}

/// The RNG stream for one replicate.
pub fn replicate_rng(seed: u64, replicate: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replicate);
    rng
}

/// Draws one noisy observation of `d`.
pub fn add_noise(d: &EdmMatrix, model: NoiseModel, seed: u64, replicate: u64) -> Result<SymHollowMatrix> {
    model.validate()?;
    let n = d.n();
    let mut rng = replicate_rng(seed, replicate);
    let mut x = d.as_matrix().clone();
    match model {
        NoiseModel::Gaussian { sigma2 } => {
            let sigma = sigma2.sqrt();
            for i in 0..n {
                for j in (i + 1)..n {
                    let z: f64 = StandardNormal.sample(&mut rng);
                    let v = x[(i, j)] + sigma * z;
                    x[(i, j)] = v;
                    x[(j, i)] = v;
                }
            }
        }
        NoiseModel::Gamma => {
            if let Some((i, j, v)) = d.base().upper().find(|&(_, _, v)| v <= 0.0) {
                return Err(EdmError::InvalidArgument(format!(
                    "gamma noise needs positive distances, d[{i}][{j}] = {v}"
                )));
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    let g = Gamma::new(x[(i, j)], 1.0)
                        .map_err(|e| EdmError::InvalidArgument(format!("gamma shape {}: {e}", x[(i, j)])))?;
                    let v = g.sample(&mut rng);
                    x[(i, j)] = v;
                    x[(j, i)] = v;
                }
            }
        }
    }
    SymHollowMatrix::new(x)
}
