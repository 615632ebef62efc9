//! The distance-shrinkage estimator and its rank-truncated companion.
//!
//! Fitting the trace-penalized kernel estimate
//!
//! ```text
//! min_{M ∈ EDM}  ½‖X − M‖²_F + λ·trace(−JMJ/2)
//! ```
//!
//! is the same as subtracting `η = λ/(2n)` from every observed off-diagonal
//! dissimilarity and projecting the result onto the EDM cone.

use nalgebra::DMatrix;

use crate::cone::{project_edm_cone, DykstraConfig, ProjectionDiagnostics};
use crate::edm::{
    coords_from_eigen, schoenberg_r, tau_map, EdmMatrix, Embedding, MinTraceKernel, SymHollowMatrix, DEFAULT_TOL,
};
use crate::error::{EdmError, Result};
use crate::linalg::{gram_of, SymEigen};

/// Result of [`distance_shrinkage`].
#[derive(Debug, Clone)]
pub struct ShrinkageFit {
    pub d_hat: EdmMatrix,
    pub k_hat: MinTraceKernel,
    pub lambda: f64,
    /// Per-entry shrinkage, `λ/(2n)`.
    pub eta: f64,
    pub diagnostics: ProjectionDiagnostics,
}

/// A rank-`r` EDM together with coordinates realizing it.
#[derive(Debug, Clone)]
pub struct RankTruncatedFit {
    pub r: usize,
    pub d_hat_r: EdmMatrix,
    pub embedding: Embedding,
}

/// Shrinks every off-diagonal entry of `x` by `λ/(2n)` and projects onto
/// the EDM cone.
pub fn distance_shrinkage(x: &SymHollowMatrix, lambda: f64, cfg: &DykstraConfig) -> Result<ShrinkageFit> {
    if !(lambda >= 0.0 && lambda.is_finite()) {
        return Err(EdmError::InvalidArgument(format!("lambda must be finite and >= 0, got {lambda}")));
    }
    let eta = lambda / (2.0 * x.n() as f64);
    let shrunk = x.shrink(eta);
    let (d_hat, diagnostics) = project_edm_cone(shrunk.as_matrix(), cfg)?;
    let k_hat = schoenberg_r(&d_hat)?;
    Ok(ShrinkageFit { d_hat, k_hat, lambda, eta, diagnostics })
}

/// `½‖X − M‖²_F + λ·trace(−JMJ/2)`.
pub fn objective_value(m: &EdmMatrix, x: &SymHollowMatrix, lambda: f64) -> Result<f64> {
    if m.n() != x.n() {
        return Err(EdmError::DimensionMismatch { left: m.n(), right: x.n() });
    }
    let fit = 0.5 * (x.as_matrix() - m.as_matrix()).norm_squared();
    // For hollow M, trace(−JMJ/2) = 1ᵀM1/(2n).
    let penalty = m.as_matrix().sum() / (2.0 * m.n() as f64);
    Ok(fit + lambda * penalty)
}

/// `4σ(√n + 1)`, the tuning level at which the risk bound holds.
pub fn default_lambda(n: usize, sigma: f64) -> f64 {
    4.0 * sigma * ((n as f64).sqrt() + 1.0)
}

/// `36·n·σ²·(r + 1)`, the high-probability bound on `‖D̂ − D‖²_F`.
pub fn oracle_bound(n: usize, sigma: f64, r: usize) -> f64 {
    36.0 * n as f64 * sigma * sigma * (r as f64 + 1.0)
}

fn check_rank(n: usize, r: usize) -> Result<()> {
    if r < 1 || r + 1 > n {
        return Err(EdmError::InvalidArgument(format!("rank {r} outside 1..={}", n - 1)));
    }
    Ok(())
}

/// Keeps the top `r` eigenpairs of a symmetric matrix (negatives clipped)
/// and returns the implied EDM and coordinates.
fn truncate_kernel(k: &DMatrix<f64>, r: usize) -> Result<RankTruncatedFit> {
    let eig = SymEigen::new(k);
    let k_r = eig.reconstruct_with(|i, g| if i < r { g.max(0.0) } else { 0.0 });
    let d_hat_r = EdmMatrix::certify(SymHollowMatrix::new(tau_map(&k_r))?, DEFAULT_TOL)?;
    let embedding = coords_from_eigen(&eig, r);
    Ok(RankTruncatedFit { r, d_hat_r, embedding })
}

/// The best rank-`r` approximation of `D̂` in the `‖J(·)J‖_F` sense.
pub fn truncate_rank(fit: &ShrinkageFit, r: usize) -> Result<RankTruncatedFit> {
    check_rank(fit.d_hat.n(), r)?;
    truncate_kernel(fit.k_hat.as_matrix(), r)
}

/// Classical (Torgerson) multidimensional scaling at rank `r`.
///
/// Negative eigenvalues of `−JXJ/2` are clipped to zero, so any symmetric
/// hollow input is accepted.
pub fn classical_mds(x: &SymHollowMatrix, r: usize) -> Result<RankTruncatedFit> {
    check_rank(x.n(), r)?;
    truncate_kernel(&gram_of(x.as_matrix()), r)
}
