//! Dense symmetric helpers shared by the transforms and the cone projection.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

/// Eigendecomposition of a symmetric matrix with a deterministic layout.
///
/// Eigenvalues are sorted in descending order (stable, so ties keep the
/// solver's column order) and each eigenvector is unit-norm with its first
/// non-negligible component positive.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: DVector<f64>,
    pub vectors: DMatrix<f64>,
}

impl SymEigen {
    pub fn new(m: &DMatrix<f64>) -> Self {
        let n = m.nrows();
        let eig = SymmetricEigen::new(m.clone());

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));

        let mut values = DVector::zeros(n);
        let mut vectors = DMatrix::zeros(n, n);
        for (dst, &src) in order.iter().enumerate() {
            values[dst] = eig.eigenvalues[src];
            let mut col = eig.eigenvectors.column(src).into_owned();
            let norm = col.norm();
            if norm > 0.0 {
                col /= norm;
            }
            let pivot = col.iter().copied().find(|x| x.abs() > 1e-12);
            if matches!(pivot, Some(p) if p < 0.0) {
                col.neg_mut();
            }
            vectors.set_column(dst, &col);
        }
        SymEigen { values, vectors }
    }

    pub fn max(&self) -> f64 {
        self.values.get(0).copied().unwrap_or(0.0)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().last().unwrap_or(0.0)
    }

    /// Rebuilds `U diag(f(γ)) Uᵀ`, skipping terms where `f` is zero.
    pub fn reconstruct_with(&self, f: impl Fn(usize, f64) -> f64) -> DMatrix<f64> {
        let n = self.vectors.nrows();
        let keep: Vec<(usize, f64)> =
            (0..self.values.len()).map(|k| (k, f(k, self.values[k]))).filter(|&(_, w)| w != 0.0).collect();
        let mut basis = DMatrix::zeros(n, keep.len());
        let mut scaled = DMatrix::zeros(n, keep.len());
        for (c, &(k, w)) in keep.iter().enumerate() {
            let col = self.vectors.column(k);
            basis.set_column(c, &col);
            scaled.set_column(c, &(col * w));
        }
        let mut out = &scaled * basis.transpose();
        symmetrize(&mut out);
        out
    }
}

/// Largest eigenvalue of a symmetric matrix, without eigenvectors.
pub fn max_eigenvalue(m: &DMatrix<f64>) -> f64 {
    m.clone().symmetric_eigenvalues().iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Overwrites `m` with `(m + mᵀ)/2`.
pub fn symmetrize(m: &mut DMatrix<f64>) {
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = 0.5 * (m[(i, j)] + m[(j, i)]);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
}

/// `J·m·J` with `J = I − 11ᵀ/n`, computed by double centering in O(n²).
pub fn double_center(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    let nf = n as f64;
    let row_means: Vec<f64> = (0..n).map(|i| m.row(i).sum() / nf).collect();
    let col_means: Vec<f64> = (0..n).map(|j| m.column(j).sum() / nf).collect();
    let grand = row_means.iter().sum::<f64>() / nf;
    DMatrix::from_fn(n, n, |i, j| m[(i, j)] - row_means[i] - col_means[j] + grand)
}

/// `−J·m·J/2`, the classical Gram transform of a dissimilarity matrix.
pub fn gram_of(m: &DMatrix<f64>) -> DMatrix<f64> {
    let mut k = double_center(m);
    k.scale_mut(-0.5);
    symmetrize(&mut k);
    k
}

/// The centering matrix `I − 11ᵀ/n`.
pub fn centering(n: usize) -> DMatrix<f64> {
    let off = 1.0 / n as f64;
    DMatrix::from_fn(n, n, |i, j| if i == j { 1.0 - off } else { -off })
}

/// Frobenius inner product `trace(aᵀb)`.
pub fn frob_dot(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// Largest |eigenvalue| of a symmetric matrix by power iteration.
///
/// Starts from the normalized all-ones vector; stops when the Rayleigh
/// estimate changes by at most `tol` (relative) or after `max_iter` steps.
pub fn spectral_norm(a: &DMatrix<f64>, tol: f64, max_iter: usize) -> f64 {
    let n = a.nrows();
    if n == 0 {
        return 0.0;
    }
    let mut v = DVector::from_element(n, 1.0 / (n as f64).sqrt());
    let mut est = 0.0_f64;
    for _ in 0..max_iter {
        let w = a * &v;
        let norm = w.norm();
        if norm == 0.0 {
            return 0.0;
        }
        let converged = (norm - est).abs() <= tol * norm;
        est = norm;
        v = w / norm;
        if converged {
            break;
        }
    }
    est
}
