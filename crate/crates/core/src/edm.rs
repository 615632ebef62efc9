//! Matrix types for squared-distance data and the kernel/distance transforms.
//!
//! Every "distance" matrix in this crate holds **squared** Euclidean
//! distances, `d_ij = ‖p_i − p_j‖²`. The two transforms
//!
//! ```text
//! τ(K) = diag(K)1ᵀ + 1diag(K)ᵀ − 2K        kernel   → distances
//! R(D) = −J·D·J/2,   J = I − 11ᵀ/n          distances → minimum-trace kernel
//! ```
//!
//! are mutually inverse between Euclidean distance matrices (EDMs) and
//! positive semidefinite kernels whose rows sum to zero.

use nalgebra::DMatrix;

use crate::error::{EdmError, Result};
use crate::linalg::{gram_of, SymEigen};

/// Default relative tolerance for EDM certification and rank decisions.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Absolute tolerance used when loading matrices from text.
pub const LOAD_TOL: f64 = 1e-9;

fn rounding_floor(m: &DMatrix<f64>) -> f64 {
    let max_abs = m.iter().fold(0.0_f64, |a, x| a.max(x.abs()));
    64.0 * f64::EPSILON * m.nrows() as f64 * max_abs
}

fn check_square(m: &DMatrix<f64>) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(EdmError::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    Ok(m.nrows())
}

fn check_finite(m: &DMatrix<f64>) -> Result<()> {
    for j in 0..m.ncols() {
        for i in 0..m.nrows() {
            if !m[(i, j)].is_finite() {
                return Err(EdmError::NonFinite { i, j });
            }
        }
    }
    Ok(())
}

fn check_symmetric(m: &DMatrix<f64>, tol: f64) -> Result<()> {
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (m[(i, j)], m[(j, i)]);
            if (a - b).abs() > tol {
                return Err(EdmError::NotSymmetric { i, j, a, b });
            }
        }
    }
    Ok(())
}

/// Symmetric matrix with an exactly zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymHollowMatrix {
    m: DMatrix<f64>,
}

impl SymHollowMatrix {
    /// Wraps `m`, requiring exact symmetry and an exactly zero diagonal.
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        Self::with_tolerance(m, 0.0)
    }

    /// Like [`SymHollowMatrix::new`] but accepts asymmetry and diagonal
    /// entries up to `tol` in absolute value, averaging the two triangles and
    /// zeroing the diagonal.
    pub fn with_tolerance(mut m: DMatrix<f64>, tol: f64) -> Result<Self> {
        let n = check_square(&m)?;
        if n < 2 {
            return Err(EdmError::TooSmall(n));
        }
        check_finite(&m)?;
        check_symmetric(&m, tol)?;
        for i in 0..n {
            let v = m[(i, i)];
            if v.abs() > tol {
                return Err(EdmError::NotHollow { i, value: v });
            }
            m[(i, i)] = 0.0;
        }
        crate::linalg::symmetrize(&mut m);
        Ok(SymHollowMatrix { m })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::new(matrix_from_rows(rows)?)
    }

    pub fn zeros(n: usize) -> Self {
        SymHollowMatrix { m: DMatrix::zeros(n, n) }
    }

    /// `D₀`: zero diagonal, ones elsewhere.
    pub fn ones(n: usize) -> Self {
        SymHollowMatrix { m: DMatrix::from_fn(n, n, |i, j| if i == j { 0.0 } else { 1.0 }) }
    }

    pub fn n(&self) -> usize {
        self.m.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.m
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        rows_of(&self.m)
    }

    /// Subtracts `eta` from every off-diagonal entry.
    pub fn shrink(&self, eta: f64) -> SymHollowMatrix {
        let mut m = self.m.add_scalar(-eta);
        m.fill_diagonal(0.0);
        SymHollowMatrix { m }
    }

    /// Iterates `(i, j, value)` over the strict upper triangle in row-major order.
    pub fn upper(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |i| ((i + 1)..n).map(move |j| (i, j, self.m[(i, j)])))
    }
}

/// Outcome of a Schönberg membership test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdmCheck {
    pub is_edm: bool,
    pub embed_dim: usize,
    /// Largest eigenvalue of `−JMJ/2`.
    pub max_eig: f64,
    /// Smallest eigenvalue of `−JMJ/2`.
    pub min_eig: f64,
}

/// Tests whether `m` is a Euclidean distance matrix.
///
/// `m` passes when every eigenvalue of `−JMJ/2` is at least `−tol·γ_max`;
/// the embedding dimension counts eigenvalues above `tol·γ_max`. A small
/// floor proportional to machine epsilon keeps the test meaningful for
/// matrices that are zero up to rounding.
pub fn is_edm(m: &SymHollowMatrix, tol: f64) -> EdmCheck {
    let k = gram_of(m.as_matrix());
    let eig = SymEigen::new(&k);
    classify_spectrum(&eig, tol, rounding_floor(&k))
}

fn classify_spectrum(eig: &SymEigen, tol: f64, floor: f64) -> EdmCheck {
    let max_eig = eig.max();
    let min_eig = eig.min();
    let scale = max_eig.max(0.0);
    let thresh = tol * scale + floor;
    let is_edm = min_eig >= -thresh;
    let embed_dim = if max_eig <= floor { 0 } else { eig.values.iter().filter(|&&g| g > thresh).count() };
    EdmCheck { is_edm, embed_dim, max_eig, min_eig }
}

/// A symmetric hollow matrix certified to lie in the EDM cone.
#[derive(Debug, Clone, PartialEq)]
pub struct EdmMatrix {
    base: SymHollowMatrix,
    embed_dim: usize,
    cert_tol: f64,
}

impl EdmMatrix {
    pub fn certify(base: SymHollowMatrix, cert_tol: f64) -> Result<Self> {
        let scale = base.as_matrix().iter().fold(1.0_f64, |a, x| a.max(x.abs()));
        if let Some((_, _, v)) = base.upper().find(|&(_, _, v)| v < -cert_tol * scale) {
            return Err(EdmError::NotEdm { min_eig: v, tol: cert_tol, scale });
        }
        let check = is_edm(&base, cert_tol);
        if !check.is_edm {
            return Err(EdmError::NotEdm { min_eig: check.min_eig, tol: cert_tol, scale: check.max_eig });
        }
        Ok(EdmMatrix { base, embed_dim: check.embed_dim, cert_tol })
    }

    pub fn embed_dim(&self) -> usize {
        self.embed_dim
    }

    pub fn cert_tol(&self) -> f64 {
        self.cert_tol
    }

    pub fn base(&self) -> &SymHollowMatrix {
        &self.base
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        self.base.as_matrix()
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn into_base(self) -> SymHollowMatrix {
        self.base
    }
}

/// Symmetric positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelMatrix {
    m: DMatrix<f64>,
    psd_tol: f64,
}

impl KernelMatrix {
    /// Requires symmetry (up to rounding) and `γ_min ≥ −psd_tol·γ_max`.
    pub fn new(mut m: DMatrix<f64>, psd_tol: f64) -> Result<Self> {
        let n = check_square(&m)?;
        if n == 0 {
            return Err(EdmError::TooSmall(n));
        }
        check_finite(&m)?;
        check_symmetric(&m, 1e-12 * (1.0 + m.amax()))?;
        crate::linalg::symmetrize(&mut m);
        let eig = SymEigen::new(&m);
        let floor = rounding_floor(&m);
        if eig.min() < -(psd_tol * eig.max().max(0.0) + floor) {
            return Err(EdmError::NotPsd { min_eig: eig.min() });
        }
        Ok(KernelMatrix { m, psd_tol })
    }

    /// Gram matrix `P·Pᵀ` of a set of points.
    pub fn gram(points: &DMatrix<f64>) -> Self {
        let mut m = points * points.transpose();
        crate::linalg::symmetrize(&mut m);
        KernelMatrix { m, psd_tol: DEFAULT_TOL }
    }

    pub fn n(&self) -> usize {
        self.m.nrows()
    }

    pub fn psd_tol(&self) -> f64 {
        self.psd_tol
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn trace(&self) -> f64 {
        self.m.trace()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        rows_of(&self.m)
    }
}

/// A kernel whose rows sum to zero: the unique minimum-trace kernel of its
/// distance matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct MinTraceKernel(KernelMatrix);

impl MinTraceKernel {
    pub fn new(k: KernelMatrix) -> Result<Self> {
        let n = k.n();
        let max_row_sum = (0..n).map(|i| k.m.row(i).sum().abs()).fold(0.0, f64::max);
        if max_row_sum > k.psd_tol * k.trace().abs() + rounding_floor(&k.m) {
            return Err(EdmError::NotCentered { max_row_sum });
        }
        Ok(MinTraceKernel(k))
    }

    pub fn kernel(&self) -> &KernelMatrix {
        &self.0
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.0.m
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }
}

/// Centered point coordinates, one row per object. Units are distances,
/// not squared distances.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    coords: DMatrix<f64>,
}

impl Embedding {
    /// Requires column sums within `1e-10·max|coord|` of zero.
    pub fn new(coords: DMatrix<f64>) -> Result<Self> {
        check_finite(&coords)?;
        let scale = coords.amax();
        let n = coords.nrows() as f64;
        for j in 0..coords.ncols() {
            let s = coords.column(j).sum();
            if s.abs() > 1e-10 * scale * n.max(1.0) {
                return Err(EdmError::InvalidArgument(format!("embedding column {j} is not centered (sum {s:e})")));
            }
        }
        Ok(Embedding { coords })
    }

    /// Subtracts the centroid from arbitrary coordinates.
    pub fn centered(mut coords: DMatrix<f64>) -> Self {
        let n = coords.nrows().max(1) as f64;
        for mut col in coords.column_iter_mut() {
            let mean = col.sum() / n;
            col.add_scalar_mut(-mean);
        }
        Embedding { coords }
    }

    pub fn n(&self) -> usize {
        self.coords.nrows()
    }

    pub fn k(&self) -> usize {
        self.coords.ncols()
    }

    pub fn coords(&self) -> &DMatrix<f64> {
        &self.coords
    }

    pub fn gram(&self) -> KernelMatrix {
        KernelMatrix::gram(&self.coords)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        rows_of(&self.coords)
    }
}

/// `τ(K)`: `d_ij = k_ii + k_jj − 2k_ij`.
pub fn tau_transform(k: &KernelMatrix) -> SymHollowMatrix {
    SymHollowMatrix { m: tau_map(k.as_matrix()) }
}

pub(crate) fn tau_map(k: &DMatrix<f64>) -> DMatrix<f64> {
    let n = k.nrows();
    let mut d = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = k[(i, i)] + k[(j, j)] - k[(i, j)] - k[(j, i)];
            d[(i, j)] = v;
            d[(j, i)] = v;
        }
    }
    d
}

/// `R(D) = −JDJ/2`, the minimum-trace kernel realizing `d`.
pub fn schoenberg_r(d: &EdmMatrix) -> Result<MinTraceKernel> {
    let k = gram_of(d.as_matrix());
    MinTraceKernel::new(KernelMatrix::new(k, d.cert_tol())?)
}

/// Top-`r` coordinates `U_r·diag(√γ)` of a minimum-trace kernel.
///
/// Negative eigenvalues are clipped to zero. Logs a warning when the first
/// discarded eigenvalue exceeds `tol·γ₁`.
pub fn extract_embedding(k: &MinTraceKernel, r: usize, tol: f64) -> Result<Embedding> {
    let n = k.n();
    if r < 1 || r + 1 > n {
        return Err(EdmError::InvalidArgument(format!("rank {r} outside 1..={}", n - 1)));
    }
    let eig = SymEigen::new(k.as_matrix());
    if r < n && eig.values[r] > tol * eig.max().max(0.0) {
        log::warn!("rank-{r} embedding discards eigenvalue {:e} (largest {:e})", eig.values[r], eig.max());
    }
    Ok(coords_from_eigen(&eig, r))
}

pub(crate) fn coords_from_eigen(eig: &SymEigen, r: usize) -> Embedding {
    let n = eig.values.len();
    let coords = DMatrix::from_fn(n, r, |i, c| eig.vectors[(i, c)] * eig.values[c].max(0.0).sqrt());
    Embedding::centered(coords)
}

/// Squared pairwise distances between the rows of `coords`.
pub fn squared_distances(coords: &DMatrix<f64>) -> SymHollowMatrix {
    let n = coords.nrows();
    let mut d = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = (coords.row(i) - coords.row(j)).norm_squared();
            d[(i, j)] = v;
            d[(j, i)] = v;
        }
    }
    SymHollowMatrix { m: d }
}

/// The EDM of an embedding. Certified with [`DEFAULT_TOL`].
pub fn edm_from_coords(p: &Embedding) -> EdmMatrix {
    edm_from_points(p.coords())
}

/// The EDM of arbitrary (not necessarily centered) points.
pub fn edm_from_points(coords: &DMatrix<f64>) -> EdmMatrix {
    let base = squared_distances(coords);
    let check = is_edm(&base, DEFAULT_TOL);
    EdmMatrix { base, embed_dim: check.embed_dim.min(coords.ncols()), cert_tol: DEFAULT_TOL }
}

fn same_n(a: &SymHollowMatrix, b: &SymHollowMatrix) -> Result<usize> {
    if a.n() != b.n() {
        return Err(EdmError::DimensionMismatch { left: a.n(), right: b.n() });
    }
    Ok(a.n())
}

/// Average squared error over distinct pairs, `2/(n(n−1))·Σ_{i<j}(a_ij − b_ij)²`.
pub fn loss_l(a: &SymHollowMatrix, b: &SymHollowMatrix) -> Result<f64> {
    let n = same_n(a, b)? as f64;
    let sum: f64 = a.upper().map(|(i, j, v)| (v - b.get(i, j)).powi(2)).sum();
    Ok(2.0 * sum / (n * (n - 1.0)))
}

/// Kruskal stress `‖est − truth‖_F / ‖truth‖_F`.
pub fn kruskal_stress(est: &SymHollowMatrix, truth: &SymHollowMatrix) -> Result<f64> {
    same_n(est, truth)?;
    let denom = truth.as_matrix().norm();
    if denom == 0.0 {
        return Err(EdmError::ZeroReference);
    }
    Ok((est.as_matrix() - truth.as_matrix()).norm() / denom)
}

/// Converts a similarity matrix to dissimilarities `x_ij = s_ii + s_jj − 2s_ij`.
///
/// No positive-semidefiniteness is required, so the result need not be an EDM.
pub fn similarity_to_dissimilarity(s: &DMatrix<f64>) -> Result<SymHollowMatrix> {
    let n = check_square(s)?;
    if n < 2 {
        return Err(EdmError::TooSmall(n));
    }
    check_finite(s)?;
    check_symmetric(s, LOAD_TOL)?;
    Ok(SymHollowMatrix { m: tau_map(s) })
}

pub(crate) fn matrix_from_rows(rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().find(|r| r.len() != nc) {
        return Err(EdmError::NotSquare { rows: nr, cols: bad.len() });
    }
    Ok(DMatrix::from_fn(nr, nc, |i, j| rows[i][j]))
}

pub(crate) fn rows_of(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn sym(rows: &[&[f64]]) -> SymHollowMatrix {
        SymHollowMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn kernel(rows: &[&[f64]]) -> KernelMatrix {
        let m = matrix_from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap();
        KernelMatrix::new(m, DEFAULT_TOL).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            SymHollowMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]),
            Err(EdmError::NotSymmetric { .. })
        ));
        assert!(matches!(
            SymHollowMatrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 0.0]]),
            Err(EdmError::NotHollow { i: 0, .. })
        ));
        assert!(matches!(SymHollowMatrix::from_rows(&[vec![0.0]]), Err(EdmError::TooSmall(1))));
        assert!(matches!(
            SymHollowMatrix::from_rows(&[vec![0.0, f64::NAN], vec![f64::NAN, 0.0]]),
            Err(EdmError::NonFinite { .. })
        ));
        let near = DMatrix::from_row_slice(2, 2, &[1e-10, 1.0, 1.0 + 5e-10, 0.0]);
        let ok = SymHollowMatrix::with_tolerance(near, LOAD_TOL).unwrap();
        assert_eq!(ok.get(0, 0), 0.0);
        assert_eq!(ok.get(0, 1), ok.get(1, 0));
    }

    #[test]
    fn tau_examples() {
        let d = tau_transform(&kernel(&[&[1.0, 0.0], &[0.0, 1.0]]));
        assert_eq!(d.to_rows(), vec![vec![0.0, 2.0], vec![2.0, 0.0]]);
        let d = tau_transform(&kernel(&[&[1.0, -1.0], &[-1.0, 1.0]]));
        assert_eq!(d.to_rows(), vec![vec![0.0, 4.0], vec![4.0, 0.0]]);
        let d = tau_transform(&KernelMatrix::new(DMatrix::zeros(3, 3), DEFAULT_TOL).unwrap());
        assert_eq!(d, SymHollowMatrix::zeros(3));
    }

    #[test]
    fn schoenberg_examples() {
        let d = EdmMatrix::certify(sym(&[&[0.0, 4.0], &[4.0, 0.0]]), DEFAULT_TOL).unwrap();
        let k = schoenberg_r(&d).unwrap();
        assert_relative_eq!(
            k.as_matrix().clone(),
            DMatrix::from_row_slice(2, 2, &[1.0, -1.0, -1.0, 1.0]),
            epsilon = 1e-14
        );

        let z = EdmMatrix::certify(SymHollowMatrix::zeros(4), DEFAULT_TOL).unwrap();
        assert_eq!(z.embed_dim(), 0);
        assert_eq!(schoenberg_r(&z).unwrap().as_matrix().amax(), 0.0);

        // J·D0·J = −J, so R(D0) = J/2.
        let d0 = EdmMatrix::certify(SymHollowMatrix::ones(3), DEFAULT_TOL).unwrap();
        let k = schoenberg_r(&d0).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { 1.0 / 3.0 } else { -1.0 / 6.0 };
                assert_relative_eq!(k.as_matrix()[(i, j)], want, epsilon = 1e-15);
            }
        }
        assert_relative_eq!(k.trace(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn membership_examples() {
        let c = is_edm(&sym(&[&[0.0, 1.0], &[1.0, 0.0]]), DEFAULT_TOL);
        assert!(c.is_edm);
        assert_eq!(c.embed_dim, 1);

        let bad = sym(&[&[0.0, 1.0, 10.0], &[1.0, 0.0, 1.0], &[10.0, 1.0, 0.0]]);
        assert!(!is_edm(&bad, DEFAULT_TOL).is_edm);
        assert!(EdmMatrix::certify(bad, DEFAULT_TOL).is_err());

        let c = is_edm(&SymHollowMatrix::ones(3), DEFAULT_TOL);
        assert!(c.is_edm);
        assert_eq!(c.embed_dim, 2);
    }

    #[test]
    fn certify_rejects_negative_offdiagonal() {
        let m = sym(&[&[0.0, -1.0], &[-1.0, 0.0]]);
        assert!(matches!(EdmMatrix::certify(m, DEFAULT_TOL), Err(EdmError::NotEdm { .. })));
    }

    #[test]
    fn embedding_examples() {
        let k = MinTraceKernel::new(kernel(&[&[1.0, -1.0], &[-1.0, 1.0]])).unwrap();
        let e = extract_embedding(&k, 1, DEFAULT_TOL).unwrap();
        assert_relative_eq!(e.coords()[(0, 0)].abs(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(e.coords()[(0, 0)], -e.coords()[(1, 0)], epsilon = 1e-12);

        let z = MinTraceKernel::new(KernelMatrix::new(DMatrix::zeros(3, 3), DEFAULT_TOL).unwrap()).unwrap();
        let e = extract_embedding(&z, 2, DEFAULT_TOL).unwrap();
        assert_eq!(e.coords().amax(), 0.0);
        assert_eq!((e.n(), e.k()), (3, 2));

        assert!(extract_embedding(&k, 0, DEFAULT_TOL).is_err());
        assert!(extract_embedding(&k, 2, DEFAULT_TOL).is_err());
    }

    #[test]
    fn embedding_requires_centering() {
        assert!(Embedding::new(DMatrix::from_row_slice(2, 1, &[0.0, 1.0])).is_err());
        assert!(Embedding::new(DMatrix::from_row_slice(2, 1, &[-0.5, 0.5])).is_ok());
        assert!(MinTraceKernel::new(kernel(&[&[1.0, 0.0], &[0.0, 1.0]])).is_err());
    }

    #[test]
    fn coords_examples() {
        let d = edm_from_points(&DMatrix::from_row_slice(2, 1, &[0.0, 1.0]));
        assert_eq!(d.base().to_rows(), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(d.embed_dim(), 1);

        let d = edm_from_points(&DMatrix::from_row_slice(3, 1, &[0.0, 1.0, 2.0]));
        assert_eq!(d.base().get(0, 2), 4.0);
        assert_eq!(d.base().get(0, 1), 1.0);
        assert_eq!(d.base().get(1, 2), 1.0);
        assert_eq!(d.embed_dim(), 1);

        let p = DMatrix::from_row_slice(3, 2, &[0.0, 0.0, 1.0, 0.5, -2.0, 3.0]);
        let shifted = p.map(|x| x + 0.25);
        assert_eq!(edm_from_points(&p).base(), edm_from_points(&shifted).base());
    }

    #[test]
    fn loss_and_stress_examples() {
        let a = sym(&[&[0.0, 3.0], &[3.0, 0.0]]);
        let b = sym(&[&[0.0, 1.0], &[1.0, 0.0]]);
        assert_eq!(loss_l(&a, &a).unwrap(), 0.0);
        assert_eq!(loss_l(&a, &b).unwrap(), 4.0);
        assert!(matches!(loss_l(&a, &SymHollowMatrix::zeros(3)), Err(EdmError::DimensionMismatch { .. })));

        assert_eq!(kruskal_stress(&a, &a).unwrap(), 0.0);
        assert_eq!(kruskal_stress(&SymHollowMatrix::zeros(2), &a).unwrap(), 1.0);
        assert!(matches!(kruskal_stress(&a, &SymHollowMatrix::zeros(2)), Err(EdmError::ZeroReference)));
    }

    #[test]
    fn similarity_examples() {
        let s = DMatrix::from_row_slice(2, 2, &[5.0, 3.0, 3.0, 5.0]);
        assert_eq!(similarity_to_dissimilarity(&s).unwrap().get(0, 1), 4.0);

        let s = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, 2.0, 4.0]));
        let x = similarity_to_dissimilarity(&s).unwrap();
        assert_eq!(x.get(0, 1), 3.0);
        assert_eq!(x.get(1, 2), 6.0);
        assert!(is_edm(&x, DEFAULT_TOL).is_edm);

        let asym = DMatrix::from_row_slice(2, 2, &[5.0, 3.0, 2.0, 5.0]);
        assert!(similarity_to_dissimilarity(&asym).is_err());
    }
}
