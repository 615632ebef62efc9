//! Projection onto the cone of Euclidean distance matrices.
//!
//! The EDM cone is the intersection of
//!
//! ```text
//! C1 = { M : J·M·J ⪯ 0 }      C2 = { M : diag(M) = 0 }
//! ```
//!
//! Both have closed-form projections. `C1` is handled in the basis of the
//! Householder reflection `Q` that maps `1` onto `−√n·e_n`: in that basis the
//! leading `(n−1)×(n−1)` block of `QAQ` is the part of `A` acting on `1⊥`,
//! and projecting onto `C1` clips that block to its negative semidefinite
//! part. Dykstra's correction terms make the alternation converge to the
//! nearest point of the intersection rather than just some point in it.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::edm::{tau_map, EdmMatrix, SymHollowMatrix, DEFAULT_TOL};
use crate::error::{EdmError, Result};
use crate::linalg::{gram_of, max_eigenvalue, symmetrize, SymEigen};

/// Householder reflection `Q = I − vvᵀ/(n+√n)` with `v = [1,…,1,1+√n]ᵀ`.
#[derive(Debug, Clone)]
pub struct HouseholderQ {
    n: usize,
    v: DVector<f64>,
    beta: f64,
}

impl HouseholderQ {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(EdmError::TooSmall(n));
        }
        let root = (n as f64).sqrt();
        let mut v = DVector::from_element(n, 1.0);
        v[n - 1] += root;
        Ok(HouseholderQ { n, v, beta: 1.0 / (n as f64 + root) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The explicit `n×n` matrix.
    pub fn matrix(&self) -> DMatrix<f64> {
        let mut q = DMatrix::identity(self.n, self.n);
        q.ger(-self.beta, &self.v, &self.v, 1.0);
        q
    }

    /// `Q·A·Q` for symmetric `A`, as a rank-two update in O(n²).
    pub fn conjugate(&self, a: &DMatrix<f64>) -> DMatrix<f64> {
        let w = a * &self.v;
        let c = self.v.dot(&w);
        // QAQ = A − β(v wᵀ + w vᵀ) + β²c·v vᵀ
        let u = &w - &self.v * (0.5 * self.beta * c);
        let mut out = a.clone();
        out.ger(-self.beta, &self.v, &u, 1.0);
        out.ger(-self.beta, &u, &self.v, 1.0);
        symmetrize(&mut out);
        out
    }
}

/// Projection onto `C1` with a cached reflection.
#[derive(Debug, Clone)]
struct C1Projector {
    q: HouseholderQ,
}

impl C1Projector {
    /// Returns the projection and the largest positive eigenvalue of the
    /// `1⊥` block (zero if the input already lies in `C1`).
    fn project(&self, a: &DMatrix<f64>) -> (DMatrix<f64>, f64) {
        let n = self.q.n;
        let mut b = self.q.conjugate(a);
        let block = b.view((0, 0), (n - 1, n - 1)).into_owned();
        let eig = SymEigen::new(&block);
        let top = eig.max().max(0.0);
        if top > 0.0 {
            // Rebuild from whichever part has fewer eigenpairs.
            let positive = eig.values.iter().filter(|&&g| g > 0.0).count();
            let mut view = b.view_mut((0, 0), (n - 1, n - 1));
            if 2 * positive <= n - 1 {
                view -= eig.reconstruct_with(|_, g| g.max(0.0));
            } else {
                view.copy_from(&eig.reconstruct_with(|_, g| g.min(0.0)));
            }
        }
        (self.q.conjugate(&b), top)
    }

    fn residual(&self, a: &DMatrix<f64>) -> f64 {
        let n = self.q.n;
        let b = self.q.conjugate(a);
        let block = b.view((0, 0), (n - 1, n - 1)).into_owned();
        max_eigenvalue(&block).max(0.0)
    }
}

fn require_symmetric(a: &DMatrix<f64>) -> Result<usize> {
    if a.nrows() != a.ncols() {
        return Err(EdmError::NotSquare { rows: a.nrows(), cols: a.ncols() });
    }
    let n = a.nrows();
    if n < 2 {
        return Err(EdmError::TooSmall(n));
    }
    let tol = 1e-12 * (1.0 + a.amax());
    for i in 0..n {
        for j in (i + 1)..n {
            if !a[(i, j)].is_finite() {
                return Err(EdmError::NonFinite { i, j });
            }
            if (a[(i, j)] - a[(j, i)]).abs() > tol {
                return Err(EdmError::NotSymmetric { i, j, a: a[(i, j)], b: a[(j, i)] });
            }
        }
    }
    Ok(n)
}

/// Projects a symmetric matrix onto `C1 = { M : JMJ ⪯ 0 }`.
pub fn project_c1(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = require_symmetric(a)?;
    Ok(C1Projector { q: HouseholderQ::new(n)? }.project(a).0)
}

/// Projects onto `C2` by zeroing the diagonal.
pub fn project_c2(a: &DMatrix<f64>) -> DMatrix<f64> {
    let mut out = a.clone();
    out.fill_diagonal(0.0);
    out
}

/// Stopping rule for [`project_edm_cone`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DykstraConfig {
    /// Stop once a full cycle moves the iterate by at most
    /// `tol·max(1, ‖A‖_F)` in Frobenius norm.
    pub tol: f64,
    pub max_cycles: usize,
    /// Feasibility residuals must also fall below `feas_tol`, measured
    /// relative to `max(1, ‖A‖_F)`.
    pub feas_tol: f64,
}

impl Default for DykstraConfig {
    fn default() -> Self {
        DykstraConfig { tol: 1e-9, max_cycles: 5000, feas_tol: 1e-7 }
    }
}

impl DykstraConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.feas_tol > 0.0 && self.max_cycles > 0) {
            return Err(EdmError::InvalidArgument(format!("Dykstra settings must be positive: {self:?}")));
        }
        Ok(())
    }
}

/// What happened during a Dykstra run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjectionDiagnostics {
    pub cycles: usize,
    /// `‖x_{k+1} − x_k‖_F` of the last cycle.
    pub delta_last: f64,
    /// Largest positive eigenvalue of the `1⊥` block of the final iterate,
    /// relative to `max(1, ‖A‖_F)`.
    pub c1_residual: f64,
    /// Largest |diagonal entry| of the last `C1` iterate, relative to
    /// `max(1, ‖A‖_F)`.
    pub c2_residual: f64,
    pub converged: bool,
}

/// Frobenius-nearest EDM to a symmetric matrix, by Dykstra's alternating
/// projections between `C1` and `C2`.
///
/// The returned matrix is the final (hollow) iterate with its Gram transform
/// clipped to the PSD cone and eigenvalues below `feas_tol·max(1, ‖A‖_F)`
/// dropped, so membership and embedding dimension are exact.
pub fn project_edm_cone(a: &DMatrix<f64>, cfg: &DykstraConfig) -> Result<(EdmMatrix, ProjectionDiagnostics)> {
    cfg.validate()?;
    let n = require_symmetric(a)?;
    let scale = a.norm().max(1.0);
    let c1 = C1Projector { q: HouseholderQ::new(n)? };

    let mut x = a.clone();
    let mut p = DMatrix::zeros(n, n);
    let mut q = DMatrix::zeros(n, n);
    let mut diag = ProjectionDiagnostics {
        cycles: 0,
        delta_last: f64::INFINITY,
        c1_residual: f64::INFINITY,
        c2_residual: f64::INFINITY,
        converged: false,
    };

    for cycle in 1..=cfg.max_cycles {
        let y = &x + &p;
        let (s, _) = c1.project(&y);
        p = y - &s;
        let z = &s + &q;
        let x_next = project_c2(&z);
        q = z - &x_next;

        let delta = (&x_next - &x).norm();
        x = x_next;
        diag.cycles = cycle;
        diag.delta_last = delta;

        if delta <= cfg.tol * scale {
            diag.c2_residual = s.diagonal().amax() / scale;
            diag.c1_residual = c1.residual(&x) / scale;
            if diag.c1_residual <= cfg.feas_tol && diag.c2_residual <= cfg.feas_tol {
                diag.converged = true;
                break;
            }
        }
    }

    if !diag.converged {
        diag.c2_residual = x.diagonal().amax() / scale;
        diag.c1_residual = c1.residual(&x) / scale;
        return Err(EdmError::NotConverged(Box::new(diag)));
    }

    let floor = cfg.feas_tol * scale;
    let edm = polish(x, floor)?;
    Ok((edm, diag))
}

/// Maps a nearly-feasible hollow iterate onto an exact EDM by clipping its
/// Gram transform: eigenvalues at or below `floor` become zero.
fn polish(x: DMatrix<f64>, floor: f64) -> Result<EdmMatrix> {
    let k = gram_of(&x);
    let eig = SymEigen::new(&k);
    let cut = floor.max(DEFAULT_TOL * eig.max().max(0.0));
    let k_plus = eig.reconstruct_with(|_, g| if g > cut { g } else { 0.0 });
    let mut d = tau_map(&k_plus);
    d.apply(|v| {
        if *v < 0.0 {
            *v = 0.0;
        }
    });
    let base = SymHollowMatrix::new(d)?;
    EdmMatrix::certify(base, DEFAULT_TOL)
}

/// Closed-form analysis of a 3×3 dissimilarity matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Dim3Analysis {
    pub delta_x: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    /// Embedding dimension of the projection onto the EDM cone.
    pub dim: usize,
    /// Shrinkage at which the projection of `X − ηD₀` drops to dimension one.
    pub eta_to_dim1: f64,
    /// Shrinkage at which the projection of `X − ηD₀` collapses to zero.
    pub eta_to_dim0: f64,
}

/// Embedding dimension and shrinkage breakpoints for three objects.
///
/// With `s = x₁₂ + x₁₃ + x₂₃` and
/// `Δ = √(2[(x₁₂−x₁₃)² + (x₁₂−x₂₃)² + (x₁₃−x₂₃)²])`, the projection has
/// dimension 2 when `s > Δ`, 1 when `−Δ/2 < s ≤ Δ`, and 0 otherwise.
/// Shrinking by `η` lowers `s` by `3η` and leaves `Δ` unchanged, which gives
/// the breakpoints `(s − Δ)/3` and `(2s + Δ)/6`.
pub fn analyze_dim3(x: &SymHollowMatrix) -> Result<Dim3Analysis> {
    if x.n() != 3 {
        return Err(EdmError::DimensionMismatch { left: x.n(), right: 3 });
    }
    let (a, b, c) = (x.get(0, 1), x.get(0, 2), x.get(1, 2));
    let s = a + b + c;
    let delta_x = (2.0 * ((a - b).powi(2) + (a - c).powi(2) + (b - c).powi(2))).sqrt();
    let alpha1 = (s + delta_x) / 3.0;
    let alpha2 = (s - delta_x) / 3.0;

    // Knife-edge cases go to the lower dimension.
    let edge = 1e-9 * s.abs().max(delta_x).max(f64::MIN_POSITIVE);
    let dim = if s - delta_x > edge {
        2
    } else if s + 0.5 * delta_x > edge {
        1
    } else {
        0
    };

    Ok(Dim3Analysis {
        delta_x,
        alpha1,
        alpha2,
        dim,
        eta_to_dim1: (s - delta_x) / 3.0,
        eta_to_dim0: (2.0 * s + delta_x) / 6.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edm::{edm_from_points, is_edm};
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sym3(a: f64, b: f64, c: f64) -> SymHollowMatrix {
        SymHollowMatrix::from_rows(&[vec![0.0, a, b], vec![a, 0.0, c], vec![b, c, 0.0]]).unwrap()
    }

    fn random_sym(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<f64> {
        let mut m = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
        symmetrize(&mut m);
        m
    }

    #[test]
    fn householder_matches_displayed_3x3() {
        let q = HouseholderQ::new(3).unwrap().matrix();
        let r3 = 3f64.sqrt();
        let den = 3.0 + r3;
        assert_relative_eq!(q[(0, 0)], (2.0 + r3) / den, epsilon = 1e-15);
        assert_relative_eq!(q[(0, 1)], -1.0 / den, epsilon = 1e-15);
        assert_relative_eq!(q[(0, 2)], -(1.0 + r3) / den, epsilon = 1e-15);
        assert_relative_eq!(q[(2, 2)], -(1.0 + r3) / den, epsilon = 1e-15);
    }

    #[test]
    fn householder_invariants() {
        for n in 2..12 {
            let hq = HouseholderQ::new(n).unwrap();
            let q = hq.matrix();
            assert_relative_eq!(q.clone(), q.transpose(), epsilon = 1e-15);
            assert_relative_eq!(&q * &q, DMatrix::identity(n, n), epsilon = 1e-12);
            let q1 = &q * DVector::from_element(n, 1.0);
            let mut want = DVector::zeros(n);
            want[n - 1] = -(n as f64).sqrt();
            assert_relative_eq!(q1, want, epsilon = 1e-12);

            let a = DMatrix::from_fn(n, n, |i, j| ((i + 2 * j) % 5) as f64 + ((j + 2 * i) % 5) as f64);
            assert_relative_eq!(hq.conjugate(&a), &q * &a * &q, epsilon = 1e-12);
        }
        assert!(HouseholderQ::new(1).is_err());
    }

    #[test]
    fn c1_examples() {
        let d = edm_from_points(&DMatrix::from_row_slice(4, 2, &[0.0, 0.0, 1.0, 0.0, 0.0, 2.0, 3.0, 1.0]));
        assert_relative_eq!(project_c1(d.as_matrix()).unwrap(), d.as_matrix().clone(), epsilon = 1e-10);

        let j = crate::linalg::centering(3);
        let out = project_c1(&j).unwrap();
        assert!(crate::linalg::double_center(&out).amax() < 1e-12);

        let neg = -j.clone();
        assert_relative_eq!(project_c1(&neg).unwrap(), neg, epsilon = 1e-12);
    }

    #[test]
    fn c1_output_is_in_c1_and_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [2, 3, 5, 9] {
            let a = random_sym(&mut rng, n);
            let once = project_c1(&a).unwrap();
            let jj = gram_of(&once);
            assert!(SymEigen::new(&jj).min() >= -1e-10);
            assert_relative_eq!(project_c1(&once).unwrap(), once, epsilon = 1e-10);
        }
    }

    #[test]
    fn c2_examples() {
        let id = DMatrix::<f64>::identity(3, 3);
        assert_eq!(project_c2(&id), DMatrix::zeros(3, 3));
        let h = SymHollowMatrix::ones(3).into_matrix();
        assert_eq!(project_c2(&h), h);
        let m = DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        assert_eq!(project_c2(&m), DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 1.0, 0.0]));
    }

    #[test]
    fn projection_examples() {
        let cfg = DykstraConfig::default();
        let d = edm_from_points(&DMatrix::from_row_slice(3, 2, &[0.0, 0.0, 1.0, 0.0, 0.0, 2.0]));
        let (p, diag) = project_edm_cone(d.as_matrix(), &cfg).unwrap();
        assert!(diag.converged);
        assert!((p.as_matrix() - d.as_matrix()).norm() <= 1e-8 * d.as_matrix().norm());

        // n = 2: the cone is the nonnegative off-diagonal scalar.
        let a = DMatrix::from_row_slice(2, 2, &[0.0, -3.0, -3.0, 0.0]);
        let (p, _) = project_edm_cone(&a, &cfg).unwrap();
        assert_eq!(p.as_matrix().amax(), 0.0);
        assert_eq!(p.embed_dim(), 0);

        let a = DMatrix::from_row_slice(2, 2, &[0.0, 2.5, 2.5, 0.0]);
        let (p, _) = project_edm_cone(&a, &cfg).unwrap();
        assert_relative_eq!(p.as_matrix()[(0, 1)], 2.5, epsilon = 1e-12);

        // s = 12, Δ = 18: −9 < 12 ≤ 18 gives dimension one.
        let x = sym3(1.0, 10.0, 1.0);
        let (p, _) = project_edm_cone(x.as_matrix(), &cfg).unwrap();
        assert_eq!(p.embed_dim(), 1);
        assert_eq!(analyze_dim3(&x).unwrap().dim, 1);
    }

    #[test]
    fn projection_requires_symmetric_input() {
        let a = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 2.0, 0.0]);
        assert!(matches!(project_edm_cone(&a, &DykstraConfig::default()), Err(EdmError::NotSymmetric { .. })));
    }

    #[test]
    fn not_converged_carries_diagnostics() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_sym(&mut rng, 8);
        let cfg = DykstraConfig { max_cycles: 2, ..Default::default() };
        match project_edm_cone(&a, &cfg) {
            Err(EdmError::NotConverged(d)) => {
                assert_eq!(d.cycles, 2);
                assert!(!d.converged);
            }
            other => panic!("expected NotConverged, got {other:?}"),
        }
    }

    #[test]
    fn dim3_examples() {
        let eq = analyze_dim3(&sym3(1.0, 1.0, 1.0)).unwrap();
        assert_eq!(eq.delta_x, 0.0);
        assert_relative_eq!(eq.alpha1, 1.0, epsilon = 1e-15);
        assert_relative_eq!(eq.alpha2, 1.0, epsilon = 1e-15);
        assert_eq!(eq.dim, 2);
        assert_relative_eq!(eq.eta_to_dim1, 1.0, epsilon = 1e-15);
        assert_relative_eq!(eq.eta_to_dim0, 1.0, epsilon = 1e-15);

        // Points 0, 1, 2 on a line.
        let line = analyze_dim3(&sym3(1.0, 4.0, 1.0)).unwrap();
        assert_relative_eq!(line.delta_x, 6.0, epsilon = 1e-14);
        assert_eq!(line.dim, 1);

        let x = analyze_dim3(&sym3(1.0, 1.0, 10.0)).unwrap();
        assert_relative_eq!(x.delta_x, 18.0, epsilon = 1e-14);
        assert_eq!(x.dim, 1);
        assert!(x.eta_to_dim1 <= x.eta_to_dim0);

        assert!(analyze_dim3(&SymHollowMatrix::ones(4)).is_err());
    }

    #[test]
    fn dim3_alphas_are_block_eigenvalues() {
        // α₁, α₂ are the eigenvalues of the negated 1⊥ block of QXQ.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let q = HouseholderQ::new(3).unwrap();
        for _ in 0..50 {
            let x = sym3(rng.random_range(-3.0..5.0), rng.random_range(-3.0..5.0), rng.random_range(-3.0..5.0));
            let b = q.conjugate(x.as_matrix());
            let block = -b.view((0, 0), (2, 2)).into_owned();
            let eig = SymEigen::new(&block);
            let an = analyze_dim3(&x).unwrap();
            assert_relative_eq!(eig.values[0], an.alpha1, epsilon = 1e-12, max_relative = 1e-12);
            assert_relative_eq!(eig.values[1], an.alpha2, epsilon = 1e-12, max_relative = 1e-12);
            let s = x.get(0, 1) + x.get(0, 2) + x.get(1, 2);
            assert_relative_eq!(an.alpha1 + an.alpha2, 2.0 * s / 3.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn dim3_knife_edge_goes_down() {
        // s == Δ exactly: x = (0, 0, 1) gives s = 1, Δ = 2; use (1, 4, 1): s = 6, Δ = 6.
        assert_eq!(analyze_dim3(&sym3(1.0, 4.0, 1.0)).unwrap().dim, 1);
        // s == −Δ/2: x = (−1, −1, 1/2) gives s = −1.5, Δ = 3.
        assert_eq!(analyze_dim3(&sym3(-1.0, -1.0, 0.5)).unwrap().dim, 0);
    }

    #[test]
    fn projected_dim_matches_membership_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in [4, 6, 10] {
            let mut a = random_sym(&mut rng, n);
            a.fill_diagonal(0.0);
            let (p, diag) = project_edm_cone(&a, &DykstraConfig::default()).unwrap();
            assert!(diag.c1_residual <= 1e-7 && diag.c2_residual <= 1e-7);
            let check = is_edm(p.base(), DEFAULT_TOL);
            assert!(check.is_edm);
            assert_eq!(check.embed_dim, p.embed_dim());
        }
    }
}
