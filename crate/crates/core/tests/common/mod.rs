#![allow(dead_code)]

use edm_shrinkage::linalg::double_center;
use edm_shrinkage::{edm_from_points, DykstraConfig, EdmMatrix, SymHollowMatrix};
use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

/// Tighter settings for tiny problems where dimension boundaries matter.
pub fn tight() -> DykstraConfig {
    DykstraConfig { tol: 1e-12, max_cycles: 200_000, feas_tol: 1e-10 }
}

pub fn gaussian_cloud<R: Rng>(rng: &mut R, n: usize, k: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, k, |_, _| rng.sample::<f64, _>(StandardNormal))
}

pub fn centered_cloud<R: Rng>(rng: &mut R, n: usize, k: usize) -> DMatrix<f64> {
    let mut p = gaussian_cloud(rng, n, k);
    let mean = p.row_mean();
    for mut row in p.row_iter_mut() {
        row -= &mean;
    }
    p
}

pub fn random_edm<R: Rng>(rng: &mut R, n: usize, k: usize) -> EdmMatrix {
    edm_from_points(&centered_cloud(rng, n, k))
}

pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, scale: f64) -> DMatrix<f64> {
    let mut a = DMatrix::from_fn(n, n, |_, _| scale * rng.sample::<f64, _>(StandardNormal));
    a = (&a + a.transpose()) * 0.5;
    a
}

pub fn random_hollow<R: Rng>(rng: &mut R, n: usize, scale: f64) -> SymHollowMatrix {
    let mut a = random_symmetric(rng, n, scale);
    a.fill_diagonal(0.0);
    SymHollowMatrix::new(a).unwrap()
}

pub fn rel_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

/// `‖J(A − B)J‖²_F`.
pub fn centered_sq_dist(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    double_center(&(a - b)).norm_squared()
}

pub fn d0(n: usize) -> DMatrix<f64> {
    SymHollowMatrix::ones(n).into_matrix()
}
