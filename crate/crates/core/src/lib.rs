//! Estimating Euclidean distance matrices from noisy dissimilarities.
//!
//! Distances are squared throughout: `d_ij = ‖x_i − x_j‖²`. The kernel of a
//! distance matrix is `−JDJ/2` with `J = I − 11ᵀ/n`.
//!
//! ```
//! use edm_shrinkage::{distance_shrinkage, DykstraConfig, SymHollowMatrix};
//!
//! let x = SymHollowMatrix::from_rows(&[
//!     vec![0.0, 1.0, 10.0],
//!     vec![1.0, 0.0, 1.0],
//!     vec![10.0, 1.0, 0.0],
//! ])
//! .unwrap();
//! let fit = distance_shrinkage(&x, 0.0, &DykstraConfig::default()).unwrap();
//! assert_eq!(fit.d_hat.embed_dim(), 1);
//! ```

pub mod cone;
pub mod edm;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod shrinkage;

pub use cone::{
    analyze_dim3, project_c1, project_c2, project_edm_cone, Dim3Analysis, DykstraConfig, HouseholderQ,
    ProjectionDiagnostics,
};
pub use edm::{
    edm_from_coords, edm_from_points, extract_embedding, is_edm, kruskal_stress, loss_l, schoenberg_r,
    similarity_to_dissimilarity, squared_distances, tau_transform, EdmCheck, EdmMatrix, Embedding, KernelMatrix,
    MinTraceKernel, SymHollowMatrix, DEFAULT_TOL, LOAD_TOL,
};
pub use error::{EdmError, Result};
pub use shrinkage::{
    classical_mds, default_lambda, distance_shrinkage, objective_value, oracle_bound, truncate_rank, RankTruncatedFit,
    ShrinkageFit,
};
