//! Shared numerical kernels: quadrature, symmetric log-determinants, and
//! Sturm eigenvalue counts.

pub mod cholesky;
pub mod eigen;
pub mod quadrature;
pub mod sturm;

pub use cholesky::cholesky_log_det;
pub use eigen::{sym_eigenvalues, sym_log_det_one_minus, sym_log_det_one_minus_full};
pub use quadrature::{gauss_legendre, QuadratureRule};
pub use sturm::{gershgorin_upper, sturm_count_below};
