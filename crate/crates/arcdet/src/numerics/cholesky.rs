//! Cholesky log-determinant, generic over the working precision.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::scalar::Real;

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
///
/// A non-positive pivot reports the failing index; for moment matrices this
/// signals that the requested dimension exceeds the precision budget.
pub fn cholesky_factor<T: Real>(t: &SquareMatrix<T>) -> Result<SquareMatrix<T>> {
    let n = t.n();
    let mut l = SquareMatrix::<T>::zeros(n);
    for j in 0..n {
        let mut diag = t[(j, j)];
        for k in 0..j {
            diag -= l[(j, k)] * l[(j, k)];
        }
        if !(diag > T::zero()) {
            return Err(Error::Conditioning {
                index: j,
                message: format!("non-positive Cholesky pivot {diag} at row {j}"),
            });
        }
        let root = diag.sqrt();
        l[(j, j)] = root;
        for i in (j + 1)..n {
            let mut s = t[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / root;
        }
    }
    Ok(l)
}

/// `ln det T` for symmetric positive definite `T`, via the Cholesky factor:
/// `ln det T = 2 sum ln L_ii`.
pub fn cholesky_log_det<T: Real>(t: &SquareMatrix<T>) -> Result<T> {
    let l = cholesky_factor(t)?;
    let mut log_det = T::zero();
    for j in 0..t.n() {
        log_det += l[(j, j)].ln();
    }
    Ok(log_det + log_det)
}
