//! Symmetric eigenvalues (no vectors): Householder tridiagonalization
//! followed by the implicit-shift QL sweep.
//!
//! Eigen-decomposition rather than LU is used for the `log det (I - M)`
//! entry point so that eigenvalues approaching 1 are visible individually;
//! precision loss then localizes to the offending mode instead of silently
//! polluting the whole determinant.

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Reduce a symmetric matrix to tridiagonal form, returning (diagonal,
/// subdiagonal). The input is consumed as working storage.
fn householder_tridiagonalize(mut a: SquareMatrix<f64>) -> (Vec<f64>, Vec<f64>) {
    let n = a.n();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n.saturating_sub(1)];
    if n == 0 {
        return (d, e);
    }
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        // Householder vector for column k below the diagonal.
        let mut norm2 = 0.0;
        for i in (k + 1)..n {
            norm2 += a[(i, k)] * a[(i, k)];
        }
        let x0 = a[(k + 1, k)];
        let norm = norm2.sqrt();
        if norm == 0.0 {
            e[k] = 0.0;
            continue;
        }
        let alpha = if x0 >= 0.0 { -norm } else { norm };
        for i in (k + 1)..n {
            v[i] = a[(i, k)];
        }
        v[k + 1] -= alpha;
        let vnorm2 = 2.0 * (norm2 - x0 * alpha);
        if vnorm2 == 0.0 {
            e[k] = alpha;
            continue;
        }
        let beta = 2.0 / vnorm2;
        // p = beta * A22 v, then w = p - (beta/2)(p.v) v; A22 -= v w^T + w v^T.
        let mut pv = 0.0;
        for i in (k + 1)..n {
            let mut s = 0.0;
            for j in (k + 1)..n {
                s += a[(i, j)] * v[j];
            }
            p[i] = beta * s;
            pv += p[i] * v[i];
        }
        let c = 0.5 * beta * pv;
        for i in (k + 1)..n {
            p[i] -= c * v[i];
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                a[(i, j)] -= v[i] * p[j] + p[i] * v[j];
            }
        }
        e[k] = alpha;
    }
    if n >= 2 {
        e[n - 2] = a[(n - 1, n - 2)];
    }
    for i in 0..n {
        d[i] = a[(i, i)];
    }
    (d, e)
}

/// Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL,
/// ascending. `e` is the subdiagonal (length n-1).
pub fn tridiagonal_eigenvalues(diag: &[f64], sub: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    assert_eq!(sub.len(), n.saturating_sub(1));
    let mut d = diag.to_vec();
    // e[i] couples rows (i, i+1); the trailing slot is workspace.
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(sub);

    let eps = f64::EPSILON;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 80 {
                    return Err(Error::Conditioning {
                        index: l,
                        message: "QL iteration did not converge".into(),
                    });
                }
                // Implicit Wilkinson-style shift.
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for i in (l + 2)..n {
                    d[i] -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let gi = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * gi;
                    d[i + 1] = h + s * (c * gi + s * d[i]);
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(d)
}

/// All eigenvalues of a symmetric matrix, ascending.
pub fn sym_eigenvalues(a: &SquareMatrix<f64>) -> Result<Vec<f64>> {
    let n = a.n();
    if n == 0 {
        return Ok(vec![]);
    }
    if n == 1 {
        return Ok(vec![a[(0, 0)]]);
    }
    let (d, e) = householder_tridiagonalize(a.clone());
    tridiagonal_eigenvalues(&d, &e)
}

/// `ln det(I - M)` for symmetric `M` with spectrum strictly below 1.
///
/// Returns the log-determinant together with the spectrum of `M` so callers
/// can interrogate near-unit eigenvalues.
pub fn sym_log_det_one_minus_full(m: &SquareMatrix<f64>) -> Result<(f64, Vec<f64>)> {
    let asym = m.max_asymmetry();
    let scale = m.max_abs().max(1.0);
    if asym > 1e-12 * scale {
        return Err(Error::invalid(format!(
            "matrix is not symmetric: max |M - M^T| = {asym:e}"
        )));
    }
    let eigs = sym_eigenvalues(m)?;
    let mut log_det = 0.0;
    // Largest eigenvalues are the dangerous ones; report the first offender.
    for (idx, &lambda) in eigs.iter().enumerate().rev() {
        if lambda >= 1.0 {
            return Err(Error::Domain {
                index: idx,
                message: format!("I - M not positive definite: eigenvalue {lambda} >= 1"),
            });
        }
        log_det += (1.0 - lambda).ln();
    }
    Ok((log_det, eigs))
}

/// `ln det(I - M)`; see [`sym_log_det_one_minus_full`].
pub fn sym_log_det_one_minus(m: &SquareMatrix<f64>) -> Result<f64> {
    sym_log_det_one_minus_full(m).map(|(v, _)| v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::SquareMatrix;

    fn mat(n: usize, f: impl FnMut(usize, usize) -> f64) -> SquareMatrix<f64> {
        SquareMatrix::from_fn(n, f)
    }

    #[test]
    fn diagonal_matrix_eigenvalues() {
        let m = SquareMatrix::diagonal(&[3.0, -1.0, 2.0, 0.5]);
        let e = sym_eigenvalues(&m).unwrap();
        assert_eq!(e.len(), 4);
        for (got, want) in e.iter().zip([-1.0, 0.5, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn two_by_two_closed_form() {
        let m = mat(2, |i, j| if i == j { 0.5 } else { -1.0 / std::f64::consts::PI });
        let e = sym_eigenvalues(&m).unwrap();
        let off = 1.0 / std::f64::consts::PI;
        assert!((e[0] - (0.5 - off)).abs() < 1e-14);
        assert!((e[1] - (0.5 + off)).abs() < 1e-14);
    }

    #[test]
    fn known_tridiagonal_spectrum() {
        // Second-difference matrix: eigenvalues 2 - 2 cos(k pi / (n+1)).
        let n = 12;
        let d = vec![2.0; n];
        let e = vec![-1.0; n - 1];
        let eigs = tridiagonal_eigenvalues(&d, &e).unwrap();
        for (k, lam) in eigs.iter().enumerate() {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((lam - want).abs() < 1e-12, "k={k}: {lam} vs {want}");
        }
    }

    #[test]
    fn random_symmetric_trace_and_frobenius() {
        // Eigenvalues must reproduce trace and Frobenius norm.
        let n = 60;
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut rnd = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let v = rnd();
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        let eigs = sym_eigenvalues(&m).unwrap();
        let tr: f64 = (0..n).map(|i| m[(i, i)]).sum();
        let tr_e: f64 = eigs.iter().sum();
        assert!((tr - tr_e).abs() < 1e-10 * (1.0 + tr.abs()));
        let mut fro = 0.0;
        for i in 0..n {
            for j in 0..n {
                fro += m[(i, j)] * m[(i, j)];
            }
        }
        let fro_e: f64 = eigs.iter().map(|x| x * x).sum();
        assert!((fro - fro_e).abs() < 1e-10 * fro);
    }

    #[test]
    fn log_det_zero_matrix() {
        let m = SquareMatrix::zeros(3);
        assert_eq!(sym_log_det_one_minus(&m).unwrap(), 0.0);
    }

    #[test]
    fn log_det_diagonal_half() {
        let m = SquareMatrix::diagonal(&[0.5, 0.5]);
        let got = sym_log_det_one_minus(&m).unwrap();
        assert!((got - 2.0 * 0.5f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn log_det_rank_one() {
        // det(I - u u^T) = 1 - |u|^2; take |u|^2 = 0.9.
        let u = [0.3, 0.5, 0.4, 0.1, 0.6244997998398398]; // norm^2 = 0.9
        let norm2: f64 = u.iter().map(|x| x * x).sum();
        assert!((norm2 - 0.9).abs() < 1e-12);
        let m = mat(u.len(), |i, j| u[i] * u[j]);
        let got = sym_log_det_one_minus(&m).unwrap();
        assert!((got - 0.1f64.ln()).abs() < 1e-12, "{got}");
    }

    #[test]
    fn rejects_non_symmetric_and_non_pd() {
        let mut m = SquareMatrix::zeros(2);
        m[(0, 1)] = 1e-3;
        assert!(matches!(
            sym_log_det_one_minus(&m),
            Err(Error::InvalidArgument(_))
        ));
        let m = SquareMatrix::diagonal(&[0.5, 1.5]);
        match sym_log_det_one_minus(&m) {
            Err(Error::Domain { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn deterministic_repeat() {
        let m = mat(20, |i, j| 1.0 / (1.0 + (i + j) as f64));
        let a = sym_eigenvalues(&m).unwrap();
        let b = sym_eigenvalues(&m).unwrap();
        assert_eq!(a, b);
    }
}
