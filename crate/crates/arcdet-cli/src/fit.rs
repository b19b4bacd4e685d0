//! Small linear least-squares helper for the constant-term fits.

/// Fit `y ~ sum_j coeff_j * basis_j(x)` by normal equations (the systems
/// here are 2x2 or 3x3 and well scaled). Returns (coefficients, rms residual).
pub fn least_squares(
    xs: &[f64],
    ys: &[f64],
    basis: &[&dyn Fn(f64) -> f64],
) -> (Vec<f64>, f64) {
    let m = basis.len();
    let n = xs.len();
    assert!(n >= m, "need at least as many points as coefficients");
    let mut ata = vec![vec![0.0f64; m]; m];
    let mut atb = vec![0.0f64; m];
    for (&x, &y) in xs.iter().zip(ys) {
        let row: Vec<f64> = basis.iter().map(|f| f(x)).collect();
        for i in 0..m {
            for j in 0..m {
                ata[i][j] += row[i] * row[j];
            }
            atb[i] += row[i] * y;
        }
    }
    // Gaussian elimination with partial pivoting.
    let mut a = ata;
    let mut b = atb;
    for col in 0..m {
        let piv = (col..m)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        let d = a[col][col];
        assert!(d != 0.0, "singular normal equations");
        for row in (col + 1)..m {
            let f = a[row][col] / d;
            for k in col..m {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut coeffs = vec![0.0f64; m];
    for row in (0..m).rev() {
        let mut s = b[row];
        for k in (row + 1)..m {
            s -= a[row][k] * coeffs[k];
        }
        coeffs[row] = s / a[row][row];
    }
    let mut ss = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let fitv: f64 = basis
            .iter()
            .zip(&coeffs)
            .map(|(f, c)| c * f(x))
            .sum();
        ss += (y - fitv) * (y - fitv);
    }
    (coeffs, (ss / n as f64).sqrt())
}
