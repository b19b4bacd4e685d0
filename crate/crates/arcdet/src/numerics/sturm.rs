//! Sturm-sequence eigenvalue counting for symmetric tridiagonal matrices.

/// Number of eigenvalues strictly below `t`, by counting negative pivots of
/// the shifted LDL^T factorization.
///
/// Zero pivots are replaced by `+eps * ||row||` (eps = 2^-52), which treats
/// an eigenvalue exactly at `t` as not below it; the function is total.
pub fn sturm_count_below(d: &[f64], e: &[f64], t: f64) -> usize {
    let n = d.len();
    assert_eq!(
        e.len(),
        n.saturating_sub(1),
        "subdiagonal length must be n-1"
    );
    if n == 0 {
        return 0;
    }
    let mut count = 0usize;
    let mut pivot = d[0] - t;
    for i in 0..n {
        if i > 0 {
            let prev = if pivot == 0.0 {
                let row = d[i - 1].abs()
                    + e[i - 1].abs()
                    + if i >= 2 { e[i - 2].abs() } else { 0.0 };
                f64::EPSILON * row.max(1.0)
            } else {
                pivot
            };
            pivot = (d[i] - t) - e[i - 1] * e[i - 1] / prev;
        }
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin upper bound for the spectrum of the tridiagonal matrix.
pub fn gershgorin_upper(d: &[f64], e: &[f64]) -> f64 {
    let n = d.len();
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { e[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { e[i].abs() } else { 0.0 };
        hi = hi.max(d[i] + left + right);
    }
    hi
}
