//! Reflection-coefficient ladder for polynomials orthonormal on the arc.
//!
//! The monic recursion is fixed as
//! `Phi_{k+1}(z) = z Phi_k(z) - a_k Phi*_k(z)` with real `a_k` (the weight is
//! symmetric about theta = pi, so all coefficients are real). Leading
//! coefficients are tracked in the log domain: `ln chi_{k+1} = ln chi_k -
//! (1/2) ln(1 - a_k^2)`, `ln chi_0 = -(1/2) ln c_0`, since both `chi_n` and
//! the Toeplitz determinants over/underflow catastrophically otherwise.
//!
//! The ladder is read off the Cholesky factor `T = L L^T` of the moment
//! matrix: the orthonormal coefficient matrix is `L^{-T}`, so
//! `chi_k = 1/L_kk`, and with `L y = e_0` the monic constant terms are
//! `Phi_{k+1}(0) = y_{k+1} L_{k+1,k+1}`, giving `a_k = -Phi_{k+1}(0)`.
//! Cholesky is backward stable, so the digits lost are the moment matrix's
//! own conditioning and nothing worse; see [`conditioning_rate`] for that
//! rate and the budget enforced below. The O(n^2) Levinson/Schur recursions
//! lose digits even faster than the conditioning bound (their error carries
//! `((1+|a|)/(1-|a|))^n` factors, and on an arc `|a_k| -> sin(alpha/2)`), so
//! the O(n^3) factorization is the right trade.

use super::moments::{moments, MomentTable};
use super::weight::ArcWeight;
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::numerics::cholesky::cholesky_factor;
use crate::scalar::Real;

/// Conditioning rate of the arc moment problem, in nats per degree.
///
/// The smallest eigenvalue of the n-th moment matrix decays like
/// `exp(-2 n atanh(sin(alpha/2)))`: the extremal coefficient vector puts its
/// polynomial's mass on the gap of the circle, where polynomials can grow
/// like `|psi|^n`, and `max_gap ln|psi| = ln psi(1) = atanh(sin(alpha/2))`.
/// (Measured decay rates match this to a few percent; the naive
/// `gamma^{2n}` suggested by the Cholesky pivots `beta_k ~ gamma^{2k}` badly
/// underestimates the loss.) In the shrinking-arc regime `alpha = 2s/n` the
/// rate sums to `~2s`, the same `e^{-2s}` wall the discretized sine kernel
/// hits through its top eigenvalue.
pub fn conditioning_rate(alpha: f64) -> f64 {
    let s = (alpha / 2.0).sin();
    // atanh(s)
    0.5 * ((1.0 + s) / (1.0 - s)).ln()
}

/// Largest degree the moment problem supports at `digits` decimal digits of
/// working precision: `2 n atanh(sin(alpha/2)) < 0.8 digits ln 10`.
pub fn budget_max_degree(alpha: f64, digits: f64) -> usize {
    let rate = conditioning_rate(alpha);
    if rate <= 0.0 {
        return usize::MAX;
    }
    (0.8 * digits * std::f64::consts::LN_10 / (2.0 * rate)).floor() as usize
}

fn budget_ok(n_max: usize, alpha: f64, digits: f64) -> bool {
    2.0 * n_max as f64 * conditioning_rate(alpha) < 0.8 * digits * std::f64::consts::LN_10
}

/// Moments, reflection coefficients and log leading coefficients of the
/// orthonormal polynomials up to degree `n_max`, at working precision `T`.
#[derive(Clone, Debug)]
pub struct OpucLadder<T> {
    weight: ArcWeight,
    n_max: usize,
    /// `c_0..=c_{n_max}`.
    pub moments: Vec<T>,
    /// `a_0..a_{n_max - 1}`.
    pub reflection: Vec<T>,
    /// `ln chi_0..=ln chi_{n_max}`.
    pub log_chi: Vec<T>,
    /// Prefix sums: `log_chi_cum[n] = sum_{k<n} ln chi_k`, length n_max + 2.
    log_chi_cum: Vec<T>,
    /// Quadrature convergence flag for non-closed-form weights.
    pub moments_converged: bool,
}

/// Build the ladder up to degree `n_max`.
///
/// Refuses inputs beyond the conditioning budget of the scalar type rather
/// than returning garbage: the smallest eigenvalue of the moment matrix is of
/// order `gamma^{2n}`, which is all the cancellation the working precision
/// can absorb.
pub fn build_ladder<T: Real>(weight: &ArcWeight, n_max: usize) -> Result<OpucLadder<T>> {
    let alpha = weight.alpha();
    if !budget_ok(n_max, alpha, T::DECIMAL_DIGITS) {
        return Err(Error::Conditioning {
            index: budget_max_degree(alpha, T::DECIMAL_DIGITS),
            message: format!(
                "degree {n_max} at alpha = {alpha} exceeds the conditioning budget \
                 (max {} at {} digits)",
                budget_max_degree(alpha, T::DECIMAL_DIGITS),
                T::DECIMAL_DIGITS,
            ),
        });
    }
    if T::DECIMAL_DIGITS > 20.0 && !weight.supports_extended() {
        return Err(Error::invalid(
            "callable weights evaluate at f64 resolution only; \
             use a cosine series for extended precision"
                .to_string(),
        ));
    }
    let table: MomentTable<T> = moments(weight, n_max.max(1), 128)?;
    let c = &table.values;
    if !(c[0] > T::zero()) {
        return Err(Error::invalid(format!("c_0 = {} must be positive", c[0])));
    }

    let one = T::one();
    let dim = n_max + 1;
    let t = SquareMatrix::from_fn(dim, |i, j| c[i.abs_diff(j)]);
    let l = cholesky_factor(&t)?;
    // Forward substitution L y = e_0 gives the orthonormal constant terms.
    let mut y = vec![T::zero(); dim];
    y[0] = one / l[(0, 0)];
    for i in 1..dim {
        let mut s = T::zero();
        for k in 0..i {
            s += l[(i, k)] * y[k];
        }
        y[i] = -s / l[(i, i)];
    }
    let mut reflection = Vec::with_capacity(n_max);
    let mut log_chi = Vec::with_capacity(dim);
    for k in 0..dim {
        log_chi.push(-l[(k, k)].ln());
    }
    for k in 0..n_max {
        let a = -y[k + 1] * l[(k + 1, k + 1)];
        if a.abs() >= one - T::of(1e-12) {
            return Err(Error::Conditioning {
                index: k,
                message: format!("reflection coefficient |a_{k}| = {} reached 1", a.abs()),
            });
        }
        reflection.push(a);
    }

    let mut log_chi_cum = Vec::with_capacity(n_max + 2);
    let mut acc = T::zero();
    log_chi_cum.push(acc);
    for &lc in &log_chi {
        acc += lc;
        log_chi_cum.push(acc);
    }

    Ok(OpucLadder {
        weight: weight.clone(),
        n_max,
        moments: table.values,
        reflection,
        log_chi,
        log_chi_cum,
        moments_converged: table.converged,
    })
}

impl<T: Real> OpucLadder<T> {
    pub fn weight(&self) -> &ArcWeight {
        &self.weight
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn alpha(&self) -> f64 {
        self.weight.alpha()
    }

    /// `chi_n` (not logged; overflows for large n at small gamma).
    pub fn chi(&self, n: usize) -> T {
        self.log_chi[n].exp()
    }

    /// `ln det T_{n-1} = -2 sum_{k<n} ln chi_k` for `1 <= n <= n_max + 1`.
    pub fn toeplitz_log_det(&self, n: usize) -> Result<T> {
        if n < 1 || n > self.n_max + 1 {
            return Err(Error::invalid(format!(
                "n = {n} outside 1..={}",
                self.n_max + 1
            )));
        }
        Ok(-(self.log_chi_cum[n] + self.log_chi_cum[n]))
    }

    /// The n x n moment (Toeplitz) matrix `c_{|i-j|}`.
    pub fn moment_matrix(&self, n: usize) -> SquareMatrix<T> {
        SquareMatrix::from_fn(n, |i, j| self.moments[i.abs_diff(j)])
    }

    /// Downconvert to standard precision (for cheap downstream evaluation).
    pub fn to_f64(&self) -> OpucLadder<f64> {
        OpucLadder {
            weight: self.weight.clone(),
            n_max: self.n_max,
            moments: self.moments.iter().map(|x| x.as_f64()).collect(),
            reflection: self.reflection.iter().map(|x| x.as_f64()).collect(),
            log_chi: self.log_chi.iter().map(|x| x.as_f64()).collect(),
            log_chi_cum: self.log_chi_cum.iter().map(|x| x.as_f64()).collect(),
            moments_converged: self.moments_converged,
        }
    }
}
