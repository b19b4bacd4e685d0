//! Endpoint asymptotics for the pure arc weight (f = 1): the polynomial, its
//! leading coefficient, and its derivative at `z = e^{i alpha}`, expanded in
//! inverse powers of `rho = n sin(alpha/2)`.

use super::asymptotics::{AsymptoticPrediction, RemainderOrder};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// The constant block entering the endpoint expansions.
#[derive(Clone, Copy, Debug)]
pub struct Thm2Constants {
    pub r1_plus: Complex64,
    pub r1_minus: Complex64,
    pub r2_plus: Complex64,
    pub r2_minus: Complex64,
    pub r1_minus_prime: Complex64,
    /// Purely imaginary for every alpha.
    pub tau: Complex64,
}

/// Evaluate the constants at a given arc angle.
pub fn thm2_constants(alpha: f64) -> Thm2Constants {
    let i = Complex64::i();
    let e_half = Complex64::from_polar(1.0, alpha / 2.0); // e^{i alpha/2}
    let em_half = e_half.conj();
    let e1 = Complex64::from_polar(1.0, alpha); // e^{i alpha}
    let em1 = e1.conj();
    Thm2Constants {
        r1_plus: em_half / (48.0 * i) * (1.0 + em1 - 2.0 * e1),
        r1_minus: em_half / (16.0 * i) * (1.0 + 3.0 * e1),
        r2_plus: (16.0 - 9.0 * e1 + 43.0 * em1 - 2.0 * em1 * em1) / 1536.0,
        r2_minus: (-6.0 + 7.0 * e1 - 17.0 * em1) / 512.0,
        r1_minus_prime: e_half / 4.0 * (alpha / 2.0).cos().powi(2),
        tau: Complex64::new(0.0, -(1.0 + 2.0 * alpha.cos()) / 6.0), // (1+2cos a)/(6i)
    }
}

fn check_regime(n: usize, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < std::f64::consts::PI) {
        return Err(Error::invalid(format!("alpha = {alpha} outside (0, pi)")));
    }
    let rho = n as f64 * (alpha / 2.0).sin();
    if rho < 5.0 {
        return Err(Error::OutOfRegime(format!(
            "rho = n sin(alpha/2) = {rho} < 5; endpoint expansion not applicable"
        )));
    }
    Ok(rho)
}

/// `sqrt(pi i rho)` on the principal branch: `e^{i pi/4} sqrt(pi rho)`.
fn sqrt_pi_i_rho(rho: f64) -> Complex64 {
    Complex64::from_polar((std::f64::consts::PI * rho).sqrt(), std::f64::consts::FRAC_PI_4)
}

/// Endpoint value prediction: `phi_n(e^{i alpha}) / chi_n ~ gamma^n
/// e^{i alpha (n/2 - 1/4)} sqrt(pi i rho) [1 + r1_-/rho + r2_-/rho^2]`,
/// remainder `O(rho^-3)` (the rho^-3 coefficient is bounded but not
/// explicit, so the prediction stops one order short of it).
pub fn thm2_endpoint(n: usize, alpha: f64) -> Result<AsymptoticPrediction<Complex64>> {
    let rho = check_regime(n, alpha)?;
    let c = thm2_constants(alpha);
    let gamma_pow = ((alpha / 2.0).cos().ln() * n as f64).exp();
    let phase = Complex64::from_polar(1.0, alpha * (n as f64 / 2.0 - 0.25));
    let bracket = 1.0 + c.r1_minus / rho + c.r2_minus / (rho * rho);
    let value = gamma_pow * phase * sqrt_pi_i_rho(rho) * bracket;
    Ok(AsymptoticPrediction {
        value,
        remainder: RemainderOrder::InvRho3,
        n: Some(n),
        alpha: Some(alpha),
        s: None,
        z: None,
    })
}

/// Leading-coefficient prediction:
/// `chi_{n-1}^2 ~ gamma^{-2n+1} [1 + 1/(4n) + 5/(32 n^2)]`, remainder
/// `O(n^-3)`. Returned in the log domain as `ln chi^2_{n-1}` would overflow
/// the plain value for large n.
pub fn thm2_chi(n: usize, alpha: f64) -> Result<AsymptoticPrediction<f64>> {
    if n < 2 {
        return Err(Error::invalid(format!("n = {n} must be >= 2")));
    }
    if !(alpha > 0.0 && alpha < std::f64::consts::PI) {
        return Err(Error::invalid(format!("alpha = {alpha} outside (0, pi)")));
    }
    let nf = n as f64;
    let gamma = (alpha / 2.0).cos();
    let log_value = (-2.0 * nf + 1.0) * gamma.ln()
        + (1.0 + 0.25 / nf + 5.0 / (32.0 * nf * nf)).ln();
    Ok(AsymptoticPrediction {
        value: log_value,
        remainder: RemainderOrder::InvN3,
        n: Some(n),
        alpha: Some(alpha),
        s: None,
        z: None,
    })
}

/// The finite-n correction factor of `chi^2_{n-1} gamma^{2n-1}`:
/// `1 + 1/(4n) + 5/(32 n^2)`.
pub fn thm2_chi_bracket(n: usize) -> f64 {
    let nf = n as f64;
    1.0 + 0.25 / nf + 5.0 / (32.0 * nf * nf)
}

/// Derivative prediction at the endpoint:
/// `phi'_n(e^{i alpha}) / chi_n ~ (n/2) e^{-i alpha} (phi_n/chi_n)
///  + gamma^n e^{i alpha (n/2 - 5/4)} (sqrt(pi i rho) / (2 sin alpha)) B`,
/// with the bracket
/// `B = i rho^2 + e^{i alpha/2} rho + tau
///      + (r1_-(i rho^2 + tau) + r1_+ e^{i alpha/2} rho + r1_-') / rho
///      + (r2_- i rho^2 + r2_+ e^{i alpha/2} rho) / rho^2`.
/// The unknown `i r3_-/rho` bracket term (relative order rho^-3) is the
/// remainder; it cancels in the real combination used by the determinant
/// identity.
pub fn thm2_derivative(n: usize, alpha: f64) -> Result<AsymptoticPrediction<Complex64>> {
    let rho = check_regime(n, alpha)?;
    let c = thm2_constants(alpha);
    let i = Complex64::i();
    let e_half = Complex64::from_polar(1.0, alpha / 2.0);
    let endpoint = thm2_endpoint(n, alpha)?.value;
    let first = endpoint * Complex64::from_polar(n as f64 / 2.0, -alpha);
    let gamma_pow = ((alpha / 2.0).cos().ln() * n as f64).exp();
    let phase = Complex64::from_polar(1.0, alpha * (n as f64 / 2.0 - 1.25));
    let rho2 = rho * rho;
    let bracket = i * rho2
        + e_half * rho
        + c.tau
        + (c.r1_minus * (i * rho2 + c.tau) + c.r1_plus * e_half * rho + c.r1_minus_prime) / rho
        + (c.r2_minus * i * rho2 + c.r2_plus * e_half * rho) / rho2;
    let second = gamma_pow * phase * sqrt_pi_i_rho(rho) / (2.0 * alpha.sin()) * bracket;
    Ok(AsymptoticPrediction {
        value: first + second,
        remainder: RemainderOrder::InvRho3,
        n: Some(n),
        alpha: Some(alpha),
        s: None,
        z: None,
    })
}
