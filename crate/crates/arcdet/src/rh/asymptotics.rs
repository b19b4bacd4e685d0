//! Asymptotic predictions away from the endpoints, the arc-determinant and
//! gap-determinant expansions, and the exact logarithmic-derivative identity
//! they are checked against.

use super::constants::dyson_c0;
use super::parametrix::endpoint_disc_radius;
use super::szego::SzegoData;
use crate::error::{Error, Result};
use crate::opuc::eval::eval_at_endpoint;
use crate::opuc::ladder::OpucLadder;
use crate::scalar::Real;
use num_complex::Complex64;

/// Order symbol of the remainder attached to a prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemainderOrder {
    /// O(rho^-3), rho = n sin(alpha/2).
    InvRho3,
    /// O(n^-2)
    InvN2,
    /// O(n^-3)
    InvN3,
    /// O(1/s)
    InvS,
    /// O(1/(n sin^2(alpha/2)))
    InvNSin2,
    /// o(1)
    SmallO1,
}

impl std::fmt::Display for RemainderOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RemainderOrder::InvRho3 => write!(f, "rho^-3"),
            RemainderOrder::InvN2 => write!(f, "n^-2"),
            RemainderOrder::InvN3 => write!(f, "n^-3"),
            RemainderOrder::InvS => write!(f, "1/s"),
            RemainderOrder::InvNSin2 => write!(f, "1/(n sin^2(alpha/2))"),
            RemainderOrder::SmallO1 => write!(f, "o(1)"),
        }
    }
}

/// A predicted value plus the order of its remainder and an echo of the
/// inputs it was evaluated at.
#[derive(Clone, Copy, Debug)]
pub struct AsymptoticPrediction<V> {
    pub value: V,
    pub remainder: RemainderOrder,
    pub n: Option<usize>,
    pub alpha: Option<f64>,
    pub s: Option<f64>,
    pub z: Option<Complex64>,
}

/// Two-term interior asymptotics of the monic-normalized polynomial:
/// `phi_n(z)/chi_n ~ gamma^n psi^n(z) (D_inf / D(z)) [ (a + 1/a)/2
///   + (gamma/8n)( a e^{i alpha/2}/(z - e^{i alpha})
///                + e^{-i alpha/2}/(a (z - e^{-i alpha})) ) ]`,
/// remainder `O(n^-2)`, valid outside the endpoint discs.
pub fn asympt_phi_general(
    szego: &SzegoData,
    n: usize,
    z: Complex64,
) -> Result<AsymptoticPrediction<Complex64>> {
    let frame = szego.frame();
    let alpha = frame.alpha;
    let delta = endpoint_disc_radius(alpha);
    let up = frame.endpoint_upper();
    let dn = frame.endpoint_lower();
    if (z - up).norm() < delta || (z - dn).norm() < delta {
        return Err(Error::invalid(format!(
            "z = {z} inside an endpoint disc (radius {delta})"
        )));
    }
    if frame.arc_distance(z) < 1e-9 {
        return Err(Error::invalid(format!("z = {z} lies on the arc")));
    }
    let a = frame.a(z)?;
    let psi = frame.psi(z)?;
    let d = szego.d(z)?;
    let gamma = frame.gamma;
    // gamma^n psi^n in log form to postpone overflow as far as possible.
    let log_power = (gamma.ln() + psi.ln()) * n as f64;
    let power = log_power.exp();
    let e_half = Complex64::from_polar(1.0, alpha / 2.0);
    let bracket = (a + 1.0 / a) * 0.5
        + gamma / (8.0 * n as f64)
            * (a * e_half / (z - up) + e_half.conj() / (a * (z - dn)));
    let value = power * (szego.d_infinity() / d) * bracket;
    Ok(AsymptoticPrediction {
        value,
        remainder: RemainderOrder::InvN2,
        n: Some(n),
        alpha: Some(alpha),
        s: None,
        z: Some(z),
    })
}

/// Two-term leading-coefficient asymptotics for a general analytic weight:
/// `chi_{n-1}^2 ~ gamma^{-2n+1} / (D(0) D_inf) (1 + 1/(4n))`, remainder
/// `O(n^-2)`; returned as `ln chi_{n-1}^2`.
pub fn asympt_chi(szego: &SzegoData, n: usize) -> Result<AsymptoticPrediction<f64>> {
    if n < 1 {
        return Err(Error::invalid("n must be >= 1".to_string()));
    }
    let gamma = szego.frame().gamma;
    let d0 = szego.d(Complex64::new(0.0, 0.0))?;
    debug_assert!(d0.im.abs() <= 1e-10 * d0.norm());
    let nf = n as f64;
    let log_value = (-2.0 * nf + 1.0) * gamma.ln() - (d0.re * szego.d_infinity()).ln()
        + (1.0 + 0.25 / nf).ln();
    Ok(AsymptoticPrediction {
        value: log_value,
        remainder: RemainderOrder::InvN2,
        n: Some(n),
        alpha: Some(szego.frame().alpha),
        s: None,
        z: None,
    })
}

/// Fixed-arc determinant asymptotics:
/// `ln det T_{n-1}(alpha) ~ n^2 ln cos(alpha/2) - (1/4) ln(n sin(alpha/2))
///  + (1/12) ln 2 + 3 zeta'(-1)`, remainder `o(1)`.
pub fn widom_log_det(n: usize, alpha: f64) -> Result<AsymptoticPrediction<f64>> {
    if n < 2 || !(alpha > 0.0 && alpha < std::f64::consts::PI) {
        return Err(Error::invalid(format!(
            "need n >= 2 and alpha in (0, pi); got n = {n}, alpha = {alpha}"
        )));
    }
    let nf = n as f64;
    let value = nf * nf * (alpha / 2.0).cos().ln() - 0.25 * (nf * (alpha / 2.0).sin()).ln()
        + dyson_c0();
    Ok(AsymptoticPrediction {
        value,
        remainder: RemainderOrder::SmallO1,
        n: Some(n),
        alpha: Some(alpha),
        s: None,
        z: None,
    })
}

/// Large-s gap-determinant expansion:
/// `ln Delta(s) ~ -s^2/2 - (1/4) ln s + c_0`, remainder `O(1/s)`.
pub fn dyson_log_gap(s: f64) -> Result<AsymptoticPrediction<f64>> {
    if !(s >= 1.0) {
        return Err(Error::invalid(format!("s = {s} must be >= 1")));
    }
    Ok(AsymptoticPrediction {
        value: -0.5 * s * s - 0.25 * s.ln() + dyson_c0(),
        remainder: RemainderOrder::InvS,
        n: None,
        alpha: None,
        s: Some(s),
        z: None,
    })
}

/// Finite-n form of the gap expansion on the shrinking arc `alpha = 2s/n`:
/// `ln det T_{n-1}(2s/n) ~ n^2 ln cos(s/n) - (1/4) ln(n sin(s/n)) + c_0`,
/// remainder `O(1/(n sin(s/n))) + o(1) = O(1/s) + o(1)`.
pub fn dyson_toeplitz_log_det(n: usize, s: f64) -> Result<AsymptoticPrediction<f64>> {
    if !(s > 0.0) || (n as f64) <= s {
        return Err(Error::invalid(format!(
            "need n > s > 0; got n = {n}, s = {s}"
        )));
    }
    let nf = n as f64;
    let value =
        nf * nf * (s / nf).cos().ln() - 0.25 * (nf * (s / nf).sin()).ln() + dyson_c0();
    Ok(AsymptoticPrediction {
        value,
        remainder: RemainderOrder::InvS,
        n: Some(n),
        alpha: Some(2.0 * s / nf),
        s: Some(s),
        z: None,
    })
}

/// Two-term asymptotics of the logarithmic derivative of the arc
/// determinant: `d/d alpha ln det T_{n-1}(alpha)
/// ~ -n^2 sin(alpha/2)/(2 cos(alpha/2)) - cos(alpha/2)/(8 sin(alpha/2))`,
/// remainder `O(1/(n sin^2(alpha/2)))`.
pub fn deriv_asymptotic(n: usize, alpha: f64) -> Result<AsymptoticPrediction<f64>> {
    if n < 1 || !(alpha > 0.0 && alpha < std::f64::consts::PI) {
        return Err(Error::invalid(format!(
            "need n >= 1 and alpha in (0, pi); got n = {n}, alpha = {alpha}"
        )));
    }
    let half = alpha / 2.0;
    let nf = n as f64;
    let value = -nf * nf * half.sin() / (2.0 * half.cos()) - half.cos() / (8.0 * half.sin());
    Ok(AsymptoticPrediction {
        value,
        remainder: RemainderOrder::InvNSin2,
        n: Some(n),
        alpha: Some(alpha),
        s: None,
        z: None,
    })
}

/// Exact right-hand side of the determinant-derivative identity:
/// `d/d alpha ln det T_{n-1}(alpha) = (n/pi) |phi_n(e^{i alpha})|^2
///  - (1/pi) { phi_n(e^{-i alpha}) e^{i alpha} phi'_n(e^{i alpha}) + c.c. }`,
/// evaluated from the ladder. Real coefficients give
/// `phi_n(e^{-i alpha}) = conj(phi_n(e^{i alpha}))`.
pub fn deift_rhs<T: Real>(ladder: &OpucLadder<T>, n: usize) -> Result<T> {
    let eval = eval_at_endpoint(ladder, n)?;
    let phi = eval.phi;
    let dphi = eval.dphi;
    let (sin_a, cos_a) = T::of(ladder.alpha()).sin_cos();
    let x = num_complex::Complex::new(cos_a, sin_a);
    let norm2 = phi.re * phi.re + phi.im * phi.im;
    let cross = phi.conj() * x * dphi;
    let pi = T::pi();
    Ok((T::of_usize(n) * norm2 - (cross.re + cross.re)) / pi)
}
