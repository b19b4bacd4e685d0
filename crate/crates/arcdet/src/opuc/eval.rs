//! Evaluation of the orthonormal polynomials and their derivatives from the
//! reflection-coefficient ladder.

use super::ladder::OpucLadder;
use crate::error::{Error, Result};
use crate::scalar::Real;
use num_complex::Complex;

/// `phi_n`, `phi*_n` and derivatives at one point.
#[derive(Clone, Debug)]
pub struct PolyEval<T> {
    pub phi: Complex<T>,
    pub phi_star: Complex<T>,
    pub dphi: Complex<T>,
    pub dphi_star: Complex<T>,
}

/// Run the normalized recursion
/// `phi_{k+1} = (z phi_k - a_k phi*_k) / sqrt(1 - a_k^2)`,
/// `phi*_{k+1} = (phi*_k - a_k z phi_k) / sqrt(1 - a_k^2)`
/// from `phi_0 = phi*_0 = chi_0`, differentiating each step.
pub fn eval_poly<T: Real>(ladder: &OpucLadder<T>, n: usize, z: Complex<T>) -> Result<PolyEval<T>> {
    if n > ladder.n_max() {
        return Err(Error::invalid(format!(
            "degree {n} exceeds ladder n_max {}",
            ladder.n_max()
        )));
    }
    let chi0 = ladder.chi(0);
    let zero = Complex::new(T::zero(), T::zero());
    let mut phi = Complex::new(chi0, T::zero());
    let mut phi_star = phi;
    let mut dphi = zero;
    let mut dphi_star = zero;
    for k in 0..n {
        let a = ladder.reflection[k];
        let s = (T::one() - a * a).sqrt();
        let zphi = z * phi;
        let dz_phi = phi + z * dphi; // d/dz (z phi)
        let phi_next = (zphi - phi_star.scale(a)).unscale(s);
        let phi_star_next = (phi_star - zphi.scale(a)).unscale(s);
        let dphi_next = (dz_phi - dphi_star.scale(a)).unscale(s);
        let dphi_star_next = (dphi_star - dz_phi.scale(a)).unscale(s);
        phi = phi_next;
        phi_star = phi_star_next;
        dphi = dphi_next;
        dphi_star = dphi_star_next;
    }
    Ok(PolyEval {
        phi,
        phi_star,
        dphi,
        dphi_star,
    })
}

/// Both sides of the Christoffel-Darboux identity at a point `x` on the unit
/// circle: the direct sum `sum_{k<n} |phi_k(x)|^2` and the derivative
/// expression `2 Re(x conj(phi_n) phi'_n) - n |phi_n|^2`.
#[derive(Clone, Debug)]
pub struct CdSum<T> {
    pub direct: T,
    pub via_derivative: T,
}

pub fn cd_sum<T: Real>(ladder: &OpucLadder<T>, n: usize, x: Complex<T>) -> Result<CdSum<T>> {
    let modulus = (x.re * x.re + x.im * x.im).sqrt().as_f64();
    if (modulus - 1.0).abs() > 1e-12 {
        return Err(Error::invalid(format!(
            "|x| = {modulus} is not on the unit circle"
        )));
    }
    if n > ladder.n_max() {
        return Err(Error::invalid(format!(
            "degree {n} exceeds ladder n_max {}",
            ladder.n_max()
        )));
    }
    // Accumulate the partial sum while running the recursion once.
    let chi0 = ladder.chi(0);
    let zero = Complex::new(T::zero(), T::zero());
    let mut phi = Complex::new(chi0, T::zero());
    let mut phi_star = phi;
    let mut dphi = zero;
    let mut dphi_star = zero;
    let mut direct = T::zero();
    for k in 0..n {
        direct += phi.re * phi.re + phi.im * phi.im;
        let a = ladder.reflection[k];
        let s = (T::one() - a * a).sqrt();
        let zphi = x * phi;
        let dz_phi = phi + x * dphi;
        let phi_next = (zphi - phi_star.scale(a)).unscale(s);
        let phi_star_next = (phi_star - zphi.scale(a)).unscale(s);
        let dphi_next = (dz_phi - dphi_star.scale(a)).unscale(s);
        let dphi_star_next = (dphi_star - dz_phi.scale(a)).unscale(s);
        phi = phi_next;
        phi_star = phi_star_next;
        dphi = dphi_next;
        dphi_star = dphi_star_next;
    }
    let cross = x * phi.conj() * dphi;
    let norm2 = phi.re * phi.re + phi.im * phi.im;
    let via_derivative = (cross.re + cross.re) - T::of_usize(n) * norm2;
    Ok(CdSum {
        direct,
        via_derivative,
    })
}

/// Shorthand: evaluation at `e^{i alpha}` (the arc endpoint), with the angle
/// upconverted to the working precision.
pub fn eval_at_endpoint<T: Real>(ladder: &OpucLadder<T>, n: usize) -> Result<PolyEval<T>> {
    let (s, c) = T::of(ladder.alpha()).sin_cos();
    eval_poly(ladder, n, Complex::new(c, s))
}
