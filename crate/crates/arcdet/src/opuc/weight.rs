//! Orthogonality weights on the arc `alpha <= theta <= 2 pi - alpha`.

use crate::error::{Error, Result};
use crate::scalar::Real;
use std::fmt;
use std::sync::Arc;

/// Weight function shape on the arc.
#[derive(Clone)]
pub enum WeightKind {
    /// f = 1 on the arc (trigonometric moments in closed form).
    ConstantOne,
    /// Finite cosine series `c[0] + sum_{j>=1} c[j] cos(j theta)`; evaluable
    /// exactly at any working precision via the Chebyshev recurrence.
    CosineSeries(Vec<f64>),
    /// Arbitrary even positive analytic callable; standard precision only.
    Callable(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightKind::ConstantOne => write!(f, "ConstantOne"),
            WeightKind::CosineSeries(c) => write!(f, "CosineSeries({c:?})"),
            WeightKind::Callable(_) => write!(f, "Callable(..)"),
        }
    }
}

/// Weight on the arc: the half-gap angle `alpha` plus the function shape.
#[derive(Clone, Debug)]
pub struct ArcWeight {
    alpha: f64,
    kind: WeightKind,
}

impl ArcWeight {
    /// The pure arc indicator weight, f = 1.
    pub fn constant_one(alpha: f64) -> Result<ArcWeight> {
        Self::with_kind(alpha, WeightKind::ConstantOne)
    }

    /// Weight given by a finite cosine series.
    pub fn cosine_series(alpha: f64, coeffs: Vec<f64>) -> Result<ArcWeight> {
        Self::with_kind(alpha, WeightKind::CosineSeries(coeffs))
    }

    /// Weight given by a callable `f(theta)`; must be even about `theta = pi`
    /// (equivalently f(theta) = f(2 pi - theta)) and strictly positive.
    pub fn callable(
        alpha: f64,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<ArcWeight> {
        Self::with_kind(alpha, WeightKind::Callable(Arc::new(f)))
    }

    fn with_kind(alpha: f64, kind: WeightKind) -> Result<ArcWeight> {
        if !(alpha > 0.0 && alpha < std::f64::consts::PI) {
            return Err(Error::invalid(format!(
                "alpha = {alpha} must lie strictly inside (0, pi)"
            )));
        }
        let w = ArcWeight { alpha, kind };
        // Sampled positivity / symmetry check across the arc.
        let m = 1024;
        for i in 0..m {
            let theta = alpha + (2.0 * std::f64::consts::PI - 2.0 * alpha) * (i as f64 + 0.5)
                / m as f64;
            let v = w.eval_f64(theta);
            if !(v > 0.0) {
                return Err(Error::invalid(format!(
                    "weight non-positive at theta = {theta}: f = {v}"
                )));
            }
            let mirrored = w.eval_f64(2.0 * std::f64::consts::PI - theta);
            if (v - mirrored).abs() > 1e-12 * v.abs().max(1.0) {
                return Err(Error::invalid(format!(
                    "weight not symmetric about pi at theta = {theta}"
                )));
            }
        }
        Ok(w)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `gamma = cos(alpha / 2)`.
    pub fn gamma(&self) -> f64 {
        (self.alpha / 2.0).cos()
    }

    pub fn kind(&self) -> &WeightKind {
        &self.kind
    }

    pub fn is_constant_one(&self) -> bool {
        matches!(self.kind, WeightKind::ConstantOne)
    }

    /// True when the weight evaluates exactly at extended precision.
    pub fn supports_extended(&self) -> bool {
        !matches!(self.kind, WeightKind::Callable(_))
    }

    pub fn eval_f64(&self, theta: f64) -> f64 {
        self.eval::<f64>(theta)
    }

    /// Evaluate the weight at angle `theta` (given at f64 resolution) in the
    /// working precision `T`. Callable weights round through f64.
    pub fn eval<T: Real>(&self, theta: f64) -> T {
        match &self.kind {
            WeightKind::ConstantOne => T::one(),
            WeightKind::CosineSeries(c) => cosine_series_eval::<T>(c, T::of(theta)),
            WeightKind::Callable(f) => T::of(f(theta)),
        }
    }

    /// ln f(theta); used by the Szego-function quadrature.
    pub fn ln_eval(&self, theta: f64) -> f64 {
        self.eval_f64(theta).ln()
    }

    /// d/dtheta ln f(theta). Closed form for series weights, central
    /// difference for callables.
    pub fn dln_eval(&self, theta: f64) -> f64 {
        match &self.kind {
            WeightKind::ConstantOne => 0.0,
            WeightKind::CosineSeries(c) => {
                let mut df = 0.0;
                for (j, &cj) in c.iter().enumerate().skip(1) {
                    df -= cj * j as f64 * (j as f64 * theta).sin();
                }
                df / self.eval_f64(theta)
            }
            WeightKind::Callable(f) => {
                let h = 1e-5;
                (f(theta + h).ln() - f(theta - h).ln()) / (2.0 * h)
            }
        }
    }
}

/// Evaluate `c[0] + sum c[j] cos(j theta)` via the cos(k theta) recurrence.
fn cosine_series_eval<T: Real>(coeffs: &[f64], theta: T) -> T {
    let mut acc = T::zero();
    if coeffs.is_empty() {
        return acc;
    }
    acc = T::of(coeffs[0]);
    if coeffs.len() == 1 {
        return acc;
    }
    let c1 = theta.cos();
    let two = T::of(2.0);
    let mut prev = T::one();
    let mut cur = c1;
    for &cj in &coeffs[1..] {
        acc += T::of(cj) * cur;
        let next = two * c1 * cur - prev;
        prev = cur;
        cur = next;
    }
    acc
}
