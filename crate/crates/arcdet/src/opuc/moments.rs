//! Trigonometric moments of arc weights.

use super::weight::{ArcWeight, WeightKind};
use crate::error::Result;
use crate::numerics::quadrature::gauss_legendre;
use crate::scalar::Real;

/// Moment of the constant-one arc weight, in closed form:
/// `c_0 = 1 - alpha/pi`, `c_k = -sin(alpha k) / (pi k)`, `c_{-k} = c_k`.
pub fn arc_moment<T: Real>(k: i64, alpha: f64) -> T {
    debug_assert!(alpha > 0.0 && alpha < std::f64::consts::PI);
    let a = T::of(alpha);
    if k == 0 {
        return T::one() - a / T::pi();
    }
    let kf = T::of(k.unsigned_abs() as f64);
    -(a * kf).sin() / (T::pi() * kf)
}

/// Result of a quadrature moment with its node-doubling convergence check.
#[derive(Clone, Debug)]
pub struct MomentTable<T> {
    /// `c_k` for `k = 0..=k_max`.
    pub values: Vec<T>,
    pub converged: bool,
    /// Largest change across the final node doubling.
    pub doubling_delta: f64,
    pub nodes_used: usize,
}

/// Single quadrature moment `(1/2pi) int_alpha^{2pi-alpha} cos(k theta) f dtheta`.
pub fn weight_moment<T: Real>(weight: &ArcWeight, k: usize, nodes: usize) -> Result<T> {
    Ok(moment_block::<T>(weight, k, nodes)?[k])
}

/// Moments `c_0..=c_{k_max}` from one quadrature grid of the given size.
fn moment_block<T: Real>(weight: &ArcWeight, k_max: usize, nodes: usize) -> Result<Vec<T>> {
    let alpha = weight.alpha();
    let rule = gauss_legendre::<T>(nodes)?;
    let two_pi = T::pi() + T::pi();
    let a = T::of(alpha);
    let mid = (a + (two_pi - a)) * T::of(0.5); // = pi
    let rad = (two_pi - a - a) * T::of(0.5);
    // Per node: theta, weight * f(theta) / (2 pi); cos(k theta) by recurrence.
    let m = nodes;
    let mut fw = vec![T::zero(); m];
    let mut cos1 = vec![T::zero(); m];
    let mut cos_prev = vec![T::one(); m];
    let mut cos_cur = vec![T::zero(); m];
    for i in 0..m {
        let theta = mid + rad * rule.nodes[i];
        fw[i] = weight.eval::<T>(theta.as_f64()) * rule.weights[i] * rad / two_pi;
        let c = theta.cos();
        cos1[i] = c;
        cos_cur[i] = c;
    }
    let mut values = Vec::with_capacity(k_max + 1);
    // k = 0
    values.push(fw.iter().fold(T::zero(), |s, &x| s + x));
    let two = T::of(2.0);
    for _k in 1..=k_max {
        let mut acc = T::zero();
        for i in 0..m {
            acc += fw[i] * cos_cur[i];
        }
        values.push(acc);
        for i in 0..m {
            let next = two * cos1[i] * cos_cur[i] - cos_prev[i];
            cos_prev[i] = cos_cur[i];
            cos_cur[i] = next;
        }
    }
    Ok(values)
}

/// All moments `c_0..=c_{k_max}` of a weight, with automatic node doubling
/// for quadrature-based weights.
pub fn moments<T: Real>(weight: &ArcWeight, k_max: usize, start_nodes: usize) -> Result<MomentTable<T>> {
    if matches!(weight.kind(), WeightKind::ConstantOne) {
        return Ok(MomentTable {
            values: (0..=k_max as i64)
                .map(|k| arc_moment::<T>(k, weight.alpha()))
                .collect(),
            converged: true,
            doubling_delta: 0.0,
            nodes_used: 0,
        });
    }
    // Resolve the oscillation cos(k_max theta): a few nodes per period.
    let floor_nodes = (2 * k_max).max(start_nodes).max(64);
    let mut nodes = floor_nodes;
    let mut prev = moment_block::<T>(weight, k_max, nodes)?;
    loop {
        let cur = moment_block::<T>(weight, k_max, 2 * nodes)?;
        let mut delta = 0.0f64;
        for (p, c) in prev.iter().zip(&cur) {
            delta = delta.max((*p - *c).abs().as_f64());
        }
        let scale = cur[0].abs().as_f64().max(1.0);
        if delta <= 1e-12 * scale {
            return Ok(MomentTable {
                values: cur,
                converged: true,
                doubling_delta: delta,
                nodes_used: 2 * nodes,
            });
        }
        nodes *= 2;
        prev = cur;
        if 2 * nodes > 16_384 {
            let values = moment_block::<T>(weight, k_max, 2 * nodes)?;
            let mut delta = 0.0f64;
            for (p, c) in prev.iter().zip(&values) {
                delta = delta.max((*p - *c).abs().as_f64());
            }
            return Ok(MomentTable {
                values,
                converged: false,
                doubling_delta: delta,
                nodes_used: 2 * nodes,
            });
        }
    }
}
