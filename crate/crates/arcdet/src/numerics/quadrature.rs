//! Gauss-Legendre quadrature with Newton-refined nodes.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Nodes and weights on (-1, 1).
#[derive(Clone, Debug)]
pub struct QuadratureRule<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
    pub order: usize,
}

impl<T: Real> QuadratureRule<T> {
    /// Integrate `f` over `[a, b]` by affine transplantation.
    pub fn integrate(&self, a: T, b: T, mut f: impl FnMut(T) -> T) -> T {
        let half = T::of(0.5);
        let mid = (a + b) * half;
        let rad = (b - a) * half;
        let mut acc = T::zero();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + rad * x);
        }
        acc * rad
    }
}

/// Legendre polynomial value and derivative at `x` by the three-term recurrence.
fn legendre_pair<T: Real>(order: usize, x: T) -> (T, T) {
    let mut p_prev = T::one();
    let mut p = x;
    for k in 1..order {
        let kf = T::of_usize(k);
        let next = ((T::of(2.0) * kf + T::one()) * x * p - kf * p_prev) / (kf + T::one());
        p_prev = p;
        p = next;
    }
    // P'_n(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let nf = T::of_usize(order);
    let dp = nf * (x * p - p_prev) / (x * x - T::one());
    (p, dp)
}

/// Gauss-Legendre rule of the given order.
///
/// Nodes start from the Chebyshev approximation and are polished by Newton
/// iteration; weights are `2 / ((1-x^2) P'_n(x)^2)`. The rule is mirrored
/// about zero so symmetry holds exactly.
pub fn gauss_legendre<T: Real>(order: usize) -> Result<QuadratureRule<T>> {
    if order < 1 || order > 10_000 {
        return Err(Error::invalid(format!(
            "quadrature order {order} outside 1..=10000"
        )));
    }
    let mut nodes = vec![T::zero(); order];
    let mut weights = vec![T::zero(); order];
    let tol = T::eps() * T::of(32.0);
    let half = order / 2;
    for i in 0..half {
        // Chebyshev initial guess for the i-th positive root (descending).
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (order as f64 + 0.5)).cos();
        let mut x = T::of(guess);
        let mut converged = false;
        for _ in 0..100 {
            let (p, dp) = legendre_pair(order, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() <= tol * (T::one() + x.abs()) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Conditioning {
                index: i,
                message: "Legendre Newton iteration did not converge".into(),
            });
        }
        let (_, dp) = legendre_pair(order, x);
        let w = T::of(2.0) / ((T::one() - x * x) * dp * dp);
        nodes[order - 1 - i] = x;
        weights[order - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if order % 2 == 1 {
        let x = T::zero();
        let (_, dp) = legendre_pair(order, x);
        nodes[half] = x;
        weights[half] = T::of(2.0) / (dp * dp);
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dd::Dd;

    #[test]
    fn order_one_is_midpoint() {
        let q = gauss_legendre::<f64>(1).unwrap();
        assert_eq!(q.nodes, vec![0.0]);
        assert_eq!(q.weights, vec![2.0]);
    }

    #[test]
    fn order_two_roots_of_p2() {
        // Roots of P2 = (3x^2-1)/2 are +-1/sqrt(3).
        let q = gauss_legendre::<f64>(2).unwrap();
        let r = (1.0f64 / 3.0).sqrt();
        assert!((q.nodes[0] + r).abs() < 1e-15);
        assert!((q.nodes[1] - r).abs() < 1e-15);
        assert!((q.weights[0] - 1.0).abs() < 1e-15);
        assert!((q.weights[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn exp_integral_order_16() {
        // integral of e^x over [-1,1] = e - 1/e.
        let q = gauss_legendre::<f64>(16).unwrap();
        let got = q.integrate(-1.0, 1.0, f64::exp);
        let exact = 1.0f64.exp() - (-1.0f64).exp();
        assert!((got - exact).abs() < 1e-14);
    }

    #[test]
    fn weights_sum_and_symmetry() {
        for order in [3, 8, 33, 64, 257] {
            let q = gauss_legendre::<f64>(order).unwrap();
            let sum: f64 = q.weights.iter().sum();
            assert!((sum - 2.0).abs() < 1e-13, "order {order} weight sum {sum}");
            for i in 0..order {
                assert_eq!(q.nodes[i], -q.nodes[order - 1 - i]);
                assert!(q.nodes.windows(2).all(|w| w[0] < w[1]));
                assert!(q.weights[i] > 0.0);
            }
        }
    }

    #[test]
    fn monomial_exactness() {
        // Degree <= 2m-1 is integrated exactly.
        for order in [2usize, 5, 9, 16] {
            let q = gauss_legendre::<f64>(order).unwrap();
            for deg in 0..(2 * order) {
                let got = q.integrate(-1.0, 1.0, |x| x.powi(deg as i32));
                let exact = if deg % 2 == 1 {
                    0.0
                } else {
                    2.0 / (deg as f64 + 1.0)
                };
                assert!(
                    (got - exact).abs() < 1e-13 * (1.0 + exact.abs()),
                    "order {order} deg {deg}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn nodes_match_known_values() {
        // 5-point nodes/weights (Abramowitz-Stegun 25.4.29).
        let q = gauss_legendre::<f64>(5).unwrap();
        let nodes = [
            -0.906179845938664,
            -0.5384693101056831,
            0.0,
            0.5384693101056831,
            0.906179845938664,
        ];
        let weights = [
            0.23692688505618908,
            0.47862867049936647,
            0.5688888888888889,
            0.47862867049936647,
            0.23692688505618908,
        ];
        for i in 0..5 {
            assert!((q.nodes[i] - nodes[i]).abs() < 1e-14);
            assert!((q.weights[i] - weights[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn extended_precision_rule() {
        let q = gauss_legendre::<Dd>(24).unwrap();
        let sum = q.weights.iter().fold(Dd::ZERO, |a, &w| a + w) - Dd::from_f64(2.0);
        assert!(sum.hi.abs() < 1e-29);
        // Nodes should refine the f64 ones, not disagree with them.
        let qf = gauss_legendre::<f64>(24).unwrap();
        for i in 0..24 {
            assert!((q.nodes[i].hi - qf.nodes[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_bad_order() {
        assert!(gauss_legendre::<f64>(0).is_err());
        assert!(gauss_legendre::<f64>(10_001).is_err());
    }
}
