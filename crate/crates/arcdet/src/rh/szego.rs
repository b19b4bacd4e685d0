//! The Szego function of an arc weight: the function analytic off the arc
//! with boundary product `D_+ D_- = f` and a finite limit `D_infinity`.

use super::conformal::ConformalFrame;
use crate::error::Result;
use crate::numerics::quadrature::gauss_legendre;
use crate::opuc::weight::ArcWeight;
use num_complex::Complex64;

const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Boundary value of `w` from outside the circle:
/// `w_+(e^{i theta}) = i e^{i theta/2} sqrt(2 (cos alpha - cos theta))`.
fn w_plus(alpha: f64, theta: f64) -> Complex64 {
    Complex64::i() * Complex64::from_polar(1.0, theta / 2.0) * q_radical(alpha, theta)
}

/// `sqrt(2 (cos alpha - cos theta))` in product form (no cancellation near
/// the endpoints).
fn q_radical(alpha: f64, theta: f64) -> f64 {
    2.0 * (((theta + alpha) / 2.0).sin() * ((theta - alpha) / 2.0).sin()).sqrt()
}

/// Cached contour data for one weight.
///
/// Everything is expressed through the Cauchy transform
/// `C(z) = (1/2 pi i) int_arc ghat(xi) d xi / (xi - z)`, `ghat = ln f / w_+`,
/// with the arc oriented from `2 pi - alpha` down to `alpha`; then
/// `D(z) = exp[w(z) C(z)]` and `D_infinity = exp[-(1/2 pi i) int ghat d xi]`.
/// The angular substitution `theta(t) = alpha + (2 pi - 2 alpha) sin^2(t/2)`
/// removes the endpoint inverse-square-root singularities of `ghat`.
#[derive(Clone, Debug)]
pub struct SzegoData {
    weight: ArcWeight,
    frame: ConformalFrame,
    pub nodes_used: usize,
    pub converged: bool,
    /// Quadrature angles theta_i (interior of the arc).
    thetas: Vec<f64>,
    /// xi-space quadrature measures: `int h(xi) dxi/(2 pi i)` over the
    /// oriented arc is approximated by `sum measure_i * h(xi_i)`.
    measures: Vec<Complex64>,
    /// ghat(xi_i), cached.
    ghats: Vec<Complex64>,
    d_infinity: f64,
}

fn theta_of_t(alpha: f64, t: f64) -> f64 {
    alpha + (TWO_PI - 2.0 * alpha) * (t / 2.0).sin().powi(2)
}

impl SzegoData {
    /// Build the cached rule; `nodes` is the starting node count, doubled
    /// once for a convergence check on `D_infinity`.
    pub fn new(weight: &ArcWeight, nodes: usize) -> Result<SzegoData> {
        let frame = ConformalFrame::new(weight.alpha())?;
        let alpha = weight.alpha();
        let build = |m: usize| -> Result<(Vec<f64>, Vec<Complex64>, Vec<Complex64>)> {
            let rule = gauss_legendre::<f64>(m)?;
            let mut thetas = Vec::with_capacity(m);
            let mut measures = Vec::with_capacity(m);
            let mut ghats = Vec::with_capacity(m);
            for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
                // Map (-1,1) to t in (0, pi); d theta = (pi - alpha) sin t dt.
                let t = std::f64::consts::PI * (x + 1.0) / 2.0;
                let theta = theta_of_t(alpha, t);
                let jac = (std::f64::consts::PI - alpha) * t.sin() * w * std::f64::consts::PI
                    / 2.0;
                // d xi = i e^{i theta} d theta; the contour runs from
                // 2 pi - alpha down to alpha, flipping the sign.
                let dxi = -Complex64::i() * Complex64::from_polar(1.0, theta) * jac;
                let measure = dxi / (TWO_PI * Complex64::i());
                // ghat stays bounded: ln f / w_+ with the 1/sqrt removed by
                // the Jacobian's sin t factor.
                let ghat = weight.ln_eval(theta) / w_plus(alpha, theta);
                thetas.push(theta);
                measures.push(measure);
                ghats.push(ghat);
            }
            Ok((thetas, measures, ghats))
        };
        let nodes = nodes.max(32);
        let (_, m1, g1) = build(nodes)?;
        let (t2, m2, g2) = build(2 * nodes)?;
        let dinf = |ms: &[Complex64], gs: &[Complex64]| -> Complex64 {
            let total: Complex64 = ms.iter().zip(gs).map(|(m, g)| m * g).sum();
            (-total).exp()
        };
        let coarse = dinf(&m1, &g1);
        let fine = dinf(&m2, &g2);
        let converged = (coarse - fine).norm() <= 1e-8 * fine.norm().max(1.0);
        // Symmetric weights give a real limit; rounding in the paired nodes
        // leaves a residue that grows as the arc degenerates.
        debug_assert!(
            fine.im.abs() < 1e-7 * fine.norm().max(1.0),
            "D_infinity imaginary residue {:e}",
            fine.im
        );
        Ok(SzegoData {
            weight: weight.clone(),
            frame,
            nodes_used: 2 * nodes,
            converged,
            thetas: t2,
            measures: m2,
            ghats: g2,
            d_infinity: fine.re,
        })
    }

    pub fn weight(&self) -> &ArcWeight {
        &self.weight
    }

    pub fn frame(&self) -> &ConformalFrame {
        &self.frame
    }

    /// `D_infinity = lim_{z->inf} D(z)`; real and positive for the symmetric
    /// weights handled here.
    pub fn d_infinity(&self) -> f64 {
        self.d_infinity
    }

    /// Evaluate `D(z)` off the arc.
    ///
    /// Within distance 0.01 of the arc interior the Cauchy pole is subtracted
    /// to two terms and reinstated in closed form, so boundary products stay
    /// accurate at offsets far below the node spacing.
    pub fn d(&self, z: Complex64) -> Result<Complex64> {
        if self.weight.is_constant_one() {
            self.frame.w(z)?; // still reject points on the arc
            return Ok(Complex64::new(1.0, 0.0));
        }
        let w = self.frame.w(z)?;
        let cauchy = self.cauchy(z);
        Ok((w * cauchy).exp())
    }

    fn cauchy(&self, z: Complex64) -> Complex64 {
        let alpha = self.weight.alpha();
        let theta0 = z.arg().rem_euclid(TWO_PI);
        let near = self.frame.arc_distance(z) < 0.01
            && theta0 > alpha + 0.05
            && theta0 < TWO_PI - alpha - 0.05;
        if near {
            self.cauchy_near(z)
        } else {
            self.cauchy_far(z)
        }
    }

    fn cauchy_far(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for ((theta, m), g) in self.thetas.iter().zip(&self.measures).zip(&self.ghats) {
            acc += m * g / (Complex64::from_polar(1.0, *theta) - z);
        }
        acc
    }

    /// Pole-subtracted evaluation; exact algebra plus a smooth-integrand
    /// quadrature, valid at any distance from the arc interior.
    fn cauchy_near(&self, z: Complex64) -> Complex64 {
        let alpha = self.weight.alpha();
        let theta0 = z.arg().rem_euclid(TWO_PI);
        // Two-term pole subtraction at the foot point xi0 = e^{i theta0}.
        let xi0 = Complex64::from_polar(1.0, theta0);
        let g0 = self.weight.ln_eval(theta0) / w_plus(alpha, theta0);
        // d ghat/d theta = (dlnf - lnf (i/2 + sin theta / q^2)) / w_+.
        let q2 = q_radical(alpha, theta0).powi(2);
        let dg_dtheta = (Complex64::new(self.weight.dln_eval(theta0), 0.0)
            - self.weight.ln_eval(theta0) * Complex64::new(theta0.sin() / q2, 0.5))
            / w_plus(alpha, theta0);
        let g1 = dg_dtheta / (Complex64::i() * xi0);
        let mut acc = Complex64::new(0.0, 0.0);
        for ((theta, m), g) in self.thetas.iter().zip(&self.measures).zip(&self.ghats) {
            let xi = Complex64::from_polar(1.0, *theta);
            let regular = g - g0 - g1 * (xi - xi0);
            acc += m * regular / (xi - z);
        }
        // Closed forms along the oriented arc: int dxi/(xi - z) and
        // int (xi - xi0) dxi/(xi - z) = (xi_end - xi_start) + (z - xi0) L0.
        let l0 = self.arc_log(z);
        let e_up = Complex64::from_polar(1.0, alpha);
        let endpoints_diff = e_up - e_up.conj(); // 2 i sin(alpha)
        let l1 = endpoints_diff + (z - xi0) * l0;
        acc + (g0 * l0 + g1 * l1) / (TWO_PI * Complex64::i())
    }

    /// `int_arc d xi / (xi - z)` along the orientation from `2 pi - alpha` to
    /// `alpha`: telescoping sum of exact logarithm increments, each below pi
    /// in argument, so the branch is tracked without discretization error.
    fn arc_log(&self, z: Complex64) -> Complex64 {
        let alpha = self.weight.alpha();
        let theta0 = z.arg().rem_euclid(TWO_PI);
        // Concentrate split points near theta0 so no increment wraps past pi.
        let mut angles: Vec<f64> = Vec::with_capacity(520);
        let segments = 256;
        for k in 0..=segments {
            angles.push((TWO_PI - alpha) - (TWO_PI - 2.0 * alpha) * k as f64 / segments as f64);
        }
        for k in 1..=128 {
            let d = 0.02 * k as f64 / 128.0;
            for cand in [theta0 - d, theta0 + d] {
                if cand > alpha && cand < TWO_PI - alpha {
                    angles.push(cand);
                }
            }
        }
        angles.sort_by(|a, b| b.partial_cmp(a).unwrap());
        angles.dedup();
        let mut total = Complex64::new(0.0, 0.0);
        let mut prev = Complex64::from_polar(1.0, angles[0]) - z;
        for &theta in &angles[1..] {
            let cur = Complex64::from_polar(1.0, theta) - z;
            total += (cur / prev).ln();
            prev = cur;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn exp_cos_weight(alpha: f64) -> ArcWeight {
        ArcWeight::callable(alpha, |theta| theta.cos().exp()).unwrap()
    }

    #[test]
    fn constant_weight_gives_unit_d() {
        let w = ArcWeight::constant_one(0.7).unwrap();
        let s = SzegoData::new(&w, 64).unwrap();
        assert_eq!(s.d_infinity(), 1.0);
        let d = s.d(Complex64::new(2.0, 1.0)).unwrap();
        assert_eq!(d, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn d_infinity_converges_under_doubling() {
        let w = exp_cos_weight(0.6);
        let a = SzegoData::new(&w, 64).unwrap();
        let b = SzegoData::new(&w, 128).unwrap();
        assert!(a.converged && b.converged);
        assert!((a.d_infinity() - b.d_infinity()).abs() < 1e-10);
    }

    #[test]
    fn d_tends_to_d_infinity() {
        let w = exp_cos_weight(0.8);
        let s = SzegoData::new(&w, 128).unwrap();
        for r in [1e3, 1e4] {
            let d = s.d(Complex64::new(r, r / 3.0)).unwrap();
            assert!(
                (d - s.d_infinity()).norm() < 20.0 / r,
                "r={r}: {d} vs {}",
                s.d_infinity()
            );
        }
    }

    #[test]
    fn boundary_product_is_f_at_midarc() {
        // D_+ D_- = f at theta = pi, via small offsets plus Richardson.
        for weight in [exp_cos_weight(0.6), exp_cos_weight(1.9)] {
            let s = SzegoData::new(&weight, 128).unwrap();
            let x = Complex64::from_polar(1.0, PI);
            let prod = |eps: f64| -> Complex64 {
                let p = s.d(x * (1.0 + eps)).unwrap();
                let m = s.d(x * (1.0 - eps)).unwrap();
                p * m
            };
            let extrap = 2.0 * prod(5e-7) - prod(1e-6);
            let f = weight.eval_f64(PI);
            assert!(
                (extrap - f).norm() < 1e-8 * f.abs(),
                "alpha={}: {extrap} vs {f}",
                weight.alpha()
            );
        }
    }

    #[test]
    fn boundary_product_off_center() {
        let weight = exp_cos_weight(0.9);
        let s = SzegoData::new(&weight, 128).unwrap();
        for frac in [0.25, 0.6, 0.85] {
            let theta = 0.9 + (2.0 * PI - 1.8) * frac;
            let x = Complex64::from_polar(1.0, theta);
            let prod = |eps: f64| -> Complex64 {
                s.d(x * (1.0 + eps)).unwrap() * s.d(x * (1.0 - eps)).unwrap()
            };
            let extrap = 2.0 * prod(5e-7) - prod(1e-6);
            let f = weight.eval_f64(theta);
            assert!(
                (extrap - f).norm() < 1e-7 * f.abs(),
                "theta={theta}: {extrap} vs {f}"
            );
        }
    }

    #[test]
    fn near_and_far_paths_agree() {
        // At a few node spacings from the arc both evaluation paths are
        // accurate and must coincide.
        let weight = exp_cos_weight(0.7);
        let s = SzegoData::new(&weight, 128).unwrap();
        for dist in [0.3, 0.5] {
            for theta in [1.8, 2.5, std::f64::consts::PI] {
                for side in [1.0 + dist, 1.0 - dist] {
                    let z = Complex64::from_polar(side, theta);
                    let near = s.cauchy_near(z);
                    let far = s.cauchy_far(z);
                    assert!(
                        (near - far).norm() < 1e-9,
                        "dist={dist} theta={theta}: {near} vs {far}"
                    );
                }
            }
        }
    }

    #[test]
    fn szego_consistency_with_full_circle_theorem() {
        // As alpha -> 0, D(0) * D_infinity -> exp((1/2pi) int ln f dtheta);
        // for f = e^{cos theta} the integral vanishes, so the product -> 1.
        let weight = exp_cos_weight(1e-4);
        let s = SzegoData::new(&weight, 256).unwrap();
        let d0 = s.d(Complex64::new(0.0, 0.0)).unwrap();
        let prod = d0.re * s.d_infinity();
        assert!(d0.im.abs() < 2e-7, "im residue {:e}", d0.im);
        assert!((prod - 1.0).abs() < 1e-6, "product = {prod}");
    }
}
