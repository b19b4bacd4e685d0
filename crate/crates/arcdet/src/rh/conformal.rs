//! The conformal map `psi` of the arc exterior onto the unit-disk exterior,
//! the square root `w(z) = sqrt((z - e^{i alpha})(z - e^{-i alpha}))` with its
//! branch cut on the arc, the quarter root `a(z)`, and `omega(z)`.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Branch data for the arc `alpha <= theta <= 2 pi - alpha`.
#[derive(Clone, Copy, Debug)]
pub struct ConformalFrame {
    pub alpha: f64,
    pub gamma: f64,
    cos_alpha: f64,
    endpoint: Complex64,
}

impl ConformalFrame {
    pub fn new(alpha: f64) -> Result<ConformalFrame> {
        if !(alpha > 0.0 && alpha < std::f64::consts::PI) {
            return Err(Error::invalid(format!(
                "alpha = {alpha} must lie strictly inside (0, pi)"
            )));
        }
        Ok(ConformalFrame {
            alpha,
            gamma: (alpha / 2.0).cos(),
            cos_alpha: alpha.cos(),
            endpoint: Complex64::from_polar(1.0, alpha),
        })
    }

    pub fn endpoint_upper(&self) -> Complex64 {
        self.endpoint
    }

    pub fn endpoint_lower(&self) -> Complex64 {
        self.endpoint.conj()
    }

    /// Distance from z to the closed arc.
    pub fn arc_distance(&self, z: Complex64) -> f64 {
        let r = z.norm();
        if r == 0.0 {
            return 1.0;
        }
        let theta = z.arg().rem_euclid(2.0 * std::f64::consts::PI);
        if theta >= self.alpha && theta <= 2.0 * std::f64::consts::PI - self.alpha {
            (r - 1.0).abs()
        } else {
            (z - self.endpoint)
                .norm()
                .min((z - self.endpoint.conj()).norm())
        }
    }

    fn check_off_arc(&self, z: Complex64) -> Result<()> {
        if self.arc_distance(z) < 1e-12 {
            return Err(Error::Boundary(format!(
                "z = {z} lies on the orthogonality arc"
            )));
        }
        Ok(())
    }

    /// `w(z) = sqrt(z^2 - 2 z cos(alpha) + 1)`, analytic off the arc, with
    /// `w(z)/z -> 1` at infinity.
    ///
    /// Computed as `sqrt(z) * sqrt(z + 1/z - 2 cos alpha)`: the inner factor
    /// is negative real exactly on the arc and on the negative real axis,
    /// where its sign flip cancels against the principal `sqrt(z)` cut, so
    /// the product's only cut is the arc itself. Direct evaluation on the
    /// segment (-1, 0), where both factors sit on their own cuts, needs the
    /// explicit real branch.
    pub fn w(&self, z: Complex64) -> Result<Complex64> {
        self.check_off_arc(z)?;
        if z.im == 0.0 && z.re > -1.0 && z.re <= 0.0 {
            // w^2 = z^2 - 2 z cos(alpha) + 1 > 0 here; the two-sided limit is
            // the positive root.
            let w2 = z.re * z.re - 2.0 * z.re * self.cos_alpha + 1.0;
            return Ok(Complex64::new(w2.sqrt(), 0.0));
        }
        let h = z + 1.0 / z - 2.0 * self.cos_alpha;
        Ok(z.sqrt() * h.sqrt())
    }

    /// `psi(z) = (z + 1 + w(z)) / (2 gamma)`: conformal map of the arc
    /// exterior onto `|psi| > 1`.
    pub fn psi(&self, z: Complex64) -> Result<Complex64> {
        Ok((z + 1.0 + self.w(z)?) / (2.0 * self.gamma))
    }

    /// The second branch `mu(z) = (z + 1 - w(z)) / (2 gamma)`, mapping into
    /// the unit disk; `psi * mu = z / (2 gamma^2) * ... ` is not needed, only
    /// `|mu| < 1` for the inequality checks.
    pub fn mu(&self, z: Complex64) -> Result<Complex64> {
        Ok((z + 1.0 - self.w(z)?) / (2.0 * self.gamma))
    }

    /// Quarter root `a(z) = ((z - e^{i alpha})/(z - e^{-i alpha}))^{1/4}`
    /// with cut on the arc and `a -> 1` at infinity, via
    /// `a^2 = (z - e^{i alpha}) / w(z)`.
    pub fn a(&self, z: Complex64) -> Result<Complex64> {
        let a2 = (z - self.endpoint) / self.w(z)?;
        Ok(a2.sqrt())
    }

    /// `omega(z) = (ln(psi(z)/sqrt(z)))^2`, analytic across the arc in the
    /// validity disc `|z - e^{i alpha}| < sin(alpha)`.
    pub fn omega(&self, z: Complex64) -> Result<Complex64> {
        let u = z - self.endpoint;
        if u.norm() >= self.alpha.sin() {
            return Err(Error::invalid(format!(
                "z = {z} outside the omega validity disc of radius sin(alpha)"
            )));
        }
        let v = (self.psi(z)? / z.sqrt()).ln();
        Ok(v * v)
    }

    /// Two-term local expansion of `omega` at the upper endpoint:
    /// `omega ~ i tan(alpha/2) e^{-i alpha} u (1 - (1 - 2e^{-i alpha}
    /// - 2e^{-2 i alpha}) u / (6 i sin alpha))`, `u = z - e^{i alpha}`.
    pub fn omega_series(&self, z: Complex64) -> Complex64 {
        let u = z - self.endpoint;
        let i = Complex64::i();
        let em = Complex64::from_polar(1.0, -self.alpha);
        let lead = i * (self.alpha / 2.0).tan() * em;
        let corr = (1.0 - 2.0 * em - 2.0 * em * em) / (6.0 * i * self.alpha.sin());
        lead * u * (1.0 - corr * u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn frame(alpha: f64) -> ConformalFrame {
        ConformalFrame::new(alpha).unwrap()
    }

    #[test]
    fn canary_point() {
        // alpha = pi/2, z = 2: w = sqrt(5), psi = (3 + sqrt 5)/sqrt 2.
        let f = frame(PI / 2.0);
        let w = f.w(Complex64::new(2.0, 0.0)).unwrap();
        assert!((w.re - 5.0f64.sqrt()).abs() < 1e-14 && w.im.abs() < 1e-15);
        let psi = f.psi(Complex64::new(2.0, 0.0)).unwrap();
        let want = (3.0 + 5.0f64.sqrt()) / 2.0f64.sqrt();
        assert!((psi.re - want).abs() < 1e-13, "{} vs {want}", psi.re);
    }

    #[test]
    fn w_asymptotic_and_special_points() {
        let f = frame(1.1);
        for z in [
            Complex64::new(1e4, 3.0),
            Complex64::new(-2e3, 1e3),
            Complex64::new(5.0, -8e3),
        ] {
            let r = f.w(z).unwrap() / z;
            assert!((r - 1.0).norm() < 1e-3, "w/z at {z}: {r}");
        }
        // w(0) = +1 (so that |psi(0)| = 1/gamma > 1).
        let w0 = f.w(Complex64::new(0.0, 0.0)).unwrap();
        assert!((w0 - 1.0).norm() < 1e-14);
        // Negative real axis: continuous through both patched segments.
        for x in [-0.3, -0.9, -1.5, -4.0] {
            let direct = f.w(Complex64::new(x, 0.0)).unwrap();
            let above = f.w(Complex64::new(x, 1e-9)).unwrap();
            let below = f.w(Complex64::new(x, -1e-9)).unwrap();
            assert!((direct - above).norm() < 1e-7, "x={x}");
            assert!((direct - below).norm() < 1e-7, "x={x}");
        }
    }

    #[test]
    fn w_flips_sign_across_arc() {
        let f = frame(0.8);
        for theta in [1.0, 2.2, PI, 4.5] {
            let x = Complex64::from_polar(1.0, theta);
            let outside = f.w(x * 1.000001).unwrap();
            let inside = f.w(x * 0.999999).unwrap();
            assert!(
                (outside + inside).norm() < 1e-5 * outside.norm(),
                "no sign flip at theta={theta}"
            );
        }
    }

    #[test]
    fn psi_boundary_product_is_x() {
        // psi_+ psi_- = x on the open arc; Richardson in the offset kills the
        // O(eps) one-sided error of the +-1e-6 probes.
        for alpha in [0.3, 0.8, PI / 2.0, 2.0, 2.8] {
            let f = frame(alpha);
            for frac in [0.05, 0.3, 0.5, 0.7, 0.95] {
                let theta = alpha + (2.0 * PI - 2.0 * alpha) * frac;
                let x = Complex64::from_polar(1.0, theta);
                let prod = |eps: f64| -> Complex64 {
                    let p = f.psi(x * (1.0 + eps)).unwrap();
                    let m = f.psi(x * (1.0 - eps)).unwrap();
                    p * m
                };
                let extrap = 2.0 * prod(5e-7) - prod(1e-6);
                assert!(
                    (extrap - x).norm() < 1e-10,
                    "alpha={alpha} theta={theta}: {extrap} vs {x}"
                );
            }
        }
    }

    #[test]
    fn psi_modulus_and_inequality() {
        // |psi| > 1 and |z / psi^2| < 1 off the circle.
        let f = frame(1.3);
        let mut k = 0u32;
        for i in 0..40 {
            for j in 0..25 {
                let r = 0.05 + 0.1 * i as f64;
                if (r - 1.0).abs() < 0.02 {
                    continue;
                }
                let theta = 2.0 * PI * j as f64 / 25.0;
                let z = Complex64::from_polar(r, theta);
                if f.arc_distance(z) < 1e-3 {
                    continue;
                }
                let psi = f.psi(z).unwrap();
                assert!(psi.norm() > 1.0, "|psi| <= 1 at {z}");
                assert!((z / (psi * psi)).norm() < 1.0, "inequality fails at {z}");
                let mu = f.mu(z).unwrap();
                assert!(mu.norm() < 1.0, "|mu| >= 1 at {z}");
                k += 1;
            }
        }
        assert!(k > 700);
    }

    #[test]
    fn full_circle_limit_psi_is_z() {
        // alpha -> 0: gamma -> 1, w -> z - 1, psi -> z for |z| > 1.
        let f = frame(1e-8);
        for z in [Complex64::new(1.7, 0.4), Complex64::new(-0.2, 2.0)] {
            let psi = f.psi(z).unwrap();
            assert!((psi - z).norm() < 1e-6, "psi({z}) = {psi}");
        }
    }

    #[test]
    fn a_conjugate_symmetry_and_limit() {
        let f = frame(0.9);
        // Reflection swaps the endpoint factors: a(conj z) = conj(1/a(z)).
        // On the real axis that forces |a| = 1.
        for z in [Complex64::new(1.4, 0.3), Complex64::new(-0.5, -0.8)] {
            let a1 = f.a(z).unwrap();
            let a2 = f.a(z.conj()).unwrap();
            assert!(
                ((1.0 / a1).conj() - a2).norm() < 1e-13,
                "z={z}: {a2} vs {}",
                (1.0 / a1).conj()
            );
        }
        for x in [1.5, 3.0, -2.0, -0.4, 0.2] {
            let a = f.a(Complex64::new(x, 0.0)).unwrap();
            assert!((a.norm() - 1.0).abs() < 1e-13, "|a({x})| = {}", a.norm());
        }
        let a_inf = f.a(Complex64::new(3e5, 1e5)).unwrap();
        assert!((a_inf - 1.0).norm() < 1e-5);
    }

    #[test]
    fn a_fourth_power_on_endpoint_circle() {
        // For z = e^{i alpha} + sin(alpha/2) e^{it}:
        // |a^4| = (1 + 8 gamma sin t + 16 gamma^2)^{-1/2} exactly.
        for alpha in [0.3, 1.0, 2.0] {
            let f = frame(alpha);
            let delta = (alpha / 2.0).sin();
            for t in [0.0, 0.7, 1.9, 3.0, 4.6, 6.0] {
                let z = f.endpoint_upper() + Complex64::from_polar(delta, t);
                if f.arc_distance(z) < 1e-9 {
                    continue;
                }
                let a = f.a(z).unwrap();
                let got = a.norm().powi(4);
                let want = (1.0 + 8.0 * f.gamma * t.sin() + 16.0 * f.gamma * f.gamma)
                    .powf(-0.5);
                assert!(
                    (got - want).abs() < 1e-12 * want,
                    "alpha={alpha} t={t}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn omega_leading_coefficient() {
        // omega / u -> i tan(alpha/2) e^{-i alpha}.
        for alpha in [0.5, PI / 2.0, 2.2] {
            let f = frame(alpha);
            let lead = Complex64::i() * (alpha / 2.0).tan() * Complex64::from_polar(1.0, -alpha);
            let u = Complex64::new(1e-7, 5e-8);
            let om = f.omega(f.endpoint_upper() + u).unwrap();
            assert!(
                (om / u - lead).norm() < 1e-5 * lead.norm(),
                "alpha={alpha}: {} vs {lead}",
                om / u
            );
        }
    }

    #[test]
    fn omega_series_third_order_scaling() {
        // Two-term series error shrinks like |u|^3 (ratio ~8 under halving).
        let f = frame(PI / 2.0);
        let dir = Complex64::from_polar(1.0, 0.9);
        let err = |scale: f64| -> f64 {
            let u = dir * scale;
            let z = f.endpoint_upper() + u;
            (f.omega(z).unwrap() - f.omega_series(z)).norm()
        };
        let e1 = err(0.02);
        let e2 = err(0.01);
        let ratio = e1 / e2;
        assert!(
            (ratio - 8.0).abs() < 1.5,
            "error ratio {ratio}, e1={e1:e} e2={e2:e}"
        );
        // And the absolute scale at u = 0.01 stays below the |u|^3 band.
        assert!(e2 < 10.0 * 0.01f64.powi(3), "e2 = {e2:e}");
    }

    #[test]
    fn omega_continuous_across_arc() {
        // Values at e^{i(alpha + 0.01)} (1 +- 1e-7) agree within 1e-6.
        for alpha in [0.5, 1.2, 2.0] {
            let f = frame(alpha);
            let x = Complex64::from_polar(1.0, alpha + 0.01);
            let a = f.omega(x * (1.0 + 1e-7)).unwrap();
            let b = f.omega(x * (1.0 - 1e-7)).unwrap();
            assert!((a - b).norm() < 1e-6, "alpha={alpha}: jump {}", (a - b).norm());
        }
    }

    #[test]
    fn rejects_arc_points_and_outside_disc() {
        let f = frame(1.0);
        assert!(f.w(Complex64::from_polar(1.0, PI)).is_err());
        assert!(f.psi(Complex64::from_polar(1.0, 1.0)).is_err());
        let far = f.endpoint_upper() + Complex64::new(2.0, 0.0);
        assert!(f.omega(far).is_err());
    }
}
