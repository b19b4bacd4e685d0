//! Outer parametrix `N(z)` and the first correction `R_1(z)`.

use super::szego::SzegoData;
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Small dense 2x2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Mat2 {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Mat2([[one, zero], [zero, one]])
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j];
            }
        }
        Mat2(out)
    }

    pub fn add(&self, rhs: &Mat2) -> Mat2 {
        let mut out = self.0;
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] += rhs.0[i][j];
            }
        }
        Mat2(out)
    }

    pub fn sub(&self, rhs: &Mat2) -> Mat2 {
        let mut out = self.0;
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] -= rhs.0[i][j];
            }
        }
        Mat2(out)
    }

    pub fn scale(&self, c: Complex64) -> Mat2 {
        let mut out = self.0;
        for row in &mut out {
            for cell in row.iter_mut() {
                *cell *= c;
            }
        }
        Mat2(out)
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Mat2 {
        let mut out = self.0;
        for row in &mut out {
            for cell in row.iter_mut() {
                *cell = cell.conj();
            }
        }
        Mat2(out)
    }

    pub fn max_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0f64, |acc, c| acc.max(c.norm()))
    }
}

/// Outer parametrix
/// `N(z) = (1/2) D_inf^{s3} [[a + 1/a, -i(a - 1/a)], [i(a - 1/a), a + 1/a]]
/// D(z)^{-s3}` with `s3` the diagonal (+1, -1) exponent pattern;
/// `det N = 1` identically and `N -> I` at infinity.
pub fn outer_parametrix(szego: &SzegoData, z: Complex64) -> Result<Mat2> {
    let frame = szego.frame();
    let a = frame.a(z)?;
    let ai = 1.0 / a;
    let i = Complex64::i();
    let p = (a + ai) * 0.5;
    let m = (a - ai) * 0.5;
    let dinf = Complex64::new(szego.d_infinity(), 0.0);
    let d = szego.d(z)?;
    Ok(Mat2([
        [dinf * p / d, dinf * (-i) * m * d],
        [i * m / (dinf * d), p * d / dinf],
    ]))
}

/// First-correction residue at the upper endpoint:
/// `A1 = (cos(alpha/2) / (8n)) [[1, -i D_inf^2], [-i D_inf^{-2}, -1]]
/// e^{i alpha/2}`; the lower-endpoint residue is its entrywise conjugate.
pub fn first_correction_residue(szego: &SzegoData, n: usize) -> Mat2 {
    let alpha = szego.frame().alpha;
    let dinf = szego.d_infinity();
    let i = Complex64::i();
    let scale =
        Complex64::from_polar(1.0, alpha / 2.0) * ((alpha / 2.0).cos() / (8.0 * n as f64));
    Mat2([
        [scale, -i * dinf * dinf * scale],
        [-i * scale / (dinf * dinf), -scale],
    ])
}

/// Outer branch of the first correction:
/// `R_1(z) = A1/(z - e^{i alpha}) + conj(A1)/(z - e^{-i alpha})`.
///
/// Points inside the endpoint neighborhoods of radius
/// `delta = min(sin(alpha/2), sin(alpha0/2))`, `alpha0 = 0.3`, are rejected:
/// the inner branch is a different object.
pub fn first_correction(szego: &SzegoData, n: usize, z: Complex64) -> Result<Mat2> {
    let frame = szego.frame();
    let delta = endpoint_disc_radius(frame.alpha);
    let up = frame.endpoint_upper();
    let dn = frame.endpoint_lower();
    if (z - up).norm() < delta || (z - dn).norm() < delta {
        return Err(Error::invalid(format!(
            "z = {z} lies inside an endpoint disc of radius {delta}"
        )));
    }
    let a1 = first_correction_residue(szego, n);
    let b1 = a1.conj();
    Ok(a1.scale(1.0 / (z - up)).add(&b1.scale(1.0 / (z - dn))))
}

/// Endpoint-disc radius used by the correction's validity check.
pub fn endpoint_disc_radius(alpha: f64) -> f64 {
    const ALPHA0: f64 = 0.3;
    (alpha / 2.0).sin().min((ALPHA0 / 2.0).sin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opuc::weight::ArcWeight;

    const PI: f64 = std::f64::consts::PI;

    fn szego_exp_cos(alpha: f64) -> SzegoData {
        let w = ArcWeight::callable(alpha, |theta| theta.cos().exp()).unwrap();
        SzegoData::new(&w, 128).unwrap()
    }

    #[test]
    fn unit_determinant_everywhere() {
        let s = szego_exp_cos(0.8);
        let mut checked = 0;
        for i in 0..10 {
            for j in 0..10 {
                let z = Complex64::new(-2.0 + 0.45 * i as f64, -2.0 + 0.41 * j as f64);
                if s.frame().arc_distance(z) < 0.05 {
                    continue;
                }
                let n = outer_parametrix(&s, z).unwrap();
                assert!(
                    (n.det() - 1.0).norm() < 1e-12,
                    "det N at {z} = {}",
                    n.det()
                );
                checked += 1;
            }
        }
        assert!(checked > 80);
    }

    #[test]
    fn identity_at_infinity() {
        let s = szego_exp_cos(1.2);
        let n = outer_parametrix(&s, Complex64::new(4e4, 2e4)).unwrap();
        assert!(n.sub(&Mat2::identity()).max_norm() < 1e-3);
    }

    #[test]
    fn jump_relation_at_midarc() {
        // N_+ = N_- [[0, f], [-1/f, 0]] with Richardson-extrapolated
        // boundary values.
        let weight = ArcWeight::callable(0.9, |theta| theta.cos().exp()).unwrap();
        let s = SzegoData::new(&weight, 128).unwrap();
        let x = Complex64::from_polar(1.0, PI);
        let f = weight.eval_f64(PI);
        let jump = Mat2([
            [Complex64::new(0.0, 0.0), Complex64::new(f, 0.0)],
            [Complex64::new(-1.0 / f, 0.0), Complex64::new(0.0, 0.0)],
        ]);
        let gap = |eps: f64| -> Mat2 {
            let np = outer_parametrix(&s, x * (1.0 + eps)).unwrap();
            let nm = outer_parametrix(&s, x * (1.0 - eps)).unwrap();
            np.sub(&nm.mul(&jump))
        };
        let d1 = gap(1e-6);
        let d2 = gap(5e-7);
        // Richardson: 2 gap(eps/2) - gap(eps).
        let extrap = d2.scale(Complex64::new(2.0, 0.0)).sub(&d1);
        assert!(extrap.max_norm() < 1e-8, "jump residual {}", extrap.max_norm());
    }

    #[test]
    fn correction_entry_scale_and_trace() {
        // f = 1: entry magnitude cos(alpha/2)/(8n); traceless; decays as 1/z.
        let w = ArcWeight::constant_one(PI / 2.0).unwrap();
        let s = SzegoData::new(&w, 64).unwrap();
        let a1 = first_correction_residue(&s, 10);
        let scale = (PI / 4.0).cos() / 80.0;
        for row in &a1.0 {
            for c in row {
                assert!((c.norm() - scale).abs() < 1e-15);
            }
        }
        assert!(a1.trace().norm() < 1e-18);
        let r_far = first_correction(&s, 10, Complex64::new(200.0, 0.0)).unwrap();
        let r_near = first_correction(&s, 10, Complex64::new(2.0, 0.0)).unwrap();
        assert!(r_far.max_norm() < r_near.max_norm() / 50.0);
    }

    #[test]
    fn correction_rejects_endpoint_discs() {
        let w = ArcWeight::constant_one(1.0).unwrap();
        let s = SzegoData::new(&w, 64).unwrap();
        let z = s.frame().endpoint_upper() + Complex64::new(1e-3, 0.0);
        assert!(first_correction(&s, 5, z).is_err());
    }
}
