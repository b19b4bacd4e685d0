//! Double-double arithmetic: an unevaluated sum of two `f64`s giving roughly
//! 106 bits (~31-32 decimal digits) of precision.
//!
//! The representation keeps `|lo| <= ulp(hi)/2`, so `hi` is the correctly
//! rounded value of the pair. Core operations follow the classic error-free
//! transformations (two_sum, Dekker split/product) plus the usual Newton
//! refinements for `div`, `sqrt`, `ln`. Range reduction for `sin`/`cos`/`exp`
//! uses double-double constants, which keeps arguments up to a few thousand
//! radians accurate to better than 1e-28.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

/// Extended-precision scalar: non-overlapping pair `hi + lo`.
#[derive(Copy, Clone, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// `a + b` as an exact sum `hi + lo` (Knuth two-sum, no magnitude assumption).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// `a + b` as an exact sum, assuming `|a| >= |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// Split `a` into 26-bit halves for Dekker's exact product.
#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134217729.0; // 2^27 + 1
    let t = SPLITTER * a;
    let hi = t - (t - a);
    let lo = a - hi;
    (hi, lo)
}

/// `a * b` as an exact sum `hi + lo` (Dekker; no FMA dependence).
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ahi, alo) = split(a);
    let (bhi, blo) = split(b);
    let err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
    (p, err)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: 3.141592653589793,
        lo: 1.2246467991473532e-16,
    };
    pub const TWO_PI: Dd = Dd {
        hi: 6.283185307179586,
        lo: 2.4492935982947064e-16,
    };
    pub const FRAC_PI_2: Dd = Dd {
        hi: 1.5707963267948966,
        lo: 6.123233995736766e-17,
    };
    pub const LN_2: Dd = Dd {
        hi: 0.6931471805599453,
        lo: 2.3190468138462996e-17,
    };
    /// Unit roundoff of the format, 2^-105.
    pub const EPSILON: f64 = 2.465190328815662e-32;

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two doubles as a Dd.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        let (s, e) = two_sum(a, b);
        Dd { hi: s, lo: e }
    }

    /// Exact product of two doubles as a Dd.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Dd {
        let (p, e) = two_prod(a, b);
        Dd { hi: p, lo: e }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    #[inline]
    pub fn is_zero_val(self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }

    /// Multiply by a power of two (exact).
    #[inline]
    pub fn ldexp(self, n: i32) -> Dd {
        let f = (n as f64).exp2();
        Dd {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn sqrt(self) -> Dd {
        if self.is_zero_val() {
            return Dd::ZERO;
        }
        assert!(self.hi > 0.0, "Dd::sqrt of negative value {}", self.hi);
        // Karp's trick: one refinement of the f64 estimate gives full precision.
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let axd = Dd::from_f64(ax);
        let err = (self - axd * axd).hi;
        Dd::from_sum(ax, err * (x * 0.5))
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    pub fn exp(self) -> Dd {
        // exp(x) = 2^m * exp(r), r = x - m ln 2, |r| <= (ln 2)/2.
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -709.0 {
            return Dd::ZERO;
        }
        let m = (self.hi / Dd::LN_2.hi).round();
        let r = self - Dd::LN_2 * Dd::from_f64(m);
        // Taylor series; |r| <= 0.347 so ~26 terms reach 1e-33.
        let mut sum = Dd::ONE + r;
        let mut term = r;
        for k in 2..=26 {
            term = term * r / Dd::from_f64(k as f64);
            sum += term;
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        sum.ldexp(m as i32)
    }

    pub fn ln(self) -> Dd {
        assert!(self.hi > 0.0, "Dd::ln of non-positive value {}", self.hi);
        // Newton on exp: y0 from f64, then y = y0 + (x e^{-y0} - 1) - (...)^2/2.
        let y0 = self.hi.ln();
        let e = self * Dd::from_f64(-y0).exp() - Dd::ONE;
        Dd::from_f64(y0) + e - e * e * Dd::from_f64(0.5)
    }

    /// Reduce to `[-pi/4, pi/4]` and return (reduced argument, quadrant mod 4).
    fn trig_reduce(self) -> (Dd, i32) {
        let mut r = self;
        // Whole turns first.
        let turns = (self.hi / Dd::TWO_PI.hi).round();
        if turns != 0.0 {
            r = r - Dd::TWO_PI * Dd::from_f64(turns);
        }
        let q = (r.hi / Dd::FRAC_PI_2.hi).round();
        r = r - Dd::FRAC_PI_2 * Dd::from_f64(q);
        (r, (q as i32).rem_euclid(4))
    }

    /// Taylor sin on `|r| <= pi/4 + slack`.
    fn sin_taylor(r: Dd) -> Dd {
        let r2 = r * r;
        let mut term = r;
        let mut sum = r;
        let mut k = 1.0f64;
        loop {
            term = -term * r2 / Dd::from_f64((k + 1.0) * (k + 2.0));
            sum += term;
            k += 2.0;
            if term.hi.abs() < 1e-35 * (1.0 + sum.hi.abs()) || k > 45.0 {
                return sum;
            }
        }
    }

    /// Taylor cos on `|r| <= pi/4 + slack`.
    fn cos_taylor(r: Dd) -> Dd {
        let r2 = r * r;
        let mut term = Dd::ONE;
        let mut sum = Dd::ONE;
        let mut k = 0.0f64;
        loop {
            term = -term * r2 / Dd::from_f64((k + 1.0) * (k + 2.0));
            sum += term;
            k += 2.0;
            if term.hi.abs() < 1e-35 * (1.0 + sum.hi.abs()) || k > 45.0 {
                return sum;
            }
        }
    }

    pub fn sin_cos(self) -> (Dd, Dd) {
        let (r, q) = self.trig_reduce();
        let s = Dd::sin_taylor(r);
        let c = Dd::cos_taylor(r);
        match q {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(self) -> Dd {
        self.sin_cos().0
    }

    pub fn cos(self) -> Dd {
        self.sin_cos().1
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        // Accurate (IEEE-style) addition: both components via two-sum.
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (s, e) = quick_two_sum(p, e);
        Dd { hi: s, lo: e }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        // Long division: three quotient terms then renormalize.
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd::from_sum(s, e + q3)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, rhs: Dd) -> Dd {
        let n = (self / rhs).hi.trunc();
        self - rhs * Dd::from_f64(n)
    }
}

impl AddAssign for Dd {
    #[inline]
    fn add_assign(&mut self, rhs: Dd) {
        *self = *self + rhs;
    }
}
impl SubAssign for Dd {
    #[inline]
    fn sub_assign(&mut self, rhs: Dd) {
        *self = *self - rhs;
    }
}
impl MulAssign for Dd {
    #[inline]
    fn mul_assign(&mut self, rhs: Dd) {
        *self = *self * rhs;
    }
}
impl DivAssign for Dd {
    #[inline]
    fn div_assign(&mut self, rhs: Dd) {
        *self = *self / rhs;
    }
}

impl PartialEq for Dd {
    #[inline]
    fn eq(&self, other: &Dd) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    #[inline]
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // hi carries the correctly rounded value.
        fmt::Display::fmt(&self.hi, f)
    }
}

impl From<f64> for Dd {
    #[inline]
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}

// --- num-traits plumbing so Complex<Dd> and generic code work ---

impl num_traits::Zero for Dd {
    #[inline]
    fn zero() -> Dd {
        Dd::ZERO
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.is_zero_val()
    }
}

impl num_traits::One for Dd {
    #[inline]
    fn one() -> Dd {
        Dd::ONE
    }
}

impl num_traits::Num for Dd {
    type FromStrRadixErr = std::num::ParseFloatError;
    /// Parses through `f64`; only used by generic trait plumbing, never in the
    /// numeric kernels, so the precision loss is acceptable.
    fn from_str_radix(s: &str, radix: u32) -> Result<Dd, Self::FromStrRadixErr> {
        assert_eq!(radix, 10, "Dd::from_str_radix supports base 10 only");
        s.parse::<f64>().map(Dd::from_f64)
    }
}

impl num_traits::ToPrimitive for Dd {
    fn to_i64(&self) -> Option<i64> {
        self.hi.to_i64()
    }
    fn to_u64(&self) -> Option<u64> {
        self.hi.to_u64()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.hi)
    }
}

impl num_traits::FromPrimitive for Dd {
    fn from_i64(n: i64) -> Option<Dd> {
        // Exact: split across the two components.
        let hi = n as f64;
        let rem = n - hi as i64;
        Some(Dd::from_sum(hi, rem as f64))
    }
    fn from_u64(n: u64) -> Option<Dd> {
        let hi = n as f64;
        let rem = n as i128 - hi as i128;
        Some(Dd::from_sum(hi, rem as f64))
    }
    fn from_f64(x: f64) -> Option<Dd> {
        Some(Dd::from_f64(x))
    }
}
