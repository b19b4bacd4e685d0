//! Scalar abstraction for the numeric kernels.
//!
//! Everything precision-sensitive (quadrature, the reflection-coefficient
//! ladder, Cholesky) is written against [`Real`], so the same code runs in
//! standard `f64` and in extended double-double precision. `f32` is supported
//! for completeness.

use crate::dd::Dd;
use num_traits::{FromPrimitive, Num, ToPrimitive};
use std::fmt;
use std::ops::{AddAssign, DivAssign, MulAssign, Neg, SubAssign};

/// Real scalar with the elementary functions the kernels need.
pub trait Real:
    Copy
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Num
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + FromPrimitive
    + ToPrimitive
{
    /// Significant decimal digits carried by the format; feeds the
    /// conditioning-budget checks.
    const DECIMAL_DIGITS: f64;

    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 -> scalar conversion")
    }
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize -> scalar conversion")
    }
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar -> f64 conversion")
    }

    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn ln(self) -> Self;
    fn exp(self) -> Self;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sin_cos(self) -> (Self, Self) {
        (self.sin(), self.cos())
    }
    fn powi(self, n: i32) -> Self;
    fn pi() -> Self;
    /// Unit roundoff of the format.
    fn eps() -> Self;
    fn max_s(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
    fn min_s(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

macro_rules! impl_real_for_float {
    ($t:ty, $digits:expr) => {
        impl Real for $t {
            const DECIMAL_DIGITS: f64 = $digits;
            fn abs(self) -> Self {
                self.abs()
            }
            fn sqrt(self) -> Self {
                self.sqrt()
            }
            fn ln(self) -> Self {
                self.ln()
            }
            fn exp(self) -> Self {
                self.exp()
            }
            fn sin(self) -> Self {
                self.sin()
            }
            fn cos(self) -> Self {
                self.cos()
            }
            fn sin_cos(self) -> (Self, Self) {
                self.sin_cos()
            }
            fn powi(self, n: i32) -> Self {
                self.powi(n)
            }
            fn pi() -> Self {
                std::f64::consts::PI as $t
            }
            fn eps() -> Self {
                <$t>::EPSILON
            }
        }
    };
}

impl_real_for_float!(f64, 15.95);
impl_real_for_float!(f32, 7.22);

impl Real for Dd {
    const DECIMAL_DIGITS: f64 = 31.9;
    fn abs(self) -> Self {
        self.abs()
    }
    fn sqrt(self) -> Self {
        self.sqrt()
    }
    fn ln(self) -> Self {
        self.ln()
    }
    fn exp(self) -> Self {
        self.exp()
    }
    fn sin(self) -> Self {
        self.sin()
    }
    fn cos(self) -> Self {
        self.cos()
    }
    fn sin_cos(self) -> (Self, Self) {
        self.sin_cos()
    }
    fn powi(self, n: i32) -> Self {
        self.powi(n)
    }
    fn pi() -> Self {
        Dd::PI
    }
    fn eps() -> Self {
        Dd::from_f64(Dd::EPSILON)
    }
}

/// Working-precision selector mirrored by the CLI.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Precision {
    Standard,
    Extended,
}

impl Precision {
    pub fn decimal_digits(self) -> f64 {
        match self {
            Precision::Standard => f64::DECIMAL_DIGITS,
            Precision::Extended => Dd::DECIMAL_DIGITS,
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precision::Standard => write!(f, "standard"),
            Precision::Extended => write!(f, "extended"),
        }
    }
}
