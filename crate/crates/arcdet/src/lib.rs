//! Numerical library for sine-kernel gap determinants, orthogonal
//! polynomials on an arc of the unit circle, and the closed-form asymptotic
//! formulas that connect them.
//!
//! The precision-sensitive kernels are generic over the scalar type through
//! [`scalar::Real`]: `f64` is the standard working precision and [`dd::Dd`]
//! (double-double, ~32 decimal digits) is the extended one needed because
//! fixed-arc moment problems are exponentially ill-conditioned.

pub mod dd;
pub mod error;
pub mod fredholm;
pub mod gue;
pub mod matrix;
pub mod numerics;
pub mod opuc;
pub mod rh;
pub mod scalar;

pub use dd::Dd;
pub use error::{Error, Result};
pub use scalar::{Precision, Real};

/// Standard working precision.
pub type Standard = f64;
/// Extended (double-double) working precision.
pub type Extended = Dd;
