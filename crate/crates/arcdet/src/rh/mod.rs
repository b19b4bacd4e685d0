//! Closed-form objects of the steepest-descent analysis and every asymptotic
//! prediction: the conformal map, the Szego function, the outer parametrix
//! and first correction, endpoint/leading-coefficient expansions and the
//! Toeplitz / gap-determinant asymptotics built from them.

pub mod asymptotics;
pub mod conformal;
pub mod constants;
pub mod parametrix;
pub mod szego;
pub mod thm2;

pub use asymptotics::*;
pub use conformal::ConformalFrame;
pub use parametrix::{first_correction, outer_parametrix, Mat2};
pub use szego::SzegoData;
pub use thm2::{thm2_chi, thm2_constants, thm2_derivative, thm2_endpoint, Thm2Constants};
