//! Orthogonal polynomials on the arc `alpha <= theta <= 2 pi - alpha`:
//! moments, the reflection-coefficient ladder, evaluation, and Toeplitz
//! log-determinants.

pub mod eval;
pub mod ladder;
pub mod moments;
pub mod weight;

pub use eval::{cd_sum, eval_at_endpoint, eval_poly, CdSum, PolyEval};
pub use ladder::{budget_max_degree, build_ladder, OpucLadder};
pub use moments::{arc_moment, moments, weight_moment, MomentTable};
pub use weight::{ArcWeight, WeightKind};
