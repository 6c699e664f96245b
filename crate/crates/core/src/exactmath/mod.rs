//! Exact arithmetic substrate: rationals, cyclotomic numbers, linear
//! algebra over ℚ, Smith normal form over ℤ and exact linear feasibility.
//!
//! No operation in this module ever rounds.  Feasibility answers come with
//! witnesses or Farkas certificates that re-verify by exact arithmetic.

pub mod rat;
pub mod cyc;
pub mod mat;
pub mod linear;
pub mod snf;
pub mod simplex;
pub mod intfeas;

pub use cyc::Cyc;
pub use intfeas::{integer_solvable, nonneg_integer_feasible, FeasibilityResult};
pub use linear::{solve_linear, AffineSolutionSpace};
pub use mat::Mat;
pub use rat::{rat, rat_int, Rat};
pub use simplex::{lp_feasible_nonneg, var_bounds, Bound};
pub use snf::{smith_normal_form, SmithForm};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MathError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("division by zero cyclotomic")]
    DivisionByZero,
    #[error("empty polytope")]
    EmptyPolytope,
    #[error("{0}")]
    Domain(String),
}
