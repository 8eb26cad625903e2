//! Normalized integration over the unit sphere, the Lie sphere and the
//! Stiefel manifold of orthonormal pairs, exact and Monte-Carlo.

mod lie;
mod mc;
mod sphere;
mod stiefel;
pub mod wick;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::poly::PolyError;

pub use lie::{lie_inner_product, lie_sphere_integral, lie_sphere_integral_value, theta_integral, LieIntegralValue};
pub use mc::{
    mc_lie_sphere_integral, mc_sphere_integral, mc_stiefel_average, random_orthonormal_pair, random_unit_vector,
    McEstimate,
};
pub use sphere::{sphere_integral, sphere_integrate_var, sphere_moment};
pub use stiefel::{stiefel_average, tau, tau_dagger};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntegrateError {
    #[error("expected {expected} variable(s), got {got}")]
    VariableCount { expected: usize, got: usize },
    #[error("a 1/π part survived the Lie-sphere integral")]
    ParityViolation,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
