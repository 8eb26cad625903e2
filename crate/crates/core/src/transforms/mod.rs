//! Hua-Radon and polarized Hua-Radon transforms, their duals over all
//! isotropic frames, the closed-form coefficients and the inversions.

mod coefficients;
mod dual;
mod frame;
mod inversion;
mod kernel;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::fischer::FischerError;
use crate::integrate::IntegrateError;
use crate::poly::PolyError;
use crate::special::SpecialError;

pub use coefficients::{
    inverse_basis_norm, frame_moment, nu_coefficient, phi_coefficient, phi_hypergeometric, phi_theta_sum, phi_xi_sum,
    rho_coefficient, rho_with_lower_limit, theta_coefficient, vartheta_coefficient, RhoLowerLimit,
};
pub use dual::{dual_radon_compose, frame_average, DualRadonOperator, FrameFactor};
pub use frame::IsotropicFrame;
pub use inversion::{component_coefficient, invert_hua, invert_polarized};
pub use kernel::{
    basis_f, basis_psi, hua_kernel, hua_radon, hua_radon_via_basis, inner, polarized_hua_radon, polarized_kernel,
    KernelExpansion, KernelKind,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("invalid frame: {0}")]
    Frame(String),
    #[error("dimension m = {0} is below 3")]
    Dimension(usize),
    #[error("{0}")]
    OutOfRange(String),
    #[error("coefficient vanishes for the component t={t}, a={a} in dimension m={m}")]
    SingularComponent { t: usize, a: usize, m: usize },
    #[error(transparent)]
    Integrate(#[from] IntegrateError),
    #[error(transparent)]
    Fischer(#[from] FischerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Special(#[from] SpecialError),
}
