//! Exact computer algebra for the Hua-Radon transform family on
//! Clifford-valued polynomials over the Lie sphere.
pub mod algebra;
pub mod exec;
pub mod fischer;
pub mod integrate;
pub mod poly;
pub mod random;
pub mod special;
pub mod transforms;
pub mod zonal;

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] algebra::AlgebraError),
    #[error(transparent)]
    Poly(#[from] poly::PolyError),
    #[error(transparent)]
    Special(#[from] special::SpecialError),
    #[error(transparent)]
    Integrate(#[from] integrate::IntegrateError),
    #[error(transparent)]
    Fischer(#[from] fischer::FischerError),
    #[error(transparent)]
    Transform(#[from] transforms::TransformError),
}
