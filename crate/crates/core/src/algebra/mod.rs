//! Exact scalars and the complex Clifford algebra ℂ_m.

mod multivector;
mod scalar;
mod spin;
mod text;

pub use multivector::{Blade, FloatMultivector, Multivector, MAX_DIM};
pub use scalar::ExactScalar;
pub use spin::SpinElement;
pub use text::{format_multivector, parse_multivector};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("generator index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("spin factor {index} is not a real unit 1-vector")]
    NonUnitFactor { index: usize },
    #[error("spin element needs an even, nonzero number of factors, got {0}")]
    OddFactorCount(usize),
    #[error("expected a 1-vector")]
    NotAVector,
    #[error("parse error: {0}")]
    Parse(String),
}
