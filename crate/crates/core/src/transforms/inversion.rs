use num_rational::BigRational;
use num_traits::Zero;

use super::coefficients::{phi_coefficient, rho_coefficient};
use super::kernel::KernelKind;
use super::TransformError;
use crate::algebra::ExactScalar;
use crate::fischer::monogenic_fischer;
use crate::poly::PolyMV;

/// Eigenvalue of `R̃ ∘ T_τ` on `z^a M_{t−a}`.
pub fn component_coefficient(kind: KernelKind, t: usize, a: usize, m: usize) -> Result<BigRational, TransformError> {
    match kind {
        KernelKind::Hua => phi_coefficient(t, a / 2, m),
        KernelKind::Polarized => rho_coefficient(t, a, m),
    }
}

fn invert(kind: KernelKind, g: &PolyMV) -> Result<PolyMV, TransformError> {
    if g.vars().len() != 1 {
        return Err(crate::integrate::IntegrateError::VariableCount { expected: 1, got: g.vars().len() }.into());
    }
    let m = g.dim();
    let var = g.vars()[0].clone();
    let tower = monogenic_fischer(g, &var)?;
    let z = PolyMV::vector_variable(&var, m);
    let mut out = g.zero_like();
    for c in &tower.components {
        let (t, a) = (c.t as usize, c.a as usize);
        let coef = component_coefficient(kind, t, a, m)?;
        if coef.is_zero() {
            return Err(TransformError::SingularComponent { t, a, m });
        }
        let piece = &z.pow(c.a) * &c.m;
        out = &out + &piece.scale(&ExactScalar::real(BigRational::from_integer(1.into()) / coef));
    }
    Ok(out)
}

/// Recovers `f` from `R̃[ℋ_τ[f]]` by dividing each Fischer component
/// `z^a M_{t−a}` by `φ_{t,⌊a/2⌋}`.
pub fn invert_hua(g: &PolyMV) -> Result<PolyMV, TransformError> {
    invert(KernelKind::Hua, g)
}

/// Recovers `f` from `R̃[ℛ^H_τ[f]]` by dividing each Fischer component
/// `z^a M_{t−a}` by `ρ_{t,a}`.
pub fn invert_polarized(g: &PolyMV) -> Result<PolyMV, TransformError> {
    invert(KernelKind::Polarized, g)
}
