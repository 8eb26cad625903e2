use std::collections::BTreeMap;

use num_rational::BigRational;

use super::sphere::sphere_moment_parts;
use super::IntegrateError;
use crate::algebra::{ExactScalar, Multivector};
use crate::exec::Exec;
use crate::poly::{Monomial, PolyMV};

/// An exact value `q₁ + q₂/π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieIntegralValue<T = ExactScalar> {
    pub rational_part: T,
    pub inv_pi_part: T,
}

impl LieIntegralValue {
    pub fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.inv_pi_part.is_zero()
    }
}

/// `(1/π) ∫_0^π e^{ikθ} dθ`.
pub fn theta_integral(k: i64) -> LieIntegralValue {
    if k == 0 {
        LieIntegralValue { rational_part: ExactScalar::one(), inv_pi_part: ExactScalar::zero() }
    } else if k % 2 == 0 {
        LieIntegralValue { rational_part: ExactScalar::zero(), inv_pi_part: ExactScalar::zero() }
    } else {
        LieIntegralValue {
            rational_part: ExactScalar::zero(),
            inv_pi_part: ExactScalar::new(BigRational::from_integer(0.into()), BigRational::new(2.into(), k.into())),
        }
    }
}

/// Both parts of
/// `(1/(πA_m)) ∫_{S^{m−1}} ∫_0^π k(·, e^{−iθ}ω) f(e^{iθ}ω) dθ dS(ω)`,
/// where the kernel variable `wvar` stands for `e^{−iθ}ω` and `f` is a
/// polynomial in a single variable. The kernel multiplies from the left; the
/// result is a polynomial in the remaining kernel variables.
pub fn lie_sphere_integral_value(
    kernel: &PolyMV,
    wvar: &str,
    f: &PolyMV,
    exec: Exec,
) -> Result<LieIntegralValue<PolyMV>, IntegrateError> {
    if f.vars().len() != 1 {
        return Err(IntegrateError::VariableCount { expected: 1, got: f.vars().len() });
    }
    if kernel.dim() != f.dim() {
        return Err(crate::algebra::AlgebraError::DimensionMismatch { left: kernel.dim(), right: f.dim() }.into());
    }
    let m = kernel.dim();
    let v = kernel.var_index(wvar)?;
    let rest: Vec<&str> = kernel.var_names().into_iter().filter(|n| *n != wvar).collect();

    let mut by_delta: BTreeMap<Monomial, Vec<(Monomial, &Multivector)>> = BTreeMap::new();
    for (k, c) in kernel.terms() {
        let delta = k[v * m..(v + 1) * m].to_vec();
        let mut gamma = k[..v * m].to_vec();
        gamma.extend_from_slice(&k[(v + 1) * m..]);
        by_delta.entry(delta).or_default().push((gamma, c));
    }
    let f_terms: Vec<(&Monomial, i64, &Multivector)> = f
        .terms()
        .iter()
        .map(|(k, c)| (k, k.iter().map(|&e| e as i64).sum::<i64>(), c))
        .collect();

    let deltas: Vec<(&Monomial, &Vec<(Monomial, &Multivector)>)> = by_delta.iter().collect();
    let pieces = exec.map(&deltas, |(delta, gammas)| {
        let b: i64 = delta.iter().map(|&e| e as i64).sum();
        let mut rat = Multivector::zero(m);
        let mut inv_pi = Multivector::zero(m);
        let mut alpha = vec![0u16; m];
        for (beta, a, fb) in &f_terms {
            let theta = theta_integral(a - b);
            if theta.is_zero() {
                continue;
            }
            for j in 0..m {
                alpha[j] = delta[j] + beta[j];
            }
            let Some((n, d)) = sphere_moment_parts(&alpha, m) else {
                continue;
            };
            let mom = ExactScalar::real(BigRational::new(n, d));
            if !theta.rational_part.is_zero() {
                rat.add_assign_ref(&fb.scale(&(&mom * &theta.rational_part)));
            }
            if !theta.inv_pi_part.is_zero() {
                inv_pi.add_assign_ref(&fb.scale(&(&mom * &theta.inv_pi_part)));
            }
        }
        let mut out_rat = Vec::new();
        let mut out_inv = Vec::new();
        for (gamma, c) in gammas.iter() {
            if !rat.is_zero() {
                out_rat.push((gamma.clone(), c.mul_unchecked(&rat)));
            }
            if !inv_pi.is_zero() {
                out_inv.push((gamma.clone(), c.mul_unchecked(&inv_pi)));
            }
        }
        (out_rat, out_inv)
    });
    let mut rational_part = PolyMV::zero(m, &rest);
    let mut inv_pi_part = PolyMV::zero(m, &rest);
    for (r, i) in pieces {
        for (k, c) in r {
            rational_part.add_term(k, c);
        }
        for (k, c) in i {
            inv_pi_part.add_term(k, c);
        }
    }
    Ok(LieIntegralValue { rational_part, inv_pi_part })
}

/// Normalized Lie-sphere integral; errors if a `1/π` part survives.
pub fn lie_sphere_integral(kernel: &PolyMV, wvar: &str, f: &PolyMV, exec: Exec) -> Result<PolyMV, IntegrateError> {
    let v = lie_sphere_integral_value(kernel, wvar, f, exec)?;
    if !v.inv_pi_part.is_zero() {
        return Err(IntegrateError::ParityViolation);
    }
    Ok(v.rational_part)
}

/// `(1/(πA_m)) ⟨f, g⟩` for polynomials in one variable each.
pub fn lie_inner_product(f: &PolyMV, g: &PolyMV, exec: Exec) -> Result<Multivector, IntegrateError> {
    if f.vars().len() != 1 {
        return Err(IntegrateError::VariableCount { expected: 1, got: f.vars().len() });
    }
    let fv = f.vars()[0].clone();
    let r = lie_sphere_integral(&f.hermitian_conjugate(), &fv, g, exec)?;
    Ok(r.terms().values().next().cloned().unwrap_or_else(|| Multivector::zero(f.dim())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_examples() {
        assert_eq!(theta_integral(0).rational_part, ExactScalar::one());
        assert!(theta_integral(2).is_zero());
        assert!(theta_integral(-4).is_zero());
        let t1 = theta_integral(1);
        assert!(t1.rational_part.is_zero());
        assert_eq!(t1.inv_pi_part, ExactScalar::gaussian(0, 2));
        assert_eq!(theta_integral(-3).inv_pi_part, &ExactScalar::gaussian(0, -2) / &ExactScalar::from_int(3));
    }

    #[test]
    fn one_against_one() {
        let one = PolyMV::one(3, &["w"]);
        let r = lie_inner_product(&one, &one, Exec::Sequential).unwrap();
        assert_eq!(r, Multivector::one(3));
    }

    #[test]
    fn mixed_parity_pieces_cancel() {
        let m = 3;
        let w = PolyMV::vector_variable("w", m);
        let z = PolyMV::vector_variable("z", m);
        let kernel = &PolyMV::one(m, &["w"]) + &(&w * &w);
        let f = &(&z + &PolyMV::one(m, &["z"])) + &(&z * &z).pow(1);
        let v = lie_sphere_integral_value(&kernel, "w", &f, Exec::Sequential).unwrap();
        assert!(v.inv_pi_part.is_zero());
    }

    #[test]
    fn wrong_variable_count_is_an_error() {
        let f = PolyMV::one(3, &["a", "b"]);
        let k = PolyMV::one(3, &["w"]);
        assert!(matches!(
            lie_sphere_integral(&k, "w", &f, Exec::Sequential),
            Err(IntegrateError::VariableCount { .. })
        ));
    }
}
