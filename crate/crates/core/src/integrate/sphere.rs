use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::IntegrateError;
use crate::algebra::{ExactScalar, Multivector};
use crate::poly::PolyMV;

/// `(1/A_m) ∫_{S^{m−1}} ω^α dS(ω)`.
pub fn sphere_moment(alpha: &[u16], m: usize) -> BigRational {
    sphere_moment_parts(alpha, m)
        .map(|(n, d)| BigRational::new(n, d))
        .unwrap_or_else(BigRational::zero)
}

/// `∏ (a_j − 1)!!` over the entries and `∏_{i<|α|/2} (m + 2i)`, in u128.
fn moment_parts_u128(alpha: &[u16], m: usize) -> Option<(u128, u128)> {
    let mut num: u128 = 1;
    let mut half: u128 = 0;
    for &a in alpha {
        let mut k = a as u128;
        while k > 1 {
            num = num.checked_mul(k - 1)?;
            k -= 2;
        }
        half += a as u128 / 2;
    }
    let mut den: u128 = 1;
    for i in 0..half {
        den = den.checked_mul(m as u128 + 2 * i)?;
    }
    Some((num, den))
}

fn moment_parts_big(alpha: &[u16], m: usize) -> (BigInt, BigInt) {
    let mut num = BigInt::from(1);
    let mut half = 0u64;
    for &a in alpha {
        let mut k = a as u64;
        while k > 1 {
            num *= k - 1;
            k -= 2;
        }
        half += a as u64 / 2;
    }
    let den = (0..half).fold(BigInt::from(1), |acc, i| acc * (m as u64 + 2 * i));
    (num, den)
}

/// Unreduced numerator and denominator of the moment, `None` when it
/// vanishes.
pub(crate) fn sphere_moment_parts(alpha: &[u16], m: usize) -> Option<(BigInt, BigInt)> {
    if alpha.iter().any(|a| a % 2 == 1) {
        return None;
    }
    Some(match moment_parts_u128(alpha, m) {
        Some((n, d)) => (BigInt::from(n), BigInt::from(d)),
        None => moment_parts_big(alpha, m),
    })
}

/// Normalized sphere integral of a polynomial in one vector variable.
pub fn sphere_integral(p: &PolyMV) -> Result<Multivector, IntegrateError> {
    if p.vars().len() != 1 {
        return Err(IntegrateError::VariableCount { expected: 1, got: p.vars().len() });
    }
    let var = p.vars()[0].clone();
    let out = sphere_integrate_var(p, &var)?;
    Ok(out.terms().values().next().cloned().unwrap_or_else(|| Multivector::zero(p.dim())))
}

/// Integrates out one variable over `S^{m−1}` (normalized), keeping the rest
/// symbolic.
pub fn sphere_integrate_var(p: &PolyMV, var: &str) -> Result<PolyMV, IntegrateError> {
    let m = p.dim();
    let v = p.var_index(var)?;
    let rest: Vec<&str> = p.var_names().into_iter().filter(|n| *n != var).collect();
    let mut out = PolyMV::zero(m, &rest);
    for (k, c) in p.terms() {
        let Some((n, d)) = sphere_moment_parts(&k[v * m..(v + 1) * m], m) else {
            continue;
        };
        let w = ExactScalar::real(BigRational::new(n, d));
        let mut key = k[..v * m].to_vec();
        key.extend_from_slice(&k[(v + 1) * m..]);
        out.add_term(key, c.scale(&w));
    }
    Ok(out)
}
