use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::sphere::sphere_moment_parts;
use super::IntegrateError;
use crate::algebra::ExactScalar;
use crate::poly::{Monomial, PolyMV};

type TPoly = BTreeMap<Vec<u16>, BigRational>;

/// `E_s[s^β]` for `s` uniform on the unit sphere of `t^⊥`, as a polynomial in `t`.
fn s_moment(beta: &[u16], m: usize) -> TPoly {
    let mut idx = Vec::new();
    for (j, &e) in beta.iter().enumerate() {
        idx.extend(std::iter::repeat(j).take(e as usize));
    }
    let mut out = TPoly::new();
    if idx.len() % 2 == 1 {
        return out;
    }
    let mut one = TPoly::new();
    one.insert(vec![0; m], BigRational::one());
    matchings(&mut idx, one, m, &mut out);
    let half = idx.len() / 2;
    let den: BigInt = (0..half).map(|r| BigInt::from(m - 1 + 2 * r)).product();
    let den = BigRational::from_integer(den);
    out.retain(|_, c| !c.is_zero());
    for c in out.values_mut() {
        *c /= &den;
    }
    out
}

fn matchings(rest: &mut Vec<usize>, acc: TPoly, m: usize, out: &mut TPoly) {
    if rest.is_empty() {
        for (k, c) in acc {
            *out.entry(k).or_insert_with(BigRational::zero) += c;
        }
        return;
    }
    let i = rest.remove(0);
    for pos in 0..rest.len() {
        let j = rest.remove(pos);
        // multiply by P_ij = δ_ij − t_i t_j
        let mut next = TPoly::new();
        for (k, c) in &acc {
            if i == j {
                *next.entry(k.clone()).or_insert_with(BigRational::zero) += c;
            }
            let mut k2 = k.clone();
            k2[i] += 1;
            k2[j] += 1;
            *next.entry(k2).or_insert_with(BigRational::zero) -= c;
        }
        matchings(rest, next, m, out);
        rest.insert(pos, j);
    }
    rest.insert(0, i);
}

/// Normalized average over orthonormal pairs `(t, s)` in ℝ^m of a
/// polynomial in the variables `"t"`, `"s"` and possibly others, which
/// remain symbolic.
pub fn stiefel_average(f: &PolyMV) -> Result<PolyMV, IntegrateError> {
    let m = f.dim();
    let ti = f.var_index("t")?;
    let si = f.var_index("s")?;
    let rest: Vec<&str> = f.var_names().into_iter().filter(|n| *n != "t" && *n != "s").collect();
    let nv = f.vars().len();
    let mut cache: HashMap<Vec<u16>, TPoly> = HashMap::new();
    let mut out = PolyMV::zero(m, &rest);
    for (k, c) in f.terms() {
        let alpha = &k[ti * m..(ti + 1) * m];
        let beta = &k[si * m..(si + 1) * m];
        let sm = cache.entry(beta.to_vec()).or_insert_with(|| s_moment(beta, m));
        let mut w = BigRational::zero();
        let mut full = vec![0u16; m];
        for (tk, tc) in sm.iter() {
            for j in 0..m {
                full[j] = alpha[j] + tk[j];
            }
            if let Some((n, d)) = sphere_moment_parts(&full, m) {
                w += tc * BigRational::new(n, d);
            }
        }
        if w.is_zero() {
            continue;
        }
        let mut key: Monomial = Vec::with_capacity(rest.len() * m);
        for v in 0..nv {
            if v != ti && v != si {
                key.extend_from_slice(&k[v * m..(v + 1) * m]);
            }
        }
        out.add_term(key, c.scale_rational(&w));
    }
    Ok(out)
}

/// Convenience: `⟨c, τ⟩` style linear forms expand through `τ = t + i s`.
pub fn tau(dim: usize, vars: &[&str]) -> Result<PolyMV, IntegrateError> {
    let t = PolyMV::vector_in(dim, vars, "t")?;
    let s = PolyMV::vector_in(dim, vars, "s")?;
    Ok(&t + &s.scale(&ExactScalar::i()))
}

/// `τ† = −t + i s`.
pub fn tau_dagger(dim: usize, vars: &[&str]) -> Result<PolyMV, IntegrateError> {
    let t = PolyMV::vector_in(dim, vars, "t")?;
    let s = PolyMV::vector_in(dim, vars, "s")?;
    Ok(&(-&t) + &s.scale(&ExactScalar::i()))
}
