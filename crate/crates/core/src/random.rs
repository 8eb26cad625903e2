//! Seeded generators of exact random inputs.

use rand::Rng;

use crate::algebra::{Blade, ExactScalar, Multivector};
use crate::poly::PolyMV;

/// Small rational with numerator in `-bound..=bound` and denominator in `1..=den`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64, den: i64) -> ExactScalar {
    ExactScalar::frac(rng.random_range(-bound..=bound), rng.random_range(1..=den))
}

pub fn gaussian_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> ExactScalar {
    let re = rational(rng, bound, 3);
    let im = rational(rng, bound, 3);
    &re + &(&im * &ExactScalar::i())
}

/// Random multivector with `nterms` blades and Gaussian-rational coefficients.
pub fn multivector<R: Rng + ?Sized>(rng: &mut R, dim: usize, nterms: usize) -> Multivector {
    let terms = (0..nterms)
        .map(|_| (Blade(rng.random_range(0..(1u32 << dim))), gaussian_rational(rng, 4)))
        .collect::<Vec<_>>();
    Multivector::from_terms(dim, terms)
}

/// Random real rational 1-vector.
pub fn real_vector<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Vec<ExactScalar> {
    (0..dim).map(|_| rational(rng, 5, 3)).collect()
}

/// Random homogeneous polynomial of the given degree in `var`.
pub fn homogeneous_poly<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    var: &str,
    degree: u32,
    nterms: usize,
    scalar_valued: bool,
) -> PolyMV {
    let terms = (0..nterms).map(|_| {
        let mut key = vec![0u16; dim];
        for _ in 0..degree {
            key[rng.random_range(0..dim)] += 1;
        }
        let c = if scalar_valued {
            Multivector::scalar(dim, gaussian_rational(rng, 4))
        } else {
            multivector(rng, dim, 2)
        };
        (key, c)
    });
    PolyMV::from_terms(dim, &[var], terms.collect::<Vec<_>>())
}

/// Random polynomial with parts of every degree up to `max_degree`.
pub fn poly<R: Rng + ?Sized>(rng: &mut R, dim: usize, var: &str, max_degree: u32, nterms: usize) -> PolyMV {
    let mut p = PolyMV::zero(dim, &[var]);
    for d in 0..=max_degree {
        p = &p + &homogeneous_poly(rng, dim, var, d, nterms, false);
    }
    p
}

/// Unit vector in ℚ^n from inverse stereographic projection of a random
/// rational point.
pub fn rational_unit_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<ExactScalar> {
    loop {
        let u: Vec<ExactScalar> = (0..n.saturating_sub(1)).map(|_| rational(rng, 3, 2)).collect();
        let s: ExactScalar = u.iter().map(|x| x * x).sum();
        let denom = &s + &ExactScalar::one();
        let mut v: Vec<ExactScalar> = u.iter().map(|x| &(x * &ExactScalar::from_int(2)) / &denom).collect();
        v.push(&(&s - &ExactScalar::one()) / &denom);
        // avoid degenerate axis-aligned draws so frames stay generic
        if v.iter().filter(|x| !x.is_zero()).count() >= 2.min(n) {
            return v;
        }
    }
}
