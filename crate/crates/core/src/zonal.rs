//! Zonal spherical harmonics `K_{m,k}(x,y)` and zonal spherical monogenics
//! `𝒞_{m,k}(x,y)`, expanded in the monomial basis
//! `⟨x,y⟩^{k−2j} (|x|²|y|²)^j`.

use crate::algebra::ExactScalar;
use crate::integrate::wick::PairingPoly;
use crate::poly::PolyMV;
use crate::special::{gegenbauer, q};

const VARS: [&str; 2] = ["x", "y"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZonalKind {
    Harmonic,
    Monogenic,
}

/// A zonal kernel of degree `k` in each of `x` and `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZonalKernel {
    pub kind: ZonalKind,
    pub m: usize,
    pub k: usize,
    pub body: PolyMV,
}

/// `Σ_j c_{k−2j} ⟨x,y⟩^{k−2j} (|x|²|y|²)^j` on the alphabet `{x, y}`, where
/// `c` are the coefficients of `C_k^λ`.
fn gegenbauer_pairing(k: usize, lambda: &num_rational::BigRational) -> PairingPoly {
    let c = gegenbauer(k, lambda);
    let xy = PairingPoly::pairing(2, 0, 1);
    let norms = PairingPoly::pairing(2, 0, 0).mul(&PairingPoly::pairing(2, 1, 1));
    let mut out = PairingPoly::zero(2);
    for j in 0..=k / 2 {
        let coef = c.coeff(k - 2 * j);
        if coef.is_zero() {
            continue;
        }
        out = out.add(&xy.pow((k - 2 * j) as u32).mul(&norms.pow(j as u32)).scale(&coef));
    }
    out
}

/// `K_{m,k}` as a polynomial in the pairings of `x` (letter 0) and `y` (letter 1).
pub fn zonal_harmonic_pairing(m: usize, k: usize) -> PairingPoly {
    assert!(m >= 3, "zonal kernels need m ≥ 3");
    let lambda = q(m as i64 - 2, 2);
    let factor = ExactScalar::real(q(2 * k as i64 + m as i64 - 2, m as i64 - 2));
    gegenbauer_pairing(k, &lambda).scale(&factor)
}

fn realize(m: usize, p: &PairingPoly) -> PolyMV {
    use crate::integrate::wick::Symbol;
    p.realize(m, &VARS, &[Symbol::Var("x".into()), Symbol::Var("y".into())])
        .expect("x and y are declared")
}

/// `K_{m,k}(x,y) = (2k+m−2)/(m−2) |x|^k|y|^k C_k^{m/2−1}(⟨x,y⟩/(|x||y|))`.
pub fn zonal_harmonic(m: usize, k: usize) -> ZonalKernel {
    ZonalKernel { kind: ZonalKind::Harmonic, m, k, body: realize(m, &zonal_harmonic_pairing(m, k)) }
}

/// `𝒞_{m,k}(x,y) = |x|^k|y|^k C_k^{m/2}(t) + x y |x|^{k−1}|y|^{k−1} C_{k−1}^{m/2}(t)`.
pub fn zonal_monogenic(m: usize, k: usize) -> ZonalKernel {
    assert!(m >= 3, "zonal kernels need m ≥ 3");
    let lambda = q(m as i64, 2);
    let mut body = realize(m, &gegenbauer_pairing(k, &lambda));
    if k > 0 {
        let x = PolyMV::vector_in(m, &VARS, "x").expect("declared");
        let y = PolyMV::vector_in(m, &VARS, "y").expect("declared");
        let rest = realize(m, &gegenbauer_pairing(k - 1, &lambda));
        body = &body + &(&(&x * &y) * &rest);
    }
    ZonalKernel { kind: ZonalKind::Monogenic, m, k, body }
}

/// `K_{m,k+1} = 𝒞_{m,k+1} − x 𝒞_{m,k} y`, checked as an exact polynomial identity.
pub fn harmonic_monogenic_relation_check(m: usize, k: usize) -> bool {
    let x = PolyMV::vector_in(m, &VARS, "x").expect("declared");
    let y = PolyMV::vector_in(m, &VARS, "y").expect("declared");
    let lhs = zonal_harmonic(m, k + 1).body;
    let rhs = &zonal_monogenic(m, k + 1).body - &(&(&x * &zonal_monogenic(m, k).body) * &y);
    lhs == rhs
}

impl ZonalKernel {
    /// The kernel with `y` fixed at a constant vector, as a polynomial in `x` alone.
    pub fn at_y(&self, y: &[ExactScalar]) -> PolyMV {
        self.body
            .substitute_exact(&[("y", y.to_vec())])
            .and_then(|p| p.restrict(&["x"]))
            .expect("x and y are declared")
    }

    /// The kernel with `x` renamed to `var` and `y` to `yvar`.
    pub fn renamed(&self, var: &str, yvar: &str) -> PolyMV {
        self.body.rename(&[var, yvar])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Multivector, SpinElement};
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn low_degrees() {
        for m in 3..=6 {
            assert_eq!(zonal_harmonic(m, 0).body, PolyMV::one(m, &VARS));
            assert_eq!(zonal_monogenic(m, 0).body, PolyMV::one(m, &VARS));
            let xy = PolyMV::pairing(m, &VARS, "x", "y").unwrap();
            assert_eq!(zonal_harmonic(m, 1).body, xy.scale(&ExactScalar::from_int(m as i64)));
            let x = PolyMV::vector_in(m, &VARS, "x").unwrap();
            let y = PolyMV::vector_in(m, &VARS, "y").unwrap();
            assert_eq!(zonal_monogenic(m, 1).body, &xy.scale(&ExactScalar::from_int(m as i64)) + &(&x * &y));
        }
    }

    #[test]
    fn harmonic_and_monogenic() {
        for m in 3..=5 {
            for k in 0..=4 {
                let kk = zonal_harmonic(m, k).body;
                assert!(kk.laplacian("x").unwrap().is_zero());
                assert!(kk.laplacian("y").unwrap().is_zero());
                assert!(kk.is_scalar_valued());
                let c = zonal_monogenic(m, k).body;
                assert!(c.dirac_left("x").unwrap().is_zero(), "m={m} k={k}");
                assert!(c.dirac_right("y").unwrap().is_zero(), "m={m} k={k}");
                assert_eq!(c.homogeneous_degree("x").unwrap(), Some(k as u32));
            }
        }
    }

    #[test]
    fn relation_between_kernels() {
        for (m, k) in [(3, 0), (4, 2), (5, 3), (3, 4)] {
            assert!(harmonic_monogenic_relation_check(m, k));
        }
    }

    #[test]
    fn hermitian_symmetry() {
        for m in 3..=4 {
            for k in 0..=3 {
                let c = zonal_monogenic(m, k).body;
                assert_eq!(c.rename(&["y", "x"]).embed(&VARS).unwrap(), c.hermitian_conjugate());
            }
        }
    }

    #[test]
    fn spin_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = 3;
        let f1 = Multivector::vector(m, &random::rational_unit_vector(&mut rng, m));
        let f2 = Multivector::vector(m, &random::rational_unit_vector(&mut rng, m));
        let s = SpinElement::new(vec![f1, f2]).unwrap();
        let r = s.inverse_rotation_matrix();
        for k in 0..=3 {
            let c = zonal_monogenic(m, k).body;
            let moved = c.linear_substitute("x", &r).unwrap().linear_substitute("y", &r).unwrap();
            let back = moved.left_mul(s.sigma()).right_mul(s.sigma_bar());
            assert_eq!(back, c);
        }
    }
}
