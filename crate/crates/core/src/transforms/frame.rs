use rand::Rng;

use super::TransformError;
use crate::algebra::{ExactScalar, Multivector};
use crate::random::rational_unit_vector;

/// An orthonormal pair `(t, s)` of real rational vectors, with `τ = t + i s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicFrame {
    m: usize,
    t: Vec<ExactScalar>,
    s: Vec<ExactScalar>,
}

fn dot(a: &[ExactScalar], b: &[ExactScalar]) -> ExactScalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl IsotropicFrame {
    pub fn new(t: Vec<ExactScalar>, s: Vec<ExactScalar>) -> Result<Self, TransformError> {
        let m = t.len();
        if s.len() != m || m < 3 {
            return Err(TransformError::Frame("t and s need the same length m ≥ 3".into()));
        }
        if t.iter().chain(&s).any(|c| !c.is_real()) {
            return Err(TransformError::Frame("t and s must be real".into()));
        }
        if !dot(&t, &t).is_one() || !dot(&s, &s).is_one() || !dot(&t, &s).is_zero() {
            return Err(TransformError::Frame("t and s must be orthonormal".into()));
        }
        Ok(Self { m, t, s })
    }

    /// `τ = e₁ + i e₂`.
    pub fn canonical(m: usize) -> Self {
        let mut t = vec![ExactScalar::zero(); m];
        let mut s = t.clone();
        t[0] = ExactScalar::one();
        s[1] = ExactScalar::one();
        Self::new(t, s).expect("canonical frame is orthonormal")
    }

    /// A random rational frame: a rational unit vector `t`, and `s` the image
    /// of a rational unit vector of `e₁^⊥` under the Householder reflection
    /// taking `e₁` to `t`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Self {
        let t = rational_unit_vector(rng, m);
        let mut u = vec![ExactScalar::zero()];
        u.extend(rational_unit_vector(rng, m - 1));
        let mut w = t.iter().map(|x| -x).collect::<Vec<_>>();
        w[0] += ExactScalar::one();
        let ww = dot(&w, &w);
        let s = if ww.is_zero() {
            u
        } else {
            let f = &(&dot(&w, &u) * &ExactScalar::from_int(2)) / &ww;
            u.iter().zip(&w).map(|(x, y)| x - &(&f * y)).collect()
        };
        Self::new(t, s).expect("Householder images are orthonormal")
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> &[ExactScalar] {
        &self.t
    }

    pub fn s(&self) -> &[ExactScalar] {
        &self.s
    }

    /// Components of `τ = t + i s`.
    pub fn tau_components(&self) -> Vec<ExactScalar> {
        self.t.iter().zip(&self.s).map(|(a, b)| a + &(b * &ExactScalar::i())).collect()
    }

    /// Components of `τ† = −t + i s`.
    pub fn tau_dagger_components(&self) -> Vec<ExactScalar> {
        self.t.iter().zip(&self.s).map(|(a, b)| &(b * &ExactScalar::i()) - a).collect()
    }

    pub fn tau(&self) -> Multivector {
        Multivector::vector(self.m, &self.tau_components())
    }

    pub fn tau_dagger(&self) -> Multivector {
        Multivector::vector(self.m, &self.tau_dagger_components())
    }

    /// `ττ†τ = 4τ`, `τ² = (τ†)² = 0` and `ττ† + τ†τ = 4`.
    pub fn identities_hold(&self) -> bool {
        let (tau, taud) = (self.tau(), self.tau_dagger());
        let four = Multivector::scalar(self.m, ExactScalar::from_int(4));
        &(&tau * &taud) * &tau == tau.scale(&ExactScalar::from_int(4))
            && (&tau * &tau).is_zero()
            && (&taud * &taud).is_zero()
            && &(&tau * &taud) + &(&taud * &tau) == four
            && tau.hermitian_conjugate() == taud
    }
}
