use num_traits::One;

use super::{AlgebraError, ExactScalar, Multivector};

/// An element `σ = σ_1 σ_2 ⋯ σ_{2s}` of Spin(m) given by unit-vector factors
/// with rational components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinElement {
    factors: Vec<Multivector>,
    sigma: Multivector,
    sigma_bar: Multivector,
}

impl SpinElement {
    pub fn new(factors: Vec<Multivector>) -> Result<Self, AlgebraError> {
        if factors.is_empty() || factors.len() % 2 != 0 {
            return Err(AlgebraError::OddFactorCount(factors.len()));
        }
        let dim = factors[0].dim();
        for (index, f) in factors.iter().enumerate() {
            if f.dim() != dim {
                return Err(AlgebraError::DimensionMismatch { left: dim, right: f.dim() });
            }
            let comps = f.vector_components().ok_or(AlgebraError::NonUnitFactor { index })?;
            let real = comps.iter().all(ExactScalar::is_real);
            if !real || !f.coefficient_norm_sq().is_one() {
                return Err(AlgebraError::NonUnitFactor { index });
            }
        }
        let sigma = factors
            .iter()
            .fold(Multivector::one(dim), |acc, f| acc.mul_unchecked(f));
        let sigma_bar = sigma.clifford_conjugate();
        Ok(Self { factors, sigma, sigma_bar })
    }

    pub fn dim(&self) -> usize {
        self.sigma.dim()
    }

    pub fn factors(&self) -> &[Multivector] {
        &self.factors
    }

    pub fn sigma(&self) -> &Multivector {
        &self.sigma
    }

    pub fn sigma_bar(&self) -> &Multivector {
        &self.sigma_bar
    }

    /// `σ a σ̄`.
    pub fn sandwich(&self, a: &Multivector) -> Result<Multivector, AlgebraError> {
        self.sigma.geometric_product(a)?.geometric_product(&self.sigma_bar)
    }

    /// `σ̄ a σ`.
    pub fn inverse_sandwich(&self, a: &Multivector) -> Result<Multivector, AlgebraError> {
        self.sigma_bar.geometric_product(a)?.geometric_product(&self.sigma)
    }

    /// Matrix `R` with `σ̄ e_j σ = Σ_k R[k][j] e_k`, i.e. the linear map
    /// `x ↦ σ̄ x σ` on 1-vectors.
    pub fn inverse_rotation_matrix(&self) -> Vec<Vec<ExactScalar>> {
        let m = self.dim();
        let mut r = vec![vec![ExactScalar::zero(); m]; m];
        for j in 1..=m {
            let img = self
                .inverse_sandwich(&Multivector::e(m, j))
                .expect("same dimension");
            let comps = img.vector_components().expect("spin action preserves 1-vectors");
            for (k, c) in comps.into_iter().enumerate() {
                r[k][j - 1] = c;
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_by_pi_in_e12_plane() {
        let s = SpinElement::new(vec![Multivector::e(3, 1), Multivector::e(3, 2)]).unwrap();
        assert_eq!(s.sandwich(&Multivector::e(3, 1)).unwrap(), -&Multivector::e(3, 1));
        assert_eq!(s.sandwich(&Multivector::e(3, 3)).unwrap(), Multivector::e(3, 3));
    }

    #[test]
    fn rejects_bad_factors() {
        let two_e1 = Multivector::e(3, 1).scale(&ExactScalar::from_int(2));
        assert!(matches!(
            SpinElement::new(vec![two_e1, Multivector::e(3, 2)]),
            Err(AlgebraError::NonUnitFactor { index: 0 })
        ));
        assert!(matches!(
            SpinElement::new(vec![Multivector::e(3, 2)]),
            Err(AlgebraError::OddFactorCount(1))
        ));
    }

    #[test]
    fn pythagorean_factor_preserves_norm() {
        let u = Multivector::vector(3, &[ExactScalar::frac(3, 5), ExactScalar::frac(4, 5), ExactScalar::zero()]);
        let s = SpinElement::new(vec![u, Multivector::e(3, 3)]).unwrap();
        let v = Multivector::vector(3, &[1.into(), 2.into(), 3.into()]);
        let img = s.sandwich(&v).unwrap();
        assert!(img.is_grade(1));
        assert_eq!(img.coefficient_norm_sq(), v.coefficient_norm_sq());
    }
}
