use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::{AlgebraError, ExactScalar};

/// Largest supported dimension; blades are stored as bitmasks.
pub const MAX_DIM: usize = 16;

/// A basis blade `e_A`, stored as the bitmask of `A ⊂ {1, …, m}` (bit `j-1`
/// for generator `e_j`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Blade from strictly increasing 1-based generator indices.
    pub fn from_indices(dim: usize, indices: &[usize]) -> Result<Self, AlgebraError> {
        let mut mask = 0u32;
        let mut last = 0;
        for &j in indices {
            if j == 0 || j > dim {
                return Err(AlgebraError::IndexOutOfRange { index: j, dim });
            }
            if j <= last {
                return Err(AlgebraError::Parse(format!("generator indices must increase, got {j} after {last}")));
            }
            last = j;
            mask |= 1u32 << (j - 1);
        }
        Ok(Blade(mask))
    }

    pub fn vector(j: usize) -> Self {
        Blade(1 << (j - 1))
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    /// `e_A e_B = sign · e_{A Δ B}`; returns the blade and whether the sign is negative.
    ///
    /// The sign collects one factor −1 per transposition needed to sort the
    /// concatenated index list, and one per repeated generator (`e_j² = −1`).
    pub fn product(self, other: Blade) -> (Blade, bool) {
        let mut swaps = 0u32;
        let mut a = self.0 >> 1;
        while a != 0 {
            swaps += (a & other.0).count_ones();
            a >>= 1;
        }
        swaps += (self.0 & other.0).count_ones();
        (Blade(self.0 ^ other.0), swaps % 2 == 1)
    }

    /// Sign of `e_A†` relative to `e_A`: `(−1)^{k(k+1)/2}`.
    pub fn dagger_negates(self) -> bool {
        let k = self.grade();
        (k * (k + 1) / 2) % 2 == 1
    }

    /// Sign of the reversion `e_{i_k} … e_{i_1}`: `(−1)^{k(k−1)/2}`.
    pub fn reverse_negates(self) -> bool {
        let k = self.grade();
        (k * k.saturating_sub(1) / 2) % 2 == 1
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        let idx = self.indices();
        let joined: Vec<String> = idx.iter().map(|j| j.to_string()).collect();
        if idx.iter().all(|&j| j < 10) {
            write!(f, "{}", joined.join(""))
        } else {
            write!(f, "{{{}}}", joined.join(","))
        }
    }
}

/// An element of the complex Clifford algebra ℂ_m.
///
/// Terms are kept sorted by blade with zero coefficients removed, so
/// derived equality is exact algebraic equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: usize,
    terms: Vec<(Blade, ExactScalar)>,
}

fn check_dim(dim: usize) {
    assert!(
        (1..=MAX_DIM).contains(&dim),
        "Clifford dimension must be in 1..={MAX_DIM}, got {dim}"
    );
}

impl Multivector {
    pub fn zero(dim: usize) -> Self {
        check_dim(dim);
        Self { dim, terms: Vec::new() }
    }

    pub fn scalar(dim: usize, c: ExactScalar) -> Self {
        Self::from_terms(dim, [(Blade::SCALAR, c)])
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, ExactScalar::one())
    }

    /// Generator `e_j` (1-based). Panics when `j` is out of range.
    pub fn e(dim: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= dim, "generator e_{j} out of range for dim {dim}");
        Self::from_terms(dim, [(Blade::vector(j), ExactScalar::one())])
    }

    pub fn blade(dim: usize, indices: &[usize], c: ExactScalar) -> Result<Self, AlgebraError> {
        let b = Blade::from_indices(dim, indices)?;
        Ok(Self::from_terms(dim, [(b, c)]))
    }

    /// The 1-vector `Σ_j c_j e_j`.
    pub fn vector(dim: usize, comps: &[ExactScalar]) -> Self {
        assert_eq!(comps.len(), dim, "vector component count must equal dim");
        Self::from_terms(
            dim,
            comps.iter().enumerate().map(|(j, c)| (Blade::vector(j + 1), c.clone())),
        )
    }

    /// Builds a canonical multivector, merging repeated blades.
    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Blade, ExactScalar)>,
    {
        check_dim(dim);
        let mut v: Vec<(Blade, ExactScalar)> = terms.into_iter().collect();
        debug_assert!(v.iter().all(|(b, _)| (b.0 >> dim) == 0));
        canonicalize(&mut v);
        Self { dim, terms: v }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(Blade, ExactScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: Blade) -> ExactScalar {
        match self.terms.binary_search_by_key(&b, |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => ExactScalar::zero(),
        }
    }

    pub fn scalar_part(&self) -> ExactScalar {
        self.coefficient(Blade::SCALAR)
    }

    pub fn is_scalar(&self) -> bool {
        self.terms.iter().all(|(b, _)| b.0 == 0)
    }

    /// True when every nonzero term has grade `k` (zero counts).
    pub fn is_grade(&self, k: usize) -> bool {
        self.terms.iter().all(|(b, _)| b.grade() == k)
    }

    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Multivector) -> Multivector {
        if self.terms.len() == 1 && other.terms.len() == 1 {
            let (a, ca) = &self.terms[0];
            let (b, cb) = &other.terms[0];
            let (blade, neg) = a.product(*b);
            let c = ca * cb;
            let c = if neg { -c } else { c };
            return Multivector { dim: self.dim, terms: vec![(blade, c)] };
        }
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (blade, neg) = a.product(*b);
                let c = ca * cb;
                out.push((blade, if neg { -c } else { c }));
            }
        }
        canonicalize(&mut out);
        Multivector { dim: self.dim, terms: out }
    }

    pub fn scale(&self, c: &ExactScalar) -> Multivector {
        if c.is_zero() {
            return Multivector::zero(self.dim);
        }
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Multivector {
        self.scale(&ExactScalar::real(r.clone()))
    }

    /// `α ↦ α†`: reverses products, negates generators, conjugates coefficients.
    pub fn hermitian_conjugate(&self) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| {
                    let c = c.conj();
                    (*b, if b.dagger_negates() { -c } else { c })
                })
                .collect(),
        }
    }

    /// Clifford conjugation `ᾱ` (reversion composed with grade involution);
    /// coefficients are left untouched.
    pub fn clifford_conjugate(&self) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if b.dagger_negates() { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn reverse(&self) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if b.reverse_negates() { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// `[α]_k`.
    pub fn grade_projection(&self, k: usize) -> Result<Multivector, AlgebraError> {
        if k > self.dim {
            return Err(AlgebraError::GradeOutOfRange { grade: k, dim: self.dim });
        }
        Ok(Multivector {
            dim: self.dim,
            terms: self.terms.iter().filter(|(b, _)| b.grade() == k).cloned().collect(),
        })
    }

    /// `Σ_A |α_A|²`, which equals `[α†α]_0`.
    pub fn coefficient_norm_sq(&self) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (_, c)| acc + c.modulus_sq())
    }

    /// Components `(c_1, …, c_m)` when this is a 1-vector.
    pub fn vector_components(&self) -> Option<Vec<ExactScalar>> {
        if !self.is_grade(1) {
            return None;
        }
        let mut out = vec![ExactScalar::zero(); self.dim];
        for (b, c) in &self.terms {
            out[b.indices()[0] - 1] = c.clone();
        }
        Some(out)
    }

    pub fn to_float(&self) -> FloatMultivector {
        FloatMultivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, c.to_complex())).collect(),
        }
    }

    pub(crate) fn add_assign_ref(&mut self, other: &Multivector) {
        debug_assert_eq!(self.dim, other.dim);
        if other.terms.is_empty() {
            return;
        }
        if self.terms.is_empty() {
            self.terms = other.terms.clone();
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = std::mem::take(&mut self.terms).into_iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ka, _)), Some((kb, _))) => {
                    if ka < kb {
                        out.push(a.next().unwrap());
                    } else if kb < ka {
                        out.push(b.next().unwrap().clone());
                    } else {
                        let (k, mut c) = a.next().unwrap();
                        c += &b.next().unwrap().1;
                        if !c.is_zero() {
                            out.push((k, c));
                        }
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => out.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        self.terms = out;
    }
}

fn canonicalize(v: &mut Vec<(Blade, ExactScalar)>) {
    if v.len() > 1 {
        v.sort_by_key(|(b, _)| *b);
        let mut out: Vec<(Blade, ExactScalar)> = Vec::with_capacity(v.len());
        for (b, c) in v.drain(..) {
            match out.last_mut() {
                Some((lb, lc)) if *lb == b => *lc += c,
                _ => out.push((b, c)),
            }
        }
        *v = out;
    }
    v.retain(|(_, c)| !c.is_zero());
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if b.0 == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{c}·{b}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector[m={}]({})", self.dim, self)
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.dim, rhs.dim, "multivector dimension mismatch");
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &(-rhs)
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }
}

/// Geometric product. Panics on a dimension mismatch; use
/// [`Multivector::geometric_product`] for the fallible form.
impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("multivector dimension mismatch")
    }
}

/// Floating-point view of a multivector with complex coefficients.
///
/// Only linear operations are provided; products stay in exact arithmetic.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMultivector {
    pub dim: usize,
    pub terms: BTreeMap<Blade, Complex64>,
}

impl FloatMultivector {
    pub fn zero(dim: usize) -> Self {
        Self { dim, terms: BTreeMap::new() }
    }

    pub fn get(&self, b: Blade) -> Complex64 {
        self.terms.get(&b).copied().unwrap_or_default()
    }

    pub fn add_scaled(&mut self, b: Blade, c: Complex64) {
        *self.terms.entry(b).or_default() += c;
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { dim: self.dim, terms: self.terms.iter().map(|(b, x)| (*b, x * c)).collect() }
    }

    /// Geometric product in floating point.
    pub fn mul(&self, other: &FloatMultivector) -> FloatMultivector {
        let mut out = FloatMultivector::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (p, neg) = a.product(*b);
                out.add_scaled(p, if neg { -(x * y) } else { x * y });
            }
        }
        out
    }

    /// Largest componentwise distance `max_A |a_A − b_A|`.
    pub fn max_abs_diff(&self, other: &FloatMultivector) -> f64 {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .map(|b| (self.get(*b) - other.get(*b)).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(j: usize) -> Multivector {
        Multivector::e(4, j)
    }

    #[test]
    fn generator_relations() {
        assert_eq!(&e(1) * &e(1), Multivector::scalar(4, ExactScalar::from_int(-1)));
        let e12 = &e(1) * &e(2);
        assert_eq!(e12, -&(&e(2) * &e(1)));
        assert_eq!(e12, Multivector::blade(4, &[1, 2], ExactScalar::one()).unwrap());
    }

    #[test]
    fn dagger_of_blades() {
        let e12 = Multivector::blade(4, &[1, 2], ExactScalar::one()).unwrap();
        assert_eq!(&e12.hermitian_conjugate() * &e12, Multivector::one(4));
        let i1 = Multivector::scalar(4, ExactScalar::i());
        assert_eq!(i1.hermitian_conjugate(), Multivector::scalar(4, -ExactScalar::i()));
    }

    #[test]
    fn grade_projection_errors_out_of_range() {
        assert!(matches!(
            Multivector::one(3).grade_projection(4),
            Err(AlgebraError::GradeOutOfRange { .. })
        ));
        let a = &Multivector::blade(3, &[1, 2], ExactScalar::one()).unwrap()
            + &Multivector::scalar(3, ExactScalar::from_int(3));
        assert_eq!(a.grade_projection(0).unwrap(), Multivector::scalar(3, 3.into()));
        assert_eq!(
            a.grade_projection(2).unwrap(),
            Multivector::blade(3, &[1, 2], ExactScalar::one()).unwrap()
        );
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let r = Multivector::e(3, 1).geometric_product(&Multivector::e(4, 1));
        assert!(matches!(r, Err(AlgebraError::DimensionMismatch { left: 3, right: 4 })));
    }
}
