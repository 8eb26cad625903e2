//! Gegenbauer polynomials, Pochhammer symbols, Γ-ratios with integer offset
//! and terminating hypergeometric sums, all in exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::ExactScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecialError {
    #[error("Γ({a})/Γ({b}): offset is not an integer")]
    NonIntegerOffset { a: BigRational, b: BigRational },
    #[error("Γ has a pole at {0}")]
    Pole(BigRational),
    #[error("denominator Pochhammer ({param})_{order} vanishes")]
    ZeroDenominator { param: BigRational, order: usize },
    #[error("series does not terminate after order {0}: no numerator parameter in {{-{0}, …, 0}}")]
    NonTerminating(usize),
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_q(n: u64) -> BigRational {
    BigRational::from_integer(factorial(n))
}

/// `n!! = n(n−2)(n−4)⋯`, with `(−1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `(a)_n = a(a+1)⋯(a+n−1)`.
pub fn pochhammer(a: &BigRational, n: usize) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = a.clone();
    for _ in 0..n {
        acc *= &x;
        x += BigRational::one();
    }
    acc
}

fn is_nonpositive_integer(x: &BigRational) -> bool {
    x.is_integer() && !x.is_positive()
}

/// `Γ(a)/Γ(b)` for `a − b ∈ ℤ`, as a telescoping product.
pub fn gamma_ratio(a: &BigRational, b: &BigRational) -> Result<BigRational, SpecialError> {
    let d = a - b;
    if !d.is_integer() {
        return Err(SpecialError::NonIntegerOffset { a: a.clone(), b: b.clone() });
    }
    for x in [a, b] {
        if is_nonpositive_integer(x) {
            return Err(SpecialError::Pole(x.clone()));
        }
    }
    let n = d.to_integer().to_i64().expect("offset fits in i64");
    if n >= 0 {
        Ok(pochhammer(b, n as usize))
    } else {
        Ok(pochhammer(a, (-n) as usize).recip())
    }
}

/// `Σ_{j=0}^{p} ∏(a_i)_j / (∏(c_i)_j · j!)`.
///
/// Some numerator parameter must be an integer in `{−p, …, 0}` so that the
/// term `j = p + 1` vanishes.
pub fn hypergeometric_terminating(
    num: &[BigRational],
    den: &[BigRational],
    p: usize,
) -> Result<BigRational, SpecialError> {
    let terminates = num
        .iter()
        .any(|a| is_nonpositive_integer(a) && a.to_integer().abs() <= BigInt::from(p));
    if !terminates {
        return Err(SpecialError::NonTerminating(p));
    }
    for c in den {
        for i in 0..p {
            if (c + qi(i as i64)).is_zero() {
                return Err(SpecialError::ZeroDenominator { param: c.clone(), order: i + 1 });
            }
        }
    }
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for j in 0..p {
        let jj = qi(j as i64);
        for a in num {
            term *= a + &jj;
        }
        for c in den {
            term /= c + &jj;
        }
        term /= qi(j as i64 + 1);
        sum += &term;
    }
    Ok(sum)
}

/// Both sides of the Pfaff–Saalschütz sum
/// `₃F₂(−p, a, b; c, 1+a+b−c−p; 1) = (c−a)_p (c−b)_p / ((c)_p (c−a−b)_p)`
/// at the parameters met when evaluating `θ_{n,k,ℓ}`: `p = ℓ−n`,
/// `a = −m/2−k−ℓ+n+1`, `b = n−k`, `c = n−k−ℓ`.
pub fn pfaff_saalschutz_sides(k: usize, l: usize, n: usize, m: usize) -> Result<(BigRational, BigRational), SpecialError> {
    let (k, l, n, m) = (k as i64, l as i64, n as i64, m as i64);
    let h = q(m, 2);
    let p = (l - n) as usize;
    let a = -&h - qi(k + l - n - 1);
    let b = qi(n - k);
    let c = qi(n - k - l);
    let d = &a + &b - &c + qi(1) - qi(p as i64);
    let lhs = hypergeometric_terminating(&[qi(-(p as i64)), a.clone(), b.clone()], &[c.clone(), d], p)?;
    let rhs = pochhammer(&(&c - &a), p) * pochhammer(&(&c - &b), p) / (pochhammer(&c, p) * pochhammer(&(&c - &a - &b), p));
    Ok((lhs, rhs))
}

/// Dense univariate polynomial `Σ c_i t^i` with Gaussian-rational entries.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalUniPoly {
    coeffs: Vec<ExactScalar>,
}

impl RationalUniPoly {
    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(ExactScalar::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &ExactScalar) -> ExactScalar {
        self.coeffs.iter().rev().fold(ExactScalar::zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn shift_up(&self) -> Self {
        let mut v = vec![ExactScalar::zero()];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ExactScalar::from_int(-1)))
    }

    /// `p(−t)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// True when only powers of the given parity occur.
    pub fn has_parity(&self, parity: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == parity % 2 || c.is_zero())
    }
}

impl fmt::Debug for RationalUniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}·t"),
                _ => format!("{c}·t^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `C_k^λ(t)` from the three-term recurrence.
pub fn gegenbauer(k: usize, lambda: &BigRational) -> RationalUniPoly {
    let lam = ExactScalar::real(lambda.clone());
    let c0 = RationalUniPoly::constant(ExactScalar::one());
    if k == 0 {
        return c0;
    }
    let two = ExactScalar::from_int(2);
    let c1 = RationalUniPoly::new(vec![ExactScalar::zero(), &two * &lam]);
    let (mut prev, mut cur) = (c0, c1);
    for n in 2..=k {
        let nn = ExactScalar::from_int(n as i64);
        let a = cur.shift_up().scale(&(&two * &(&(&nn + &lam) - &ExactScalar::one())));
        let b = prev.scale(&(&(&nn + &(&two * &lam)) - &two));
        let next = a.sub(&b).scale(&(&ExactScalar::one() / &nn));
        prev = cur;
        cur = next;
    }
    cur
}

/// Checks `C_k^{m/2}(t) − C_{k−2}^{m/2}(t) = (2k+m−2)/(m−2) · C_k^{m/2−1}(t)`.
pub fn gegenbauer_contiguous_check(k: usize, m: usize) -> bool {
    assert!(k >= 2 && m >= 3);
    let half = q(m as i64, 2);
    let lhs = gegenbauer(k, &half).sub(&gegenbauer(k - 2, &half));
    let factor = ExactScalar::real(q(2 * k as i64 + m as i64 - 2, m as i64 - 2));
    let rhs = gegenbauer(k, &(half - qi(1))).scale(&factor);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(r: BigRational) -> ExactScalar {
        ExactScalar::real(r)
    }

    #[test]
    fn gegenbauer_examples() {
        assert_eq!(gegenbauer(0, &q(3, 2)), RationalUniPoly::constant(ExactScalar::one()));
        let c2 = gegenbauer(2, &qi(1));
        assert_eq!(c2, RationalUniPoly::new(vec![ExactScalar::from_int(-1), ExactScalar::zero(), ExactScalar::from_int(4)]));
        assert_eq!(c2.eval(&ExactScalar::one()), ExactScalar::from_int(3));
    }

    #[test]
    fn gegenbauer_parity_and_value_at_one() {
        for m in 3..=6i64 {
            let lam = q(m - 2, 2);
            for k in 0..=8usize {
                let c = gegenbauer(k, &lam);
                assert_eq!(c.reflect(), c.scale(&ExactScalar::from_int(if k % 2 == 0 { 1 } else { -1 })));
                assert!(c.has_parity(k));
                let expect = gamma_ratio(&qi(m - 2 + k as i64), &qi(m - 2)).unwrap() / factorial_q(k as u64);
                assert_eq!(c.eval(&ExactScalar::one()), s(expect), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn contiguous_relation() {
        for (k, m) in [(2, 4), (3, 3), (2, 5), (5, 6), (4, 3)] {
            assert!(gegenbauer_contiguous_check(k, m));
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q(7, 3), 0), qi(1));
        assert_eq!(pochhammer(&qi(1), 5), qi(120));
        assert_eq!(pochhammer(&qi(-3), 2), qi(6));
    }

    #[test]
    fn gamma_ratio_examples() {
        assert_eq!(gamma_ratio(&q(5, 2), &q(5, 2)).unwrap(), qi(1));
        for m in 3..=6 {
            assert_eq!(gamma_ratio(&q(m, 2), &q(m - 2, 2)).unwrap(), q(m - 2, 2));
        }
        assert_eq!(gamma_ratio(&q(7, 2), &q(3, 2)).unwrap(), q(15, 4));
        assert_eq!(gamma_ratio(&q(3, 2), &q(7, 2)).unwrap(), q(4, 15));
        assert!(matches!(gamma_ratio(&q(1, 3), &qi(1)), Err(SpecialError::NonIntegerOffset { .. })));
        assert!(matches!(gamma_ratio(&qi(2), &qi(0)), Err(SpecialError::Pole(_))));
    }

    #[test]
    fn hypergeometric_edge_cases() {
        assert_eq!(hypergeometric_terminating(&[qi(0), qi(3)], &[qi(2)], 0).unwrap(), qi(1));
        let v = hypergeometric_terminating(&[qi(-2), qi(3)], &[qi(5)], 2).unwrap();
        // Chu–Vandermonde: (c−b)_n/(c)_n = (2)_2/(5)_2
        assert_eq!(v, q(1, 5));
        assert!(matches!(
            hypergeometric_terminating(&[qi(2)], &[qi(1)], 3),
            Err(SpecialError::NonTerminating(3))
        ));
        assert!(matches!(
            hypergeometric_terminating(&[qi(-3)], &[qi(-1)], 3),
            Err(SpecialError::ZeroDenominator { .. })
        ));
    }

    /// The balanced `₃F₂` arising from the iterated-Laplacian sum.
    #[test]
    fn pfaff_saalschutz_grid() {
        for m in 3..=5 {
            for k in 0..=4 {
                for l in 0..=k {
                    for n in 0..=l {
                        let (lhs, rhs) = pfaff_saalschutz_sides(k, l, n, m).unwrap();
                        assert_eq!(lhs, rhs, "k={k} l={l} n={n} m={m}");
                    }
                }
            }
        }
    }
}
