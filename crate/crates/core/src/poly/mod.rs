//! Clifford-valued polynomials in named vector variables.

mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{AlgebraError, Blade, ExactScalar, FloatMultivector, Multivector};

pub use text::{format_poly, parse_poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("expected a 1-vector valued polynomial")]
    NotAVector,
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("assignment for `{0}` has wrong length")]
    AssignmentLength(String),
    #[error("polynomial is not homogeneous in `{0}`")]
    NotHomogeneous(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Exponents of all coordinates, variable-major: entry `v·m + j` is the power
/// of the `j`-th coordinate of variable `v`.
pub type Monomial = Vec<u16>;

/// A polynomial `Σ_α c_α x^α` whose coefficients live in ℂ_m.
///
/// The formal variables commute; coefficients are kept to the left of the
/// monomials, so products multiply coefficients in operand order.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMV {
    dim: usize,
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Multivector>,
}

fn owned_vars(vars: &[&str]) -> Vec<String> {
    vars.iter().map(|v| v.to_string()).collect()
}

impl PolyMV {
    pub fn zero(dim: usize, vars: &[&str]) -> Self {
        Self { dim, vars: owned_vars(vars), terms: BTreeMap::new() }
    }

    pub fn zero_like(&self) -> Self {
        Self { dim: self.dim, vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: Multivector) -> Self {
        let mut p = Self::zero(c.dim(), vars);
        let key = vec![0; p.vars.len() * p.dim];
        p.add_term(key, c);
        p
    }

    pub fn scalar(dim: usize, vars: &[&str], c: ExactScalar) -> Self {
        Self::constant(vars, Multivector::scalar(dim, c))
    }

    pub fn one(dim: usize, vars: &[&str]) -> Self {
        Self::scalar(dim, vars, ExactScalar::one())
    }

    /// Builds a polynomial from raw terms; repeated monomials are summed.
    pub fn from_terms<I>(dim: usize, vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Multivector)>,
    {
        let mut p = Self::zero(dim, vars);
        for (k, c) in terms {
            assert_eq!(k.len(), p.vars.len() * dim, "monomial length must be vars·dim");
            p.add_term(k, c);
        }
        p
    }

    /// `x = Σ_j e_j x_j` as a polynomial in the single variable `name`.
    pub fn vector_variable(name: &str, dim: usize) -> Self {
        Self::vector_in(dim, &[name], name).expect("variable present")
    }

    /// `Σ_j e_j x_j` for variable `var` of the list `vars`.
    pub fn vector_in(dim: usize, vars: &[&str], var: &str) -> Result<Self, PolyError> {
        let mut p = Self::zero(dim, vars);
        let v = p.var_index(var)?;
        for j in 0..dim {
            let mut key = vec![0; p.width()];
            key[v * dim + j] = 1;
            p.add_term(key, Multivector::e(dim, j + 1));
        }
        Ok(p)
    }

    /// The coordinate function `x_j` (1-based `j`).
    pub fn coordinate(dim: usize, vars: &[&str], var: &str, j: usize) -> Result<Self, PolyError> {
        if j == 0 || j > dim {
            return Err(AlgebraError::IndexOutOfRange { index: j, dim }.into());
        }
        let mut p = Self::zero(dim, vars);
        let v = p.var_index(var)?;
        let mut key = vec![0; p.width()];
        key[v * dim + j - 1] = 1;
        p.add_term(key, Multivector::one(dim));
        Ok(p)
    }

    /// `⟨x, c⟩ = Σ_j x_j c_j` for a complex 1-vector `c`.
    pub fn scalar_pairing(vars: &[&str], var: &str, c: &Multivector) -> Result<Self, PolyError> {
        let dim = c.dim();
        let comps = c.vector_components().ok_or(PolyError::NotAVector)?;
        let mut p = Self::zero(dim, vars);
        let v = p.var_index(var)?;
        for (j, cj) in comps.into_iter().enumerate() {
            let mut key = vec![0; p.width()];
            key[v * dim + j] = 1;
            p.add_term(key, Multivector::scalar(dim, cj));
        }
        Ok(p)
    }

    /// `⟨x, y⟩ = Σ_j x_j y_j` for two variables of the list.
    pub fn pairing(dim: usize, vars: &[&str], x: &str, y: &str) -> Result<Self, PolyError> {
        let mut p = Self::zero(dim, vars);
        let a = p.var_index(x)?;
        let b = p.var_index(y)?;
        for j in 0..dim {
            let mut key = vec![0; p.width()];
            key[a * dim + j] += 1;
            key[b * dim + j] += 1;
            p.add_term(key, Multivector::one(dim));
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Multivector> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn width(&self) -> usize {
        self.vars.len() * self.dim
    }

    pub fn var_index(&self, var: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| PolyError::UnknownVariable(var.to_string()))
    }

    pub(crate) fn add_term(&mut self, key: Monomial, c: Multivector) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &PolyMV) -> Result<(), PolyError> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch { left: self.dim, right: other.dim }.into());
        }
        if self.vars != other.vars {
            return Err(PolyError::VariableMismatch(self.vars.clone(), other.vars.clone()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &PolyMV) -> Result<PolyMV, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &PolyMV) -> Result<PolyMV, PolyError> {
        self.check_compatible(other)?;
        let mut out = self.zero_like();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key: Monomial = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                out.add_term(key, ca.mul_unchecked(cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> PolyMV {
        let mut acc = PolyMV::constant(&self.var_names(), Multivector::one(self.dim));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &ExactScalar) -> PolyMV {
        let mut out = self.zero_like();
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v.scale(c))).collect();
        out
    }

    /// `c · p`.
    pub fn left_mul(&self, c: &Multivector) -> PolyMV {
        let mut out = self.zero_like();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), c.mul_unchecked(v));
        }
        out
    }

    /// `p · c`.
    pub fn right_mul(&self, c: &Multivector) -> PolyMV {
        let mut out = self.zero_like();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul_unchecked(c));
        }
        out
    }

    /// Formal partial derivative `∂/∂x_j` (0-based `j`) of variable `v`.
    fn partial_idx(&self, v: usize, j: usize) -> PolyMV {
        let slot = v * self.dim + j;
        let mut out = self.zero_like();
        for (k, c) in &self.terms {
            let e = k[slot];
            if e == 0 {
                continue;
            }
            let mut key = k.clone();
            key[slot] = e - 1;
            out.add_term(key, c.scale(&ExactScalar::from_int(e as i64)));
        }
        out
    }

    pub fn partial(&self, var: &str, j: usize) -> Result<PolyMV, PolyError> {
        if j == 0 || j > self.dim {
            return Err(AlgebraError::IndexOutOfRange { index: j, dim: self.dim }.into());
        }
        Ok(self.partial_idx(self.var_index(var)?, j - 1))
    }

    /// `∂_x p = Σ_j e_j ∂_{x_j} p`.
    pub fn dirac_left(&self, var: &str) -> Result<PolyMV, PolyError> {
        let v = self.var_index(var)?;
        let mut out = self.zero_like();
        for j in 0..self.dim {
            let d = self.partial_idx(v, j).left_mul(&Multivector::e(self.dim, j + 1));
            out = &out + &d;
        }
        Ok(out)
    }

    /// `p ∂_x = Σ_j (∂_{x_j} p) e_j`.
    pub fn dirac_right(&self, var: &str) -> Result<PolyMV, PolyError> {
        let v = self.var_index(var)?;
        let mut out = self.zero_like();
        for j in 0..self.dim {
            let d = self.partial_idx(v, j).right_mul(&Multivector::e(self.dim, j + 1));
            out = &out + &d;
        }
        Ok(out)
    }

    /// `Δ_x = Σ_j ∂²_{x_j}`.
    pub fn laplacian(&self, var: &str) -> Result<PolyMV, PolyError> {
        let v = self.var_index(var)?;
        let mut out = self.zero_like();
        for j in 0..self.dim {
            out = &out + &self.partial_idx(v, j).partial_idx(v, j);
        }
        Ok(out)
    }

    pub fn laplacian_pow(&self, var: &str, n: usize) -> Result<PolyMV, PolyError> {
        let mut p = self.clone();
        for _ in 0..n {
            if p.is_zero() {
                break;
            }
            p = p.laplacian(var)?;
        }
        Ok(p)
    }

    /// `E_x = Σ_j x_j ∂_{x_j}`, i.e. each term scaled by its degree in `x`.
    pub fn euler(&self, var: &str) -> Result<PolyMV, PolyError> {
        let v = self.var_index(var)?;
        let mut out = self.zero_like();
        for (k, c) in &self.terms {
            let d = self.degree_of_key(k, v);
            out.add_term(k.clone(), c.scale(&ExactScalar::from_int(d as i64)));
        }
        Ok(out)
    }

    /// `Γ_x = −x ∂_x − E_x`.
    pub fn gamma_op(&self, var: &str) -> Result<PolyMV, PolyError> {
        let x = PolyMV::vector_in(self.dim, &self.var_names(), var)?;
        let xd = &x * &self.dirac_left(var)?;
        Ok(-&(&xd + &self.euler(var)?))
    }

    /// `u ∧ v = ½(uv − vu)` for 1-vector valued `u`, `v`.
    pub fn wedge(&self, other: &PolyMV) -> Result<PolyMV, PolyError> {
        self.check_compatible(other)?;
        if !self.is_vector_valued() || !other.is_vector_valued() {
            return Err(PolyError::NotAVector);
        }
        let uv = self.try_mul(other)?;
        let vu = other.try_mul(self)?;
        Ok((&uv - &vu).scale(&ExactScalar::frac(1, 2)))
    }

    pub fn is_vector_valued(&self) -> bool {
        self.terms.values().all(|c| c.is_grade(1))
    }

    pub fn is_scalar_valued(&self) -> bool {
        self.terms.values().all(Multivector::is_scalar)
    }

    fn degree_of_key(&self, k: &Monomial, v: usize) -> u32 {
        k[v * self.dim..(v + 1) * self.dim].iter().map(|&e| e as u32).sum()
    }

    /// Degree range `(min, max)` in the variable, `None` for the zero polynomial.
    pub fn degree_range(&self, var: &str) -> Result<Option<(u32, u32)>, PolyError> {
        let v = self.var_index(var)?;
        let mut it = self.terms.keys().map(|k| self.degree_of_key(k, v));
        Ok(it.next().map(|d0| it.fold((d0, d0), |(lo, hi), d| (lo.min(d), hi.max(d)))))
    }

    /// Homogeneous degree in `var`; zero counts as homogeneous of any degree
    /// and yields `None`.
    pub fn homogeneous_degree(&self, var: &str) -> Result<Option<u32>, PolyError> {
        match self.degree_range(var)? {
            None => Ok(None),
            Some((lo, hi)) if lo == hi => Ok(Some(lo)),
            Some(_) => Err(PolyError::NotHomogeneous(var.to_string())),
        }
    }

    /// Splits into parts homogeneous in `var`, keyed by degree.
    pub fn homogeneous_parts(&self, var: &str) -> Result<BTreeMap<u32, PolyMV>, PolyError> {
        let v = self.var_index(var)?;
        let mut out: BTreeMap<u32, PolyMV> = BTreeMap::new();
        for (k, c) in &self.terms {
            let d = self.degree_of_key(k, v);
            out.entry(d)
                .or_insert_with(|| self.zero_like())
                .add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    /// Coefficientwise `α ↦ α†`; on real arguments this is `p(x)†`.
    pub fn hermitian_conjugate(&self) -> PolyMV {
        let mut out = self.zero_like();
        out.terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), c.hermitian_conjugate()))
            .collect();
        out
    }

    /// Re-expresses the polynomial over a larger variable list containing the
    /// current one.
    pub fn embed(&self, vars: &[&str]) -> Result<PolyMV, PolyError> {
        let idx = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| PolyError::UnknownVariable(v.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = PolyMV::zero(self.dim, vars);
        let m = self.dim;
        for (k, c) in &self.terms {
            let mut key = vec![0; vars.len() * m];
            for (old, &new) in idx.iter().enumerate() {
                key[new * m..(new + 1) * m].copy_from_slice(&k[old * m..(old + 1) * m]);
            }
            out.add_term(key, c.clone());
        }
        Ok(out)
    }

    /// Renames variables in place of position; the list length must match.
    pub fn rename(&self, vars: &[&str]) -> PolyMV {
        assert_eq!(vars.len(), self.vars.len(), "rename needs one name per variable");
        PolyMV { dim: self.dim, vars: owned_vars(vars), terms: self.terms.clone() }
    }

    /// Drops variables that do not occur; errors if one of them does.
    pub fn restrict(&self, vars: &[&str]) -> Result<PolyMV, PolyError> {
        let m = self.dim;
        let keep: Vec<usize> = vars
            .iter()
            .map(|v| self.var_index(v))
            .collect::<Result<_, _>>()?;
        let mut out = PolyMV::zero(m, vars);
        for (k, c) in &self.terms {
            for (v, name) in self.vars.iter().enumerate() {
                if !keep.contains(&v) && self.degree_of_key(k, v) > 0 {
                    return Err(PolyError::UnknownVariable(name.clone()));
                }
            }
            let mut key = Vec::with_capacity(vars.len() * m);
            for &v in &keep {
                key.extend_from_slice(&k[v * m..(v + 1) * m]);
            }
            out.add_term(key, c.clone());
        }
        Ok(out)
    }

    /// Linear change of coordinates `x_k ↦ Σ_j r[k][j] x_j` in variable `var`.
    pub fn linear_substitute(&self, var: &str, r: &[Vec<ExactScalar>]) -> Result<PolyMV, PolyError> {
        let v = self.var_index(var)?;
        let m = self.dim;
        let names = self.var_names();
        let images: Vec<PolyMV> = (0..m)
            .map(|k| {
                let mut p = PolyMV::zero(m, &names);
                for j in 0..m {
                    let mut key = vec![0; self.width()];
                    key[v * m + j] = 1;
                    p.add_term(key, Multivector::scalar(m, r[k][j].clone()));
                }
                p
            })
            .collect();
        self.substitute_coordinates(v, &images)
    }

    /// Replaces each coordinate of variable `v` by a scalar-valued polynomial
    /// over the same variable list.
    fn substitute_coordinates(&self, v: usize, images: &[PolyMV]) -> Result<PolyMV, PolyError> {
        let m = self.dim;
        let mut powers: Vec<Vec<PolyMV>> = images.iter().map(|p| vec![p.one_like()]).collect();
        let mut out = self.zero_like();
        for (k, c) in &self.terms {
            let mut key = k.clone();
            let mut factor = self.one_like();
            for j in 0..m {
                let e = k[v * m + j] as usize;
                key[v * m + j] = 0;
                while powers[j].len() <= e {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                if e > 0 {
                    factor = &factor * &powers[j][e];
                }
            }
            let mut rest = self.zero_like();
            rest.add_term(key, c.clone());
            // images are scalar valued, so the order of the factors is immaterial
            out = &out + &(&rest * &factor);
        }
        Ok(out)
    }

    pub fn one_like(&self) -> PolyMV {
        PolyMV::constant(&self.var_names(), Multivector::one(self.dim))
    }

    /// Exact substitution of rational points for the listed variables; the
    /// remaining variables stay symbolic.
    pub fn substitute_exact(&self, assignment: &[(&str, Vec<ExactScalar>)]) -> Result<PolyMV, PolyError> {
        let m = self.dim;
        let mut slots: Vec<Option<&Vec<ExactScalar>>> = vec![None; self.vars.len()];
        for (name, val) in assignment {
            let v = self.var_index(name)?;
            if val.len() != m {
                return Err(PolyError::AssignmentLength(name.to_string()));
            }
            slots[v] = Some(val);
        }
        let mut out = self.zero_like();
        for (k, c) in &self.terms {
            let mut key = k.clone();
            let mut coef = ExactScalar::one();
            for (v, slot) in slots.iter().enumerate() {
                if let Some(val) = slot {
                    for j in 0..m {
                        let e = k[v * m + j];
                        if e > 0 {
                            coef *= &val[j].pow(e as u32);
                            key[v * m + j] = 0;
                        }
                    }
                }
            }
            out.add_term(key, c.scale(&coef));
        }
        Ok(out)
    }

    /// Exact value when every variable is assigned.
    pub fn evaluate_exact(&self, assignment: &[(&str, Vec<ExactScalar>)]) -> Result<Multivector, PolyError> {
        for v in &self.vars {
            if !assignment.iter().any(|(n, _)| n == v) {
                return Err(PolyError::MissingAssignment(v.clone()));
            }
        }
        let p = self.substitute_exact(assignment)?;
        Ok(p.terms.values().fold(Multivector::zero(self.dim), |acc, c| &acc + c))
    }

    /// Floating-point evaluation at complex points.
    pub fn evaluate(&self, assignment: &[(&str, Vec<Complex64>)]) -> Result<FloatMultivector, PolyError> {
        let m = self.dim;
        let mut vals: Vec<&[Complex64]> = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            let (_, val) = assignment
                .iter()
                .find(|(n, _)| n == v)
                .ok_or_else(|| PolyError::MissingAssignment(v.clone()))?;
            if val.len() != m {
                return Err(PolyError::AssignmentLength(v.clone()));
            }
            vals.push(val);
        }
        let mut out = FloatMultivector::zero(m);
        for (k, c) in &self.terms {
            let mut mono = Complex64::new(1.0, 0.0);
            for (v, val) in vals.iter().enumerate() {
                for j in 0..m {
                    let e = k[v * m + j];
                    if e > 0 {
                        mono *= val[j].powu(e as u32);
                    }
                }
            }
            for (b, x) in c.terms() {
                out.add_scaled(*b, x.to_complex() * mono);
            }
        }
        Ok(out)
    }

    /// Grade projection of every coefficient.
    pub fn grade_projection(&self, k: usize) -> Result<PolyMV, PolyError> {
        let mut out = self.zero_like();
        for (key, c) in &self.terms {
            out.add_term(key.clone(), c.grade_projection(k)?);
        }
        Ok(out)
    }

    /// Coefficient of the blade `b` as a scalar-valued polynomial.
    pub fn blade_component(&self, b: Blade) -> PolyMV {
        let mut out = self.zero_like();
        for (k, c) in &self.terms {
            let x = c.coefficient(b);
            if !x.is_zero() {
                out.add_term(k.clone(), Multivector::scalar(self.dim, x));
            }
        }
        out
    }

    /// When `self = λ · other` for a scalar `λ`, returns `λ`.
    pub fn scalar_ratio(&self, other: &PolyMV) -> Option<ExactScalar> {
        if self.check_compatible(other).is_err() {
            return None;
        }
        if other.is_zero() {
            return self.is_zero().then(ExactScalar::zero);
        }
        let (k0, c0) = other.terms.iter().next()?;
        let (b0, x0) = c0.terms().first()?;
        let lambda = &self.terms.get(k0)?.coefficient(*b0) / x0;
        (other.scale(&lambda) == *self).then_some(lambda)
    }
}

impl fmt::Display for PolyMV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let m = self.dim;
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, name) in self.vars.iter().enumerate() {
                for j in 0..m {
                    match k[v * m + j] {
                        0 => {}
                        1 => write!(f, "·{name}{}", j + 1)?,
                        e => write!(f, "·{name}{}^{e}", j + 1)?,
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyMV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMV[m={}, vars={:?}]({})", self.dim, self.vars, self)
    }
}

impl Add for &PolyMV {
    type Output = PolyMV;
    fn add(self, rhs: &PolyMV) -> PolyMV {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl Sub for &PolyMV {
    type Output = PolyMV;
    fn sub(self, rhs: &PolyMV) -> PolyMV {
        self.try_add(&-rhs).expect("incompatible polynomials")
    }
}

impl Neg for &PolyMV {
    type Output = PolyMV;
    fn neg(self) -> PolyMV {
        let mut out = self.zero_like();
        out.terms = self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect();
        out
    }
}

impl Mul for &PolyMV {
    type Output = PolyMV;
    fn mul(self, rhs: &PolyMV) -> PolyMV {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

#[cfg(test)]
mod tests;
