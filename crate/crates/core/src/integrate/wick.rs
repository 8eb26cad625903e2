//! Isotropic moment calculus over an alphabet of symbolic vectors.
//!
//! A [`LinearFormPoly`] is a polynomial in the linear forms `X_u = ⟨u, t⟩`
//! and `Y_u = ⟨u, s⟩`; averaging over orthonormal pairs `(t, s)` produces a
//! [`PairingPoly`], a polynomial in the pairings `⟨u, v⟩`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{ExactScalar, Multivector};
use crate::poly::{PolyError, PolyMV};
use crate::special::{binomial, factorial};

/// What a letter of the alphabet denotes when a pairing polynomial is
/// expanded into coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Symbol {
    /// A vector variable of the target polynomial.
    Var(String),
    /// A constant vector with the given components.
    Fixed(Vec<ExactScalar>),
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u <= v { (u, v) } else { (v, u) };
    u * n - (u * u - u) / 2 + (v - u)
}

fn pairs(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Polynomial in `X_u = ⟨u,t⟩`, `Y_u = ⟨u,s⟩`; key is `[X_0..X_{n−1}, Y_0..Y_{n−1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormPoly {
    n: usize,
    terms: BTreeMap<Vec<u16>, ExactScalar>,
}

impl LinearFormPoly {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: ExactScalar) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; 2 * n], c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ExactScalar::one())
    }

    fn linear(n: usize, u: usize, cx: ExactScalar, cy: ExactScalar) -> Self {
        let mut p = Self::zero(n);
        let mut kx = vec![0; 2 * n];
        kx[u] = 1;
        p.add_term(kx, cx);
        let mut ky = vec![0; 2 * n];
        ky[n + u] = 1;
        p.add_term(ky, cy);
        p
    }

    /// `⟨u, t⟩`.
    pub fn x(n: usize, u: usize) -> Self {
        Self::linear(n, u, ExactScalar::one(), ExactScalar::zero())
    }

    /// `⟨u, s⟩`.
    pub fn y(n: usize, u: usize) -> Self {
        Self::linear(n, u, ExactScalar::zero(), ExactScalar::one())
    }

    /// `⟨u, τ⟩ = ⟨u,t⟩ + i⟨u,s⟩`.
    pub fn tau(n: usize, u: usize) -> Self {
        Self::linear(n, u, ExactScalar::one(), ExactScalar::i())
    }

    /// `⟨u, τ†⟩ = −⟨u,t⟩ + i⟨u,s⟩`.
    pub fn tau_dagger(n: usize, u: usize) -> Self {
        Self::linear(n, u, ExactScalar::from_int(-1), ExactScalar::i())
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u16>, ExactScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: Vec<u16>, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<Vec<u16>, ExactScalar> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let k: Vec<u16> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                *acc.entry(k).or_default() += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Self { n: self.n, terms: acc }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// The same polynomial over a larger alphabet whose first letters are
    /// the current ones.
    pub fn extend_alphabet(&self, n: usize) -> Self {
        assert!(n >= self.n, "alphabet can only grow");
        let mut out = Self::zero(n);
        for (k, c) in &self.terms {
            let mut key = vec![0u16; 2 * n];
            key[..self.n].copy_from_slice(&k[..self.n]);
            key[n..n + self.n].copy_from_slice(&k[self.n..]);
            out.terms.insert(key, c.clone());
        }
        out
    }

    /// The image under `s ↦ −s`.
    pub fn reflect_s(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (k, c) in &self.terms {
            let deg: u32 = k[self.n..].iter().map(|&e| e as u32).sum();
            out.add_term(k.clone(), if deg % 2 == 1 { -c } else { c.clone() });
        }
        out
    }
}

/// Polynomial in the pairings `⟨u, v⟩`, `u ≤ v`, of an alphabet of size `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingPoly {
    n: usize,
    terms: BTreeMap<Vec<u16>, ExactScalar>,
}

impl PairingPoly {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: ExactScalar) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; pairs(n)], c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ExactScalar::one())
    }

    /// `⟨u, v⟩`.
    pub fn pairing(n: usize, u: usize, v: usize) -> Self {
        let mut p = Self::zero(n);
        let mut k = vec![0; pairs(n)];
        k[pair_index(n, u, v)] = 1;
        p.add_term(k, ExactScalar::one());
        p
    }

    pub fn alphabet_size(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u16>, ExactScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponent of `⟨u, v⟩` in a key.
    pub fn exponent(&self, key: &[u16], u: usize, v: usize) -> u16 {
        key[pair_index(self.n, u, v)]
    }

    fn add_term(&mut self, k: Vec<u16>, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ExactScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &ExactScalar) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.iter().zip(kb).map(|(a, b)| a + b).collect(), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// Expands into coordinates: letter `u` becomes `symbols[u]`.
    pub fn realize(&self, dim: usize, vars: &[&str], symbols: &[Symbol]) -> Result<PolyMV, PolyError> {
        assert_eq!(symbols.len(), self.n, "one symbol per letter");
        let n = self.n;
        let mut base: Vec<PolyMV> = Vec::with_capacity(pairs(n));
        for u in 0..n {
            for v in u..n {
                base.push(realize_pairing(dim, vars, &symbols[u], &symbols[v])?);
            }
        }
        let one = PolyMV::one(dim, vars);
        let mut powers: HashMap<(usize, u16), PolyMV> = HashMap::new();
        let mut out = PolyMV::zero(dim, vars);
        for (k, c) in &self.terms {
            let mut term = PolyMV::scalar(dim, vars, c.clone());
            for (idx, &e) in k.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !powers.contains_key(&(idx, e)) {
                    let mut p = one.clone();
                    for _ in 0..e {
                        p = &p * &base[idx];
                    }
                    powers.insert((idx, e), p);
                }
                term = &term * &powers[&(idx, e)];
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

fn realize_pairing(dim: usize, vars: &[&str], a: &Symbol, b: &Symbol) -> Result<PolyMV, PolyError> {
    match (a, b) {
        (Symbol::Var(x), Symbol::Var(y)) => PolyMV::pairing(dim, vars, x, y),
        (Symbol::Var(x), Symbol::Fixed(c)) | (Symbol::Fixed(c), Symbol::Var(x)) => {
            PolyMV::scalar_pairing(vars, x, &Multivector::vector(dim, c))
        }
        (Symbol::Fixed(c), Symbol::Fixed(d)) => {
            let s: ExactScalar = c.iter().zip(d).map(|(x, y)| x * y).sum();
            Ok(PolyMV::scalar(dim, vars, s))
        }
    }
}

/// All ways to pair up a multiset with `counts[u]` copies of letter `u`,
/// grouped by the multiset of pairs they produce. Each entry is the number
/// of perfect matchings and the pair-count vector.
fn grouped_matchings(counts: &[u16]) -> Vec<(BigInt, Vec<u16>)> {
    let n = counts.len();
    let total: u32 = counts.iter().map(|&c| c as u32).sum();
    if total % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rem = counts.to_vec();
    let mut k = vec![0u16; pairs(n)];
    fill_row(0, n, &mut rem, &mut k, &mut out);
    let numer: BigInt = counts.iter().map(|&c| factorial(c as u64)).product();
    out.into_iter()
        .map(|kv| {
            let mut den = BigInt::one();
            for u in 0..n {
                for v in u..n {
                    let e = kv[pair_index(n, u, v)] as u64;
                    den *= factorial(e);
                    if u == v {
                        den *= BigInt::from(2u32).pow(e as u32);
                    }
                }
            }
            (&numer / den, kv)
        })
        .collect()
}

fn fill_row(u: usize, n: usize, rem: &mut [u16], k: &mut [u16], out: &mut Vec<Vec<u16>>) {
    if u == n {
        out.push(k.to_vec());
        return;
    }
    let r = rem[u];
    for loops in 0..=r / 2 {
        k[pair_index(n, u, u)] = loops;
        let left = r - 2 * loops;
        rem[u] = 0;
        spread(u, u + 1, left, n, rem, k, out);
        rem[u] = r;
        k[pair_index(n, u, u)] = 0;
    }
}

fn spread(u: usize, v: usize, left: u16, n: usize, rem: &mut [u16], k: &mut [u16], out: &mut Vec<Vec<u16>>) {
    if left == 0 {
        fill_row(u + 1, n, rem, k, out);
        return;
    }
    if v == n {
        return;
    }
    let cap = left.min(rem[v]);
    for e in 0..=cap {
        k[pair_index(n, u, v)] = e;
        rem[v] -= e;
        spread(u, v + 1, left - e, n, rem, k, out);
        rem[v] += e;
    }
    k[pair_index(n, u, v)] = 0;
}

/// Normalized averages over the unit sphere (`t`) and over the Stiefel
/// manifold of orthonormal pairs (`t`, `s`) in ℝ^m, with memoization.
pub struct StiefelEngine {
    m: usize,
    n: usize,
    sphere_cache: HashMap<Vec<u16>, Vec<(BigRational, Vec<u16>)>>,
    stiefel_cache: HashMap<Vec<u16>, Vec<(BigRational, Vec<u16>)>>,
}

fn rising(m: usize, step_from: usize, half: u32) -> BigInt {
    (0..half).map(|r| BigInt::from(m - step_from + 2 * r as usize)).product()
}

impl StiefelEngine {
    pub fn new(m: usize, alphabet_size: usize) -> Self {
        assert!(m >= 3, "Stiefel averages need m ≥ 3");
        Self { m, n: alphabet_size, sphere_cache: HashMap::new(), stiefel_cache: HashMap::new() }
    }

    /// `E_t[∏ ⟨u,t⟩^{a_u}]` as `(coefficient, pairing exponents)` terms.
    fn sphere_monomial(&mut self, a: &[u16]) -> Vec<(BigRational, Vec<u16>)> {
        if let Some(hit) = self.sphere_cache.get(a) {
            return hit.clone();
        }
        let total: u32 = a.iter().map(|&e| e as u32).sum();
        let res = if total % 2 == 1 {
            Vec::new()
        } else {
            let den = rising(self.m, 0, total / 2);
            grouped_matchings(a)
                .into_iter()
                .map(|(c, k)| (BigRational::new(c, den.clone()), k))
                .collect()
        };
        self.sphere_cache.insert(a.to_vec(), res.clone());
        res
    }

    /// `E_{t,s}[∏ ⟨u,t⟩^{a_u} ⟨u,s⟩^{b_u}]` for the key `[a, b]`.
    fn stiefel_monomial(&mut self, key: &[u16]) -> Vec<(BigRational, Vec<u16>)> {
        if let Some(hit) = self.stiefel_cache.get(key) {
            return hit.clone();
        }
        let n = self.n;
        let (a, b) = key.split_at(n);
        let sdeg: u32 = b.iter().map(|&e| e as u32).sum();
        let mut acc: BTreeMap<Vec<u16>, BigRational> = BTreeMap::new();
        if sdeg % 2 == 0 {
            let sden = rising(self.m, 1, sdeg / 2);
            for (count, kmat) in grouped_matchings(b) {
                let base = BigRational::new(count, sden.clone());
                // expand ∏ (⟨u,v⟩ − X_u X_v)^{K_uv}
                let slots: Vec<(usize, usize, u16)> = (0..n)
                    .flat_map(|u| (u..n).map(move |v| (u, v)))
                    .filter_map(|(u, v)| {
                        let e = kmat[pair_index(n, u, v)];
                        (e > 0).then_some((u, v, e))
                    })
                    .collect();
                let mut choice = vec![0u16; slots.len()];
                loop {
                    let mut coef = base.clone();
                    let mut pk = kmat.clone();
                    let mut xa = a.to_vec();
                    for (s, &(u, v, e)) in slots.iter().enumerate() {
                        let i = choice[s];
                        coef *= BigRational::from_integer(binomial(e as u64, i as u64));
                        if i % 2 == 1 {
                            coef = -coef;
                        }
                        pk[pair_index(n, u, v)] -= i;
                        xa[u] += i;
                        xa[v] += i;
                    }
                    for (c2, k2) in self.sphere_monomial(&xa) {
                        let key2: Vec<u16> = pk.iter().zip(&k2).map(|(x, y)| x + y).collect();
                        *acc.entry(key2).or_insert_with(BigRational::zero) += &coef * &c2;
                    }
                    // odometer over the binomial choices
                    let mut s = 0;
                    while s < slots.len() {
                        if choice[s] < slots[s].2 {
                            choice[s] += 1;
                            break;
                        }
                        choice[s] = 0;
                        s += 1;
                    }
                    if s == slots.len() {
                        break;
                    }
                }
            }
        }
        let res: Vec<(BigRational, Vec<u16>)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (c, k)).collect();
        self.stiefel_cache.insert(key.to_vec(), res.clone());
        res
    }

    /// Average over orthonormal pairs `(t, s)`.
    pub fn stiefel_average(&mut self, f: &LinearFormPoly) -> PairingPoly {
        assert_eq!(f.n, self.n, "alphabet size mismatch");
        let mut out = PairingPoly::zero(self.n);
        for (k, c) in &f.terms {
            for (w, pk) in self.stiefel_monomial(k) {
                out.add_term(pk, c.scale(&w));
            }
        }
        out
    }

    /// Average over `t ∈ S^{m−1}`; `f` must not involve `s`.
    pub fn sphere_average(&mut self, f: &LinearFormPoly) -> PairingPoly {
        assert_eq!(f.n, self.n, "alphabet size mismatch");
        let mut out = PairingPoly::zero(self.n);
        for (k, c) in &f.terms {
            assert!(k[self.n..].iter().all(|&e| e == 0), "sphere average of an s-dependent form");
            for (w, pk) in self.sphere_monomial(&k[..self.n]) {
                out.add_term(pk, c.scale(&w));
            }
        }
        out
    }
}
