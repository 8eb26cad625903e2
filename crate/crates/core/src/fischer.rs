//! Harmonic and monogenic Fischer decompositions and Almansi-form inputs.

use thiserror::Error;

use crate::algebra::ExactScalar;
use crate::poly::{PolyError, PolyMV};
use crate::special::{factorial, gamma_ratio, q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FischerError {
    #[error("polynomial is not homogeneous in `{0}`")]
    NotHomogeneous(String),
    #[error("polynomial is not harmonic")]
    NotHarmonic,
    #[error("entry {index} of the {list} list is not monogenic")]
    NotMonogenic { list: &'static str, index: usize },
    #[error("level {level} is out of range for degree {degree}")]
    LevelOutOfRange { level: usize, degree: u32 },
    #[error("entries must be polynomials in `{0}` only")]
    Variables(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn degree_of(p: &PolyMV, var: &str) -> Result<Option<u32>, FischerError> {
    p.homogeneous_degree(var).map_err(|e| match e {
        PolyError::NotHomogeneous(v) => FischerError::NotHomogeneous(v),
        e => e.into(),
    })
}

fn norm_sq(p: &PolyMV, var: &str) -> Result<PolyMV, FischerError> {
    Ok(PolyMV::pairing(p.dim(), &p.var_names(), var, var)?)
}

/// `α_{j,k,ℓ} = (−1)^j (m/2+k−2ℓ−1) / (4^{j+ℓ} j! ℓ!) · Γ(m/2+k−2ℓ−j−1)/Γ(m/2+k−ℓ)`.
pub fn alpha_coefficient(j: usize, k: usize, l: usize, m: usize) -> num_rational::BigRational {
    let half = q(m as i64, 2);
    let (j, k, l) = (j as i64, k as i64, l as i64);
    let lead = &half + q(k - 2 * l - 1, 1);
    let g = gamma_ratio(&(&half + q(k - 2 * l - j - 1, 1)), &(&half + q(k - l, 1)))
        .expect("arguments stay positive for 2ℓ+j ≤ k");
    let den = num_bigint::BigInt::from(4).pow((j + l) as u32) * factorial(j as u64) * factorial(l as u64);
    let sign = if j % 2 == 0 { q(1, 1) } else { q(-1, 1) };
    sign * lead * g / num_rational::BigRational::from_integer(den)
}

/// The harmonic component `H_{k−2ℓ}` of a polynomial homogeneous of degree `k` in `var`.
pub fn proj_harmonic(p: &PolyMV, var: &str, l: usize) -> Result<PolyMV, FischerError> {
    let Some(k) = degree_of(p, var)? else {
        return Ok(p.clone());
    };
    if 2 * l > k as usize {
        return Err(FischerError::LevelOutOfRange { level: l, degree: k });
    }
    let m = p.dim();
    let r2 = norm_sq(p, var)?;
    let mut lap = p.laplacian_pow(var, l)?;
    let mut radial = p.one_like();
    let mut out = p.zero_like();
    for j in 0..=(k as usize / 2 - l) {
        if lap.is_zero() {
            break;
        }
        let a = ExactScalar::real(alpha_coefficient(j, k as usize, l, m));
        out = &out + &(&radial * &lap).scale(&a);
        lap = lap.laplacian(var)?;
        radial = &radial * &r2;
    }
    Ok(out)
}

/// `P = Σ_j |x|^{2j} H_{k−2j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicTower {
    pub var: String,
    pub k: u32,
    /// `(j, H_{k−2j})`, zero components omitted.
    pub components: Vec<(usize, PolyMV)>,
}

impl HarmonicTower {
    pub fn recombine(&self, like: &PolyMV) -> Result<PolyMV, FischerError> {
        let r2 = norm_sq(like, &self.var)?;
        let mut out = like.zero_like();
        for (j, h) in &self.components {
            out = &out + &(&r2.pow(*j as u32) * h);
        }
        Ok(out)
    }
}

pub fn harmonic_fischer(p: &PolyMV, var: &str) -> Result<HarmonicTower, FischerError> {
    let Some(k) = degree_of(p, var)? else {
        return Ok(HarmonicTower { var: var.into(), k: 0, components: Vec::new() });
    };
    let mut components = Vec::new();
    for l in 0..=k as usize / 2 {
        let h = proj_harmonic(p, var, l)?;
        if !h.is_zero() {
            components.push((l, h));
        }
    }
    Ok(HarmonicTower { var: var.into(), k, components })
}

/// `H = M_k + x M_{k−1}` with `M_{k−1} = −∂_x H/(2k+m−2)`.
pub fn harmonic_to_monogenic(h: &PolyMV, var: &str) -> Result<(PolyMV, PolyMV), FischerError> {
    let Some(k) = degree_of(h, var)? else {
        return Ok((h.clone(), h.clone()));
    };
    if !h.laplacian(var)?.is_zero() {
        return Err(FischerError::NotHarmonic);
    }
    let m = h.dim();
    let c = ExactScalar::real(q(-1, 2 * k as i64 + m as i64 - 2));
    let lower = h.dirac_left(var)?.scale(&c);
    let x = PolyMV::vector_in(m, &h.var_names(), var)?;
    let upper = h - &(&x * &lower);
    Ok((upper, lower))
}

/// A piece `x^a M` of a monogenic Fischer tower, `M` monogenic of degree `t − a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FischerComponent {
    pub a: u32,
    pub t: u32,
    pub m: PolyMV,
}

/// `P = Σ x^a M_{t−a}` over all homogeneous degrees `t` of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonogenicTower {
    pub var: String,
    pub components: Vec<FischerComponent>,
}

impl MonogenicTower {
    pub fn recombine(&self, like: &PolyMV) -> Result<PolyMV, FischerError> {
        let x = PolyMV::vector_in(like.dim(), &like.var_names(), &self.var)?;
        let mut out = like.zero_like();
        for c in &self.components {
            out = &out + &(&x.pow(c.a) * &c.m);
        }
        Ok(out)
    }
}

/// Monogenic Fischer decomposition, degree by degree, through the harmonic
/// tower and the two-term split of each harmonic component.
pub fn monogenic_fischer(p: &PolyMV, var: &str) -> Result<MonogenicTower, FischerError> {
    let mut components = Vec::new();
    for (t, part) in p.homogeneous_parts(var)? {
        let tower = harmonic_fischer(&part, var)?;
        for (l, h) in tower.components {
            let (mk, mk1) = harmonic_to_monogenic(&h, var)?;
            let sign = ExactScalar::from_int(if l % 2 == 0 { 1 } else { -1 });
            if !mk.is_zero() {
                components.push(FischerComponent { a: 2 * l as u32, t, m: mk.scale(&sign) });
            }
            if !mk1.is_zero() {
                components.push(FischerComponent { a: 2 * l as u32 + 1, t, m: mk1.scale(&sign) });
            }
        }
    }
    components.sort_by_key(|c| (c.t, c.a));
    Ok(MonogenicTower { var: var.into(), components })
}

/// `f = Σ M_k + z Σ N_ℓ` with the split kept alongside the value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmansiForm {
    pub var: String,
    pub ms: Vec<PolyMV>,
    pub ns: Vec<PolyMV>,
    pub value: PolyMV,
}

impl AlmansiForm {
    /// The form as Fischer components `(a, M)` with `a ∈ {0, 1}`.
    pub fn components(&self) -> Result<Vec<FischerComponent>, FischerError> {
        let mut out = Vec::new();
        for (a, list) in [(0u32, &self.ms), (1, &self.ns)] {
            for p in list {
                for (d, part) in p.homogeneous_parts(&self.var)? {
                    out.push(FischerComponent { a, t: d + a, m: part });
                }
            }
        }
        Ok(out)
    }
}

pub fn almansi_assemble(dim: usize, var: &str, ms: &[PolyMV], ns: &[PolyMV]) -> Result<AlmansiForm, FischerError> {
    let vars = [var];
    let mut value = PolyMV::zero(dim, &vars);
    let z = PolyMV::vector_variable(var, dim);
    for (list, name, lift) in [(ms, "M", false), (ns, "N", true)] {
        for (index, p) in list.iter().enumerate() {
            if p.var_names() != vars || p.dim() != dim {
                return Err(FischerError::Variables(var.into()));
            }
            if !p.dirac_left(var)?.is_zero() {
                return Err(FischerError::NotMonogenic { list: name, index });
            }
            value = &value + &(if lift { &z * p } else { p.clone() });
        }
    }
    Ok(AlmansiForm { var: var.into(), ms: ms.to_vec(), ns: ns.to_vec(), value })
}
