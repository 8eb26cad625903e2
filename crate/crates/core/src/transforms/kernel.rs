use num_rational::BigRational;

use super::coefficients::{inverse_basis_norm, nu_coefficient};
use super::{IsotropicFrame, TransformError};
use crate::algebra::{ExactScalar, Multivector};
use crate::exec::Exec;
use crate::integrate::{lie_inner_product, lie_sphere_integral};
use crate::poly::PolyMV;

const KVARS: [&str; 2] = ["z", "w"];

/// `f_{τ,k,ℓ}(z) = ⟨z,τ⟩^k ⟨z,τ†⟩^ℓ` in the variable `var`.
pub fn basis_f(frame: &IsotropicFrame, k: u32, l: u32, var: &str) -> PolyMV {
    let vars = [var];
    let zt = PolyMV::scalar_pairing(&vars, var, &frame.tau()).expect("declared");
    let ztd = PolyMV::scalar_pairing(&vars, var, &frame.tau_dagger()).expect("declared");
    &zt.pow(k) * &ztd.pow(l)
}

/// `ψ_{τ,2r,k} = τ⟨z,τ⟩^{r+k}⟨z,τ†⟩^r` and `ψ_{τ,2r+1,k} = τ†τ⟨z,τ⟩^{r+k+1}⟨z,τ†⟩^r`.
pub fn basis_psi(frame: &IsotropicFrame, alpha: u32, k: u32, var: &str) -> PolyMV {
    let r = alpha / 2;
    if alpha % 2 == 0 {
        basis_f(frame, r + k, r, var).left_mul(&frame.tau())
    } else {
        basis_f(frame, r + k + 1, r, var).left_mul(&(&frame.tau_dagger() * &frame.tau()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KernelKind {
    Hua,
    Polarized,
}

impl KernelKind {
    pub fn name(self) -> &'static str {
        match self {
            KernelKind::Hua => "hua",
            KernelKind::Polarized => "polarized",
        }
    }
}

/// Weights `(c, i, j)` of `c · a^i b^j` in the bi-degree-`d` piece of a
/// kernel, plus the weight of `(τ†τ/4) a^{d/2} b^{d/2}` if present.
pub(crate) fn kernel_weights(kind: KernelKind, d: usize, m: usize) -> (Vec<(BigRational, u32, u32)>, Option<BigRational>) {
    match kind {
        KernelKind::Hua => {
            let c = inverse_basis_norm(d, m);
            let c = if d % 2 == 0 { c } else { -c };
            ((0..=d).map(|k| (c.clone(), (d - k) as u32, k as u32)).collect(), None)
        }
        KernelKind::Polarized => {
            let first = (0..=d / 2)
                .map(|s| (nu_coefficient(d - 2 * s, s, m), (d - s) as u32, s as u32))
                .collect();
            let second = (d % 2 == 0).then(|| -nu_coefficient(0, d / 2, m));
            (first, second)
        }
    }
}

/// A reproducing kernel truncated at bi-degree `max_degree`; `terms[d]` is
/// the piece of bi-degree `d` in `(z, w)`, with `w` standing for `e^{−iθ}ω`.
#[derive(Clone, Debug)]
pub struct KernelExpansion {
    pub frame: IsotropicFrame,
    pub kind: KernelKind,
    pub max_degree: usize,
    pub terms: Vec<PolyMV>,
}

fn build_kernel(frame: &IsotropicFrame, kind: KernelKind, max_degree: usize) -> KernelExpansion {
    let m = frame.dim();
    let zt = PolyMV::scalar_pairing(&KVARS, "z", &frame.tau()).expect("declared");
    let ztd = PolyMV::scalar_pairing(&KVARS, "z", &frame.tau_dagger()).expect("declared");
    let wt = PolyMV::scalar_pairing(&KVARS, "w", &frame.tau()).expect("declared");
    let wtd = PolyMV::scalar_pairing(&KVARS, "w", &frame.tau_dagger()).expect("declared");
    let a = &zt * &wtd;
    let b = &ztd * &wt;
    let mut apow = vec![PolyMV::one(m, &KVARS)];
    let mut bpow = vec![PolyMV::one(m, &KVARS)];
    for i in 1..=max_degree {
        apow.push(&apow[i - 1] * &a);
        bpow.push(&bpow[i - 1] * &b);
    }
    let quarter = (&frame.tau_dagger() * &frame.tau()).scale(&ExactScalar::frac(1, 4));
    let terms = (0..=max_degree)
        .map(|d| {
            let (first, second) = kernel_weights(kind, d, m);
            let mut t = PolyMV::zero(m, &KVARS);
            for (c, i, j) in first {
                t = &t + &(&apow[i as usize] * &bpow[j as usize]).scale(&ExactScalar::real(c));
            }
            if let Some(c) = second {
                let h = d / 2;
                t = &t + &(&apow[h] * &bpow[h]).left_mul(&quarter.scale(&ExactScalar::real(c)));
            }
            t
        })
        .collect();
    KernelExpansion { frame: frame.clone(), kind, max_degree, terms }
}

/// `Σ_s Σ_k (−1)^s Γ(s+m/2)/(Γ(s+1)Γ(m/2)) a^{s−k} b^k` for `s ≤ D`, with
/// `a = ⟨z,τ⟩⟨w,τ†⟩` and `b = ⟨z,τ†⟩⟨w,τ⟩`.
pub fn hua_kernel(frame: &IsotropicFrame, max_degree: usize) -> KernelExpansion {
    build_kernel(frame, KernelKind::Hua, max_degree)
}

/// `Σ ν_{k,s} a^{k+s} b^s − (τ†τ/4) Σ ν_{0,s} a^s b^s`, truncated at
/// `k + 2s ≤ D` and `2s ≤ D`.
pub fn polarized_kernel(frame: &IsotropicFrame, max_degree: usize) -> KernelExpansion {
    build_kernel(frame, KernelKind::Polarized, max_degree)
}

fn single_var(f: &PolyMV) -> Result<(), TransformError> {
    if f.vars().len() != 1 {
        return Err(crate::integrate::IntegrateError::VariableCount { expected: 1, got: f.vars().len() }.into());
    }
    Ok(())
}

fn max_degree(f: &PolyMV) -> Result<usize, TransformError> {
    single_var(f)?;
    Ok(f.degree_range(&f.vars()[0])?.map(|(_, hi)| hi as usize).unwrap_or(0))
}

impl KernelExpansion {
    /// `∫∫ kernel(z, e^{−iθ}ω) f(e^{iθ}ω)`, normalized; a polynomial in `z`.
    pub fn apply(&self, f: &PolyMV, exec: Exec) -> Result<PolyMV, TransformError> {
        single_var(f)?;
        let mut out = PolyMV::zero(self.frame.dim(), &["z"]);
        for term in &self.terms {
            out = &out + &lie_sphere_integral(term, "w", f, exec)?;
        }
        Ok(out)
    }
}

/// Orthogonal projection onto the span of the `f_{τ,k,ℓ}`; the kernel is
/// truncated at `max_degree`, or at the degree of `f` when `None`.
pub fn hua_radon(frame: &IsotropicFrame, f: &PolyMV, max: Option<usize>, exec: Exec) -> Result<PolyMV, TransformError> {
    let d = match max {
        Some(d) => d,
        None => max_degree(f)?,
    };
    hua_kernel(frame, d).apply(f, exec)
}

/// Orthogonal projection onto the span of the `ψ_{τ,α,k}`.
pub fn polarized_hua_radon(
    frame: &IsotropicFrame,
    f: &PolyMV,
    max: Option<usize>,
    exec: Exec,
) -> Result<PolyMV, TransformError> {
    let d = match max {
        Some(d) => d,
        None => max_degree(f)?,
    };
    polarized_kernel(frame, d).apply(f, exec)
}

/// `Σ_{k,ℓ} f_{τ,k,ℓ} ⟨f_{τ,k,ℓ}, f⟩ / ‖f_{τ,k,ℓ}‖²` over `k + ℓ ≤ deg f`.
pub fn hua_radon_via_basis(frame: &IsotropicFrame, f: &PolyMV, exec: Exec) -> Result<PolyMV, TransformError> {
    let d = max_degree(f)? as u32;
    let var = f.vars()[0].clone();
    let mut pairs = Vec::new();
    for s in 0..=d {
        for k in 0..=s {
            pairs.push((k, s - k));
        }
    }
    let parts = exec.map(&pairs, |&(k, l)| -> Result<PolyMV, TransformError> {
        let b = basis_f(frame, k, l, &var);
        let c = lie_inner_product(&b, f, Exec::Sequential)?;
        let w = ExactScalar::real(inverse_basis_norm((k + l) as usize, frame.dim()));
        Ok(basis_f(frame, k, l, "z").right_mul(&c.scale(&w)))
    });
    let mut out = PolyMV::zero(frame.dim(), &["z"]);
    for p in parts {
        out = &out + &p?;
    }
    Ok(out)
}

/// Normalized Lie-sphere inner product `⟨f, g⟩`.
pub fn inner(f: &PolyMV, g: &PolyMV) -> Result<Multivector, TransformError> {
    Ok(lie_inner_product(f, g, Exec::Sequential)?)
}
