use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use super::kernel::{kernel_weights, KernelKind};
use super::TransformError;
use crate::algebra::{ExactScalar, Multivector};
use crate::exec::Exec;
use crate::integrate::lie_sphere_integral;
use crate::integrate::wick::{LinearFormPoly, StiefelEngine, Symbol};
use crate::poly::PolyMV;
use crate::special::q;

const KVARS: [&str; 2] = ["z", "w"];

/// The dual Radon transform composed with a Hua-Radon type transform,
/// `f ↦ R̃[T_τ[f]]`, with the frame-averaged kernel cached per bi-degree.
pub struct DualRadonOperator {
    m: usize,
    kind: KernelKind,
    cache: Mutex<BTreeMap<usize, Arc<PolyMV>>>,
}

impl DualRadonOperator {
    pub fn new(m: usize, kind: KernelKind) -> Self {
        assert!(m >= 3, "the dual transform needs m ≥ 3");
        Self { m, kind, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    /// Average over all frames of the bi-degree-`d` kernel piece, as a
    /// polynomial in `(z, w)`.
    pub fn averaged_term(&self, d: usize) -> Arc<PolyMV> {
        if let Some(hit) = self.cache.lock().expect("cache lock").get(&d) {
            return hit.clone();
        }
        let p = Arc::new(self.compute_averaged_term(d));
        self.cache.lock().expect("cache lock").insert(d, p.clone());
        p
    }

    fn compute_averaged_term(&self, d: usize) -> PolyMV {
        let m = self.m;
        let (first, second) = kernel_weights(self.kind, d, m);
        let symbols = [Symbol::Var("z".into()), Symbol::Var("w".into())];
        let a = LinearFormPoly::tau(2, 0).mul(&LinearFormPoly::tau_dagger(2, 1));
        let b = LinearFormPoly::tau_dagger(2, 0).mul(&LinearFormPoly::tau(2, 1));
        let mut scalar = LinearFormPoly::zero(2);
        for (c, i, j) in first {
            scalar = scalar.add(&a.pow(i).mul(&b.pow(j)).scale(&ExactScalar::real(c)));
        }
        let mut out = frame_average(m, &scalar, &symbols, &KVARS, FrameFactor::One);
        if let Some(c) = second {
            let h = (d / 2) as u32;
            let ab = a.pow(h).mul(&b.pow(h)).scale(&ExactScalar::real(c * q(1, 4)));
            out = &out + &frame_average(m, &ab, &symbols, &KVARS, FrameFactor::TauDaggerTau);
        }
        out
    }

    /// `R̃[T_τ[f]](z)` for a polynomial `f` in one variable, with the kernel
    /// truncated at `max_degree` (default: the degree of `f`).
    pub fn apply(&self, f: &PolyMV, max_degree: Option<usize>, exec: Exec) -> Result<PolyMV, TransformError> {
        if f.vars().len() != 1 {
            return Err(crate::integrate::IntegrateError::VariableCount { expected: 1, got: f.vars().len() }.into());
        }
        let top = f.degree_range(&f.vars()[0])?.map(|(_, hi)| hi as usize).unwrap_or(0);
        let dmax = max_degree.unwrap_or(top);
        let mut out = PolyMV::zero(self.m, &["z"]);
        for d in 0..=dmax {
            let k = self.averaged_term(d);
            out = &out + &lie_sphere_integral(&k, "w", f, exec)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameFactor {
    One,
    /// Right factor `τ†τ = 2 − 2i t∧s`.
    TauDaggerTau,
}

/// Average over all frames `(t, s)` of `F` or `F·τ†τ`, where `F` is a
/// polynomial in the linear forms of the letters `symbols`, expanded in
/// the variables `vars`.
pub fn frame_average(m: usize, f: &LinearFormPoly, symbols: &[Symbol], vars: &[&str], factor: FrameFactor) -> PolyMV {
    let n0 = f.alphabet_size();
    assert_eq!(symbols.len(), n0, "one symbol per letter");
    match factor {
        FrameFactor::One => {
            let mut engine = StiefelEngine::new(m, n0);
            engine.stiefel_average(f).realize(m, vars, symbols).expect("symbols name declared variables")
        }
        FrameFactor::TauDaggerTau => {
            // letters n0.. are the basis vectors e_1..e_m
            let n = n0 + m;
            let mut all = symbols.to_vec();
            for j in 0..m {
                let mut c = vec![ExactScalar::zero(); m];
                c[j] = ExactScalar::one();
                all.push(Symbol::Fixed(c));
            }
            let fe = f.extend_alphabet(n);
            let mut engine = StiefelEngine::new(m, n);
            let mut out = engine
                .stiefel_average(&fe)
                .scale(&ExactScalar::from_int(2))
                .realize(m, vars, &all)
                .expect("symbols name declared variables");
            for j in 0..m {
                for k in j + 1..m {
                    let wedge = LinearFormPoly::x(n, n0 + j)
                        .mul(&LinearFormPoly::y(n, n0 + k))
                        .add(&LinearFormPoly::x(n, n0 + k).mul(&LinearFormPoly::y(n, n0 + j)).scale(&ExactScalar::from_int(-1)));
                    let avg = engine.stiefel_average(&fe.mul(&wedge));
                    if avg.is_zero() {
                        continue;
                    }
                    let blade = Multivector::blade(m, &[j + 1, k + 1], ExactScalar::gaussian(0, -2)).expect("indices in range");
                    let p = avg.realize(m, vars, &all).expect("symbols name declared variables");
                    out = &out + &p.right_mul(&blade);
                }
            }
            out
        }
    }
}

/// One-shot `R̃[T_τ[f]]` in dimension `m`.
pub fn dual_radon_compose(
    kind: KernelKind,
    f: &PolyMV,
    m: usize,
    max_degree: Option<usize>,
    exec: Exec,
) -> Result<PolyMV, TransformError> {
    if f.dim() != m {
        return Err(crate::algebra::AlgebraError::DimensionMismatch { left: m, right: f.dim() }.into());
    }
    DualRadonOperator::new(m, kind).apply(f, max_degree, exec)
}
