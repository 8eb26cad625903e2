//! Seeded Monte-Carlo estimates of the exact integrals, used as an
//! independent oracle.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::IntegrateError;
use crate::algebra::{Blade, FloatMultivector, Multivector};
use crate::exec::Exec;
use crate::poly::PolyMV;

const CHUNK: usize = 4096;

/// Sample mean and standard error of the mean, per blade. The real and
/// imaginary parts of `stderr` are the errors of the corresponding parts
/// of `mean`.
#[derive(Clone, Debug)]
pub struct McEstimate {
    pub samples: usize,
    pub mean: FloatMultivector,
    pub stderr: FloatMultivector,
}

impl McEstimate {
    /// Largest per-component `|mean − exact| / stderr`. A component with
    /// zero spread counts as `0` when it matches to `1e−9` and as infinity
    /// otherwise.
    pub fn z_score(&self, exact: &Multivector) -> f64 {
        let ex = exact.to_float();
        let mut blades: Vec<Blade> = self.mean.terms.keys().copied().collect();
        blades.extend(ex.terms.keys().copied());
        let mut z: f64 = 0.0;
        for b in blades {
            let d = self.mean.get(b) - ex.get(b);
            let se = self.stderr.get(b);
            for (diff, s) in [(d.re, se.re), (d.im, se.im)] {
                let part = if s > 0.0 {
                    diff.abs() / s
                } else if diff.abs() < 1e-9 {
                    0.0
                } else {
                    f64::INFINITY
                };
                z = z.max(part);
            }
        }
        z
    }
}

#[derive(Default, Clone)]
struct Moments {
    sum: BTreeMap<Blade, (f64, f64, f64, f64)>,
}

impl Moments {
    fn push(&mut self, x: &FloatMultivector) {
        for (b, c) in &x.terms {
            let e = self.sum.entry(*b).or_default();
            e.0 += c.re;
            e.1 += c.re * c.re;
            e.2 += c.im;
            e.3 += c.im * c.im;
        }
    }

    fn merge(&mut self, other: &Moments) {
        for (b, v) in &other.sum {
            let e = self.sum.entry(*b).or_default();
            e.0 += v.0;
            e.1 += v.1;
            e.2 += v.2;
            e.3 += v.3;
        }
    }

    fn finish(&self, dim: usize, n: usize) -> McEstimate {
        let nf = n as f64;
        let mut mean = FloatMultivector::zero(dim);
        let mut stderr = FloatMultivector::zero(dim);
        let se = |s: f64, sq: f64| {
            if n < 2 {
                return 0.0;
            }
            let mu = s / nf;
            let var = ((sq - nf * mu * mu) / (nf - 1.0)).max(0.0);
            (var / nf).sqrt()
        };
        for (b, v) in &self.sum {
            mean.terms.insert(*b, Complex64::new(v.0 / nf, v.2 / nf));
            stderr.terms.insert(*b, Complex64::new(se(v.0, v.1), se(v.2, v.3)));
        }
        McEstimate { samples: n, mean, stderr }
    }
}

fn chunk_rng(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

fn run<F>(dim: usize, samples: usize, seed: u64, exec: Exec, sample: F) -> Result<McEstimate, IntegrateError>
where
    F: Fn(&mut ChaCha8Rng) -> Result<FloatMultivector, IntegrateError> + Sync + Send,
{
    let chunks = samples.div_ceil(CHUNK);
    let parts = exec.map_range(chunks, |ci| {
        let mut rng = chunk_rng(seed, ci);
        let n = CHUNK.min(samples - ci * CHUNK);
        let mut acc = Moments::default();
        for _ in 0..n {
            acc.push(&sample(&mut rng)?);
        }
        Ok::<_, IntegrateError>(acc)
    });
    let mut total = Moments::default();
    for p in parts {
        total.merge(&p?);
    }
    Ok(total.finish(dim, samples))
}

/// A uniform point on `S^{m−1}`.
pub fn random_unit_vector<R: Rng>(rng: &mut R, m: usize) -> Vec<f64> {
    loop {
        let g: Vec<f64> = (0..m).map(|_| rng.sample(StandardNormal)).collect();
        let n = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            return g.into_iter().map(|x| x / n).collect();
        }
    }
}

/// A uniform orthonormal pair `(t, s)` in ℝ^m.
pub fn random_orthonormal_pair<R: Rng>(rng: &mut R, m: usize) -> (Vec<f64>, Vec<f64>) {
    let t = random_unit_vector(rng, m);
    loop {
        let g: Vec<f64> = (0..m).map(|_| rng.sample(StandardNormal)).collect();
        let d: f64 = g.iter().zip(&t).map(|(a, b)| a * b).sum();
        let s: Vec<f64> = g.iter().zip(&t).map(|(a, b)| a - d * b).collect();
        let n = s.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-12 {
            return (t, s.into_iter().map(|x| x / n).collect());
        }
    }
}

fn complexify(v: &[f64], c: Complex64) -> Vec<Complex64> {
    v.iter().map(|x| c * x).collect()
}

fn with_fixed<'a>(
    fixed: &'a [(&'a str, Vec<Complex64>)],
    extra: Vec<(&'a str, Vec<Complex64>)>,
) -> Vec<(&'a str, Vec<Complex64>)> {
    let mut a = extra;
    a.extend(fixed.iter().cloned());
    a
}

/// Estimates the normalized sphere integral over `var`, with the other
/// variables fixed at the given points.
pub fn mc_sphere_integral(
    p: &PolyMV,
    var: &str,
    fixed: &[(&str, Vec<Complex64>)],
    samples: usize,
    seed: u64,
    exec: Exec,
) -> Result<McEstimate, IntegrateError> {
    let m = p.dim();
    p.var_index(var)?;
    run(m, samples, seed, exec, |rng| {
        let w = random_unit_vector(rng, m);
        let a = with_fixed(fixed, vec![(var, complexify(&w, Complex64::new(1.0, 0.0)))]);
        Ok(p.evaluate(&a)?)
    })
}

/// Estimates the Stiefel average over `"t"`, `"s"`.
pub fn mc_stiefel_average(
    f: &PolyMV,
    fixed: &[(&str, Vec<Complex64>)],
    samples: usize,
    seed: u64,
    exec: Exec,
) -> Result<McEstimate, IntegrateError> {
    let m = f.dim();
    f.var_index("t")?;
    f.var_index("s")?;
    run(m, samples, seed, exec, |rng| {
        let (t, s) = random_orthonormal_pair(rng, m);
        let one = Complex64::new(1.0, 0.0);
        let a = with_fixed(fixed, vec![("t", complexify(&t, one)), ("s", complexify(&s, one))]);
        Ok(f.evaluate(&a)?)
    })
}

/// Estimates the normalized Lie-sphere integral of `kernel(·, e^{−iθ}ω) f(e^{iθ}ω)`.
pub fn mc_lie_sphere_integral(
    kernel: &PolyMV,
    wvar: &str,
    f: &PolyMV,
    fixed: &[(&str, Vec<Complex64>)],
    samples: usize,
    seed: u64,
    exec: Exec,
) -> Result<McEstimate, IntegrateError> {
    let m = kernel.dim();
    if f.vars().len() != 1 {
        return Err(IntegrateError::VariableCount { expected: 1, got: f.vars().len() });
    }
    kernel.var_index(wvar)?;
    let fvar = f.vars()[0].clone();
    run(m, samples, seed, exec, |rng| {
        let w = random_unit_vector(rng, m);
        let theta: f64 = rng.random_range(0.0..std::f64::consts::PI);
        let ph = Complex64::from_polar(1.0, theta);
        let k = kernel.evaluate(&with_fixed(fixed, vec![(wvar, complexify(&w, ph.conj()))]))?;
        let v = f.evaluate(&[(fvar.as_str(), complexify(&w, ph))])?;
        Ok(k.mul(&v))
    })
}
