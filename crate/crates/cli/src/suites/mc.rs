use anyhow::{bail, Result};
use rand::RngCore;
use serde_json::json;

use hua_radon::algebra::{ExactScalar, Multivector};
use hua_radon::exec::Exec;
use hua_radon::integrate::{
    lie_sphere_integral, mc_lie_sphere_integral, mc_sphere_integral, mc_stiefel_average, sphere_integral,
    stiefel_average,
};
use hua_radon::poly::PolyMV;
use hua_radon::random;
use hua_radon::transforms::{basis_f, hua_kernel, frame_moment};

use super::{case, err, frame_for, Case, Outcome};
use crate::config::SuiteConfig;

pub const MC_GROUPS: [&str; 3] = ["sphere", "stiefel", "lie-sphere"];

fn constant_term(p: &PolyMV) -> Multivector {
    p.terms().values().next().cloned().unwrap_or_else(|| Multivector::zero(p.dim()))
}

/// `(⟨t,ω⟩ + i⟨s,ω⟩)^j (−⟨t,ω⟩ + i⟨s,ω⟩)^j` for a random rational unit `ω`.
fn moment_integrand(m: usize, j: u32, omega: &[ExactScalar]) -> Result<PolyMV, String> {
    let vars = ["t", "s"];
    let w = Multivector::vector(m, omega);
    let tw = PolyMV::scalar_pairing(&vars, "t", &w).map_err(err)?;
    let sw = PolyMV::scalar_pairing(&vars, "s", &w).map_err(err)?;
    let i = ExactScalar::i();
    let a = &tw + &sw.scale(&i);
    let b = &(-&tw) + &sw.scale(&i);
    Ok(&a.pow(j) * &b.pow(j))
}

pub fn cases(config: &SuiteConfig, group: Option<&str>, exec: Exec) -> Result<Vec<Case>> {
    if let Some(g) = group {
        if !MC_GROUPS.contains(&g) {
            bail!("unknown Monte-Carlo group `{g}`; expected one of {}", MC_GROUPS.join(", "));
        }
    }
    let want = |g: &str| group.is_none_or(|x| x == g);
    let n = config.mc_samples;
    let deg = config.max_degree.min(4) as u32;
    let mut out = Vec::new();
    for &m in &config.m_values {
        if want("sphere") {
            out.push(case(format!("sphere/m{m}"), json!({ "m": m, "degree": deg }), move |rng| {
                let p = random::poly(rng, m, "w", deg, 4);
                let exact = sphere_integral(&p).map_err(err)?;
                let estimate = mc_sphere_integral(&p, "w", &[], n, rng.next_u64(), exec).map_err(err)?;
                Ok(Outcome::Mc { label: format!("sphere average, m={m}"), estimate, exact })
            }));
        }
        if want("stiefel") {
            for j in 1..=2u32 {
                out.push(case(format!("stiefel-moment/m{m}/j{j}"), json!({ "m": m, "j": j }), move |rng| {
                    let omega = random::rational_unit_vector(rng, m);
                    let f = moment_integrand(m, j, &omega)?;
                    let exact = Multivector::scalar(m, ExactScalar::from(frame_moment(j as usize, m)));
                    let estimate = mc_stiefel_average(&f, &[], n, rng.next_u64(), exec).map_err(err)?;
                    Ok(Outcome::Mc { label: format!("frame average of (<w,tau><w,tau+>)^{j}, m={m}"), estimate, exact })
                }));
            }
            out.push(case(format!("stiefel-random/m{m}"), json!({ "m": m, "degree": deg }), move |rng| {
                let vars = ["t", "s"];
                let a = random::poly(rng, m, "t", deg / 2, 3).embed(&vars).map_err(err)?;
                let b = random::poly(rng, m, "s", deg / 2, 3).embed(&vars).map_err(err)?;
                let c = random::homogeneous_poly(rng, m, "s", deg, 2, true).embed(&vars).map_err(err)?;
                let f = &(&a * &b) + &c;
                let exact = constant_term(&stiefel_average(&f).map_err(err)?);
                let estimate = mc_stiefel_average(&f, &[], n, rng.next_u64(), exec).map_err(err)?;
                Ok(Outcome::Mc { label: format!("random frame integrand, m={m}"), estimate, exact })
            }));
        }
        if want("lie-sphere") {
            let cfg = config.clone();
            out.push(case(format!("lie-sphere/m{m}"), json!({ "m": m }), move |rng| {
                let frame = frame_for(&cfg, m, rng);
                let f = basis_f(&frame, 1, 1, "w");
                let kernel = hua_kernel(&frame, 2).terms[2].clone();
                let z = random::real_vector(rng, m);
                let exact = lie_sphere_integral(&kernel, "w", &f, Exec::Sequential).map_err(err)?;
                let exact = exact.evaluate_exact(&[("z", z.clone())]).map_err(err)?;
                let fixed = [("z", z.iter().map(ExactScalar::to_complex).collect::<Vec<_>>())];
                let estimate = mc_lie_sphere_integral(&kernel, "w", &f, &fixed, n, rng.next_u64(), exec).map_err(err)?;
                Ok(Outcome::Mc { label: format!("Lie-sphere projection of f(1,1), m={m}"), estimate, exact })
            }));
        }
    }
    Ok(out)
}
