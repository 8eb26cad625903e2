use std::sync::Arc;

use rand::Rng;
use serde_json::json;

use hua_radon::exec::Exec;
use hua_radon::fischer::almansi_assemble;
use hua_radon::poly::PolyMV;
use hua_radon::transforms::{component_coefficient, invert_hua, invert_polarized, DualRadonOperator, KernelKind};

use super::{case, err, random_monogenic, Case, Outcome};
use crate::config::SuiteConfig;

const ALMANSI_TRIALS: usize = 3;

fn invert(kind: KernelKind, g: &PolyMV) -> Result<PolyMV, String> {
    match kind {
        KernelKind::Hua => invert_hua(g),
        KernelKind::Polarized => invert_polarized(g),
    }
    .map_err(err)
}

pub fn cases(config: &SuiteConfig, kind: KernelKind, exec: Exec) -> Vec<Case> {
    let mut out = Vec::new();
    let d = config.max_degree;
    for &m in &config.m_values {
        let op = Arc::new(DualRadonOperator::new(m, kind));
        exec.map_range(d + 1, |t| {
            op.averaged_term(t);
        });
        for t in 0..=d {
            for a in 0..=t {
                let op = op.clone();
                let params = json!({ "m": m, "t": t, "a": a });
                out.push(case(format!("component/m{m}/t{t}/a{a}"), params, move |rng| {
                    let z = PolyMV::vector_variable("z", m);
                    let f = &z.pow(a as u32) * &random_monogenic(rng, m, t - a);
                    let g = op.apply(&f, None, Exec::Sequential).map_err(err)?;
                    let back = invert(kind, &g)?;
                    let c = component_coefficient(kind, t, a, m).map_err(err)?;
                    let mut o = Outcome::polys(&back, &f);
                    if let Outcome::Exact { details, .. } = &mut o {
                        *details = json!({ "coefficient": c.to_string() });
                    }
                    Ok(o)
                }));
            }
        }
        for trial in 0..ALMANSI_TRIALS {
            let op = op.clone();
            let params = json!({ "m": m, "trial": trial });
            out.push(case(format!("almansi/m{m}/trial{trial}"), params, move |rng| {
                let nm = rng.random_range(1..=3usize);
                let nn = rng.random_range(0..=2usize);
                let ms: Vec<PolyMV> = (0..nm).map(|_| {
                    let k = rng.random_range(0..=d);
                    random_monogenic(rng, m, k)
                }).collect();
                let ns: Vec<PolyMV> = (0..nn.min(d)).map(|_| {
                    let k = rng.random_range(0..d);
                    random_monogenic(rng, m, k)
                }).collect();
                let f = almansi_assemble(m, "z", &ms, &ns).map_err(err)?.value;
                let g = op.apply(&f, None, Exec::Sequential).map_err(err)?;
                Ok(Outcome::polys(&invert(kind, &g)?, &f))
            }));
        }
    }
    out
}
