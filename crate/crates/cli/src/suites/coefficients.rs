use std::sync::Arc;

use serde_json::json;

use hua_radon::algebra::ExactScalar;
use hua_radon::exec::Exec;
use hua_radon::integrate::wick::{LinearFormPoly, Symbol};
use hua_radon::poly::PolyMV;
use hua_radon::random;
use hua_radon::special::pfaff_saalschutz_sides;
use hua_radon::transforms::{
    frame_average, phi_hypergeometric, phi_theta_sum, phi_xi_sum, rho_coefficient, rho_with_lower_limit,
    vartheta_coefficient, DualRadonOperator, FrameFactor, KernelKind, RhoLowerLimit,
};
use hua_radon::zonal::{zonal_harmonic, zonal_monogenic};

use super::{case, err, random_monogenic, Case, Outcome};
use crate::config::SuiteConfig;

/// Largest `k` for the ϑ check; the frame average grows quickly with `k`.
const VARTHETA_MAX_K: usize = 2;

pub fn cases(config: &SuiteConfig, exec: Exec) -> Vec<Case> {
    let mut out = Vec::new();
    let d = config.max_degree;
    for &m in &config.m_values {
        let hua = Arc::new(DualRadonOperator::new(m, KernelKind::Hua));
        let pol = Arc::new(DualRadonOperator::new(m, KernelKind::Polarized));
        // warm the averaged-term caches
        exec.map_range(d + 1, |t| {
            hua.averaged_term(t);
            pol.averaged_term(t);
        });

        for t in 0..=d {
            for n in 0..=t / 2 {
                let op = hua.clone();
                let params = json!({ "m": m, "t": t, "n": n });
                out.push(case(format!("phi/m{m}/t{t}/n{n}"), params, move |rng| {
                    let y = loop {
                        let y = random::real_vector(rng, m);
                        if y.iter().any(|c| !c.is_zero()) {
                            break y;
                        }
                    };
                    let z = PolyMV::vector_variable("z", m);
                    let f = &z.pow(2 * n as u32) * &zonal_harmonic(m, t - 2 * n).at_y(&y).rename(&["z"]);
                    if f.is_zero() {
                        return Err("zero input".into());
                    }
                    let g = op.apply(&f, None, Exec::Sequential).map_err(err)?;
                    let pipeline = g.scalar_ratio(&f).ok_or("output is not a scalar multiple of the input")?;
                    let hyp = ExactScalar::from(phi_hypergeometric(t, n, m).map_err(err)?);
                    let xi = ExactScalar::from(phi_xi_sum(t, n, m).map_err(err)?);
                    let theta = ExactScalar::from(phi_theta_sum(t, n, m).map_err(err)?);
                    let details = json!({
                        "pipeline": pipeline.to_string(),
                        "hypergeometric": hyp.to_string(),
                        "xi_sum": xi.to_string(),
                        "theta_sum": theta.to_string(),
                        "zero": pipeline.is_zero(),
                    });
                    let pass = pipeline == hyp && hyp == xi && xi == theta;
                    Ok(Outcome::Exact { pass, lhs: pipeline.to_string(), rhs: hyp.to_string(), details })
                }));
            }
            for a in 0..=t {
                let op = pol.clone();
                let params = json!({ "m": m, "t": t, "a": a });
                out.push(case(format!("rho/m{m}/t{t}/a{a}"), params, move |rng| {
                    let z = PolyMV::vector_variable("z", m);
                    let f = &z.pow(a as u32) * &random_monogenic(rng, m, t - a);
                    if f.is_zero() {
                        return Err("zero input".into());
                    }
                    let g = op.apply(&f, None, Exec::Sequential).map_err(err)?;
                    let pipeline = g.scalar_ratio(&f).ok_or("output is not a scalar multiple of the input")?;
                    let rho = ExactScalar::from(rho_coefficient(t, a, m).map_err(err)?);
                    let from_n = ExactScalar::from(rho_with_lower_limit(t, a, m, RhoLowerLimit::N).map_err(err)?);
                    let from_0 = ExactScalar::from(rho_with_lower_limit(t, a, m, RhoLowerLimit::Zero).map_err(err)?);
                    let mut matches = Vec::new();
                    if from_n == pipeline {
                        matches.push("lower-limit-n");
                    }
                    if from_0 == pipeline {
                        matches.push("lower-limit-zero");
                    }
                    let details = json!({
                        "pipeline": pipeline.to_string(),
                        "lower_limit_n": from_n.to_string(),
                        "lower_limit_zero": from_0.to_string(),
                        "matches": matches,
                        "zero": pipeline.is_zero(),
                    });
                    Ok(Outcome::Exact { pass: pipeline == rho, lhs: pipeline.to_string(), rhs: rho.to_string(), details })
                }));
            }
        }

        for k in 0..=(d / 2).min(VARTHETA_MAX_K) {
            out.push(case(format!("vartheta/m{m}/k{k}"), json!({ "m": m, "k": k }), move |_| {
                let symbols = [Symbol::Var("x".into()), Symbol::Var("y".into())];
                let x = PolyMV::vector_in(m, &["x", "y"], "x").map_err(err)?;
                let y = PolyMV::vector_in(m, &["x", "y"], "y").map_err(err)?;
                let kk = k as u32;
                let f = LinearFormPoly::tau(2, 0)
                    .pow(kk)
                    .mul(&LinearFormPoly::tau_dagger(2, 0).pow(kk))
                    .mul(&LinearFormPoly::tau(2, 1).pow(kk))
                    .mul(&LinearFormPoly::tau_dagger(2, 1).pow(kk));
                let lhs = frame_average(m, &f, &symbols, &["x", "y"], FrameFactor::TauDaggerTau);
                let mut rhs = PolyMV::zero(m, &["x", "y"]);
                for j in 0..=2 * k {
                    let v = vartheta_coefficient(j, k, m).map_err(err)?;
                    let c = zonal_monogenic(m, 2 * k - j).body;
                    rhs = &rhs + &(&(&x.pow(j as u32) * &c) * &y.pow(j as u32)).scale(&ExactScalar::from(v));
                }
                Ok(Outcome::polys(&lhs, &rhs))
            }));
        }

        for k in 0..=d {
            for l in 0..=k.min(d - k) {
                for n in 0..=l {
                    let params = json!({ "m": m, "k": k, "l": l, "n": n });
                    out.push(case(format!("pfaff/m{m}/k{k}/l{l}/n{n}"), params, move |_| {
                        let (a, b) = pfaff_saalschutz_sides(k, l, n, m).map_err(err)?;
                        Ok(Outcome::equal(a.to_string(), b.to_string(), json!(null)))
                    }));
                }
            }
        }
    }
    out
}
