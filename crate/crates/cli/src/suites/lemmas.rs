use serde_json::json;

use hua_radon::algebra::{ExactScalar, Multivector};
use hua_radon::exec::Exec;
use hua_radon::fischer::{harmonic_fischer, harmonic_to_monogenic, monogenic_fischer};
use hua_radon::integrate::wick::{LinearFormPoly, PairingPoly, StiefelEngine, Symbol};
use hua_radon::poly::{format_poly, PolyMV};
use hua_radon::random;
use hua_radon::special::{factorial_q, qi};
use hua_radon::transforms::{basis_f, hua_kernel, hua_radon_via_basis, frame_moment, theta_coefficient};
use hua_radon::zonal::{harmonic_monogenic_relation_check, zonal_harmonic, zonal_harmonic_pairing, zonal_monogenic};

use super::{case, err, frame_for, random_monogenic, Case, Outcome};
use crate::config::SuiteConfig;

pub fn cases(config: &SuiteConfig) -> Vec<Case> {
    let mut out = Vec::new();
    let d = config.max_degree;
    for &m in &config.m_values {
        let cfg = config.clone();
        out.push(case(format!("frame/m{m}"), json!({ "m": m }), move |rng| {
            let f = frame_for(&cfg, m, rng);
            Ok(Outcome::equal(f.identities_hold().to_string(), "true".into(), json!({ "frame": format!("{:?}", f) })))
        }));

        out.push(case(format!("clifford/m{m}"), json!({ "m": m }), move |rng| {
            let a = random::multivector(rng, m, 6);
            let lhs = (&a.hermitian_conjugate() * &a).scalar_part();
            let rhs: ExactScalar = a.terms().iter().map(|(_, c)| &c.conj() * c).sum();
            let u: Vec<ExactScalar> = (0..m).map(|_| random::gaussian_rational(rng, 3)).collect();
            let v: Vec<ExactScalar> = (0..m).map(|_| random::gaussian_rational(rng, 3)).collect();
            let dot: ExactScalar = u.iter().zip(&v).map(|(x, y)| x * y).sum();
            let mut wedge = Multivector::zero(m);
            for i in 0..m {
                for j in i + 1..m {
                    let c = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
                    wedge = &wedge + &Multivector::blade(m, &[i + 1, j + 1], c).map_err(err)?;
                }
            }
            let uv = &Multivector::vector(m, &u) * &Multivector::vector(m, &v);
            let split = &Multivector::scalar(m, -dot) + &wedge;
            Ok(Outcome::equal(format!("{lhs} | {uv:?}"), format!("{rhs} | {split:?}"), json!(null)))
        }));

        for k in 0..=d as u32 {
            for l in 0..=(d as u32 - k) {
                let cfg = config.clone();
                let params = json!({ "m": m, "k": k, "l": l });
                out.push(case(format!("laplacian/m{m}/k{k}/l{l}"), params, move |rng| {
                    let frame = frame_for(&cfg, m, rng);
                    let mut lap = basis_f(&frame, k, l, "z");
                    let (mut lhs, mut rhs) = (String::new(), String::new());
                    for j in 1..=k.min(l) + 1 {
                        lap = lap.laplacian("z").map_err(err)?;
                        let expect = if j > k.min(l) {
                            PolyMV::zero(m, &["z"])
                        } else {
                            let c = qi(-4).pow(j as i32) * factorial_q(k as u64) / factorial_q((k - j) as u64)
                                * factorial_q(l as u64)
                                / factorial_q((l - j) as u64);
                            basis_f(&frame, k - j, l - j, "z").scale(&ExactScalar::from(c))
                        };
                        lhs.push_str(&format_poly(&lap));
                        rhs.push_str(&format_poly(&expect));
                    }
                    Ok(Outcome::equal(lhs, rhs, json!(null)))
                }));
            }
        }

        for t in 0..=d {
            for a in 0..=t {
                let params = json!({ "m": m, "t": t, "a": a });
                out.push(case(format!("euler-gamma/m{m}/t{t}/a{a}"), params, move |rng| {
                    let z = PolyMV::vector_variable("z", m);
                    let f = &z.pow(a as u32) * &random_monogenic(rng, m, t - a);
                    let n = (a / 2) as i64;
                    let ev = if a % 2 == 0 { 2 * n - t as i64 } else { t as i64 - 2 * n + m as i64 - 2 };
                    let lhs = format!(
                        "{}{}",
                        format_poly(&f.euler("z").map_err(err)?),
                        format_poly(&f.gamma_op("z").map_err(err)?)
                    );
                    let rhs = format!(
                        "{}{}",
                        format_poly(&f.scale(&ExactScalar::from_int(t as i64))),
                        format_poly(&f.scale(&ExactScalar::from_int(ev)))
                    );
                    Ok(Outcome::equal(lhs, rhs, json!({ "gamma_eigenvalue": ev })))
                }));
            }
        }

        for deg in 0..=d as u32 {
            out.push(case(format!("fischer/m{m}/d{deg}"), json!({ "m": m, "degree": deg }), move |rng| {
                let p = random::homogeneous_poly(rng, m, "x", deg, 3, false);
                let x = PolyMV::vector_variable("x", m);
                let ht = harmonic_fischer(&p, "x").map_err(err)?;
                let mut ok = true;
                for (_, h) in &ht.components {
                    ok &= h.laplacian("x").map_err(err)?.is_zero();
                    let (mk, mk1) = harmonic_to_monogenic(h, "x").map_err(err)?;
                    ok &= mk.dirac_left("x").map_err(err)?.is_zero() && mk1.dirac_left("x").map_err(err)?.is_zero();
                    ok &= &mk + &(&x * &mk1) == *h;
                }
                let mt = monogenic_fischer(&p, "x").map_err(err)?;
                for c in &mt.components {
                    ok &= c.m.dirac_left("x").map_err(err)?.is_zero();
                }
                let lhs = format!(
                    "{}{}",
                    format_poly(&ht.recombine(&p).map_err(err)?),
                    format_poly(&mt.recombine(&p).map_err(err)?)
                );
                let rhs = format!("{}{}", format_poly(&p), format_poly(&p));
                Ok(Outcome::Exact { pass: ok && lhs == rhs, lhs, rhs, details: json!({ "components_checked": ok }) })
            }));
        }

        for k in 0..=d {
            out.push(case(format!("zonal/m{m}/k{k}"), json!({ "m": m, "k": k }), move |_| {
                let kk = zonal_harmonic(m, k).body;
                let c = zonal_monogenic(m, k).body;
                let flags = [
                    kk.laplacian("x").map_err(err)?.is_zero() && kk.laplacian("y").map_err(err)?.is_zero(),
                    c.dirac_left("x").map_err(err)?.is_zero(),
                    c.dirac_right("y").map_err(err)?.is_zero(),
                    harmonic_monogenic_relation_check(m, k),
                ];
                Ok(Outcome::equal(format!("{flags:?}"), format!("{:?}", [true; 4]), json!(null)))
            }));
        }

        for j in 0..=(d / 2).max(1) {
            out.push(case(format!("stiefel-average/m{m}/j{j}"), json!({ "m": m, "j": j }), move |rng| {
                let omega = random::rational_unit_vector(rng, m);
                let f = LinearFormPoly::tau(1, 0).pow(j as u32).mul(&LinearFormPoly::tau_dagger(1, 0).pow(j as u32));
                let v = StiefelEngine::new(m, 1)
                    .stiefel_average(&f)
                    .realize(m, &[], &[Symbol::Fixed(omega)])
                    .map_err(err)?;
                let expect = PolyMV::scalar(m, &[], ExactScalar::from(frame_moment(j, m)));
                Ok(Outcome::polys(&v, &expect))
            }));
        }

        for k in 0..=d {
            for l in 0..=(d - k) {
                let params = json!({ "m": m, "k": k, "l": l });
                out.push(case(format!("frame-average/m{m}/k{k}/l{l}"), params, move |_| {
                    let (k32, l32) = (k as u32, l as u32);
                    let f = LinearFormPoly::tau(2, 0)
                        .pow(k32)
                        .mul(&LinearFormPoly::tau_dagger(2, 0).pow(l32))
                        .mul(&LinearFormPoly::tau(2, 1).pow(l32))
                        .mul(&LinearFormPoly::tau_dagger(2, 1).pow(k32));
                    let lhs = StiefelEngine::new(m, 2).stiefel_average(&f);
                    let r2 = PairingPoly::pairing(2, 0, 0).mul(&PairingPoly::pairing(2, 1, 1));
                    let mut rhs = PairingPoly::zero(2);
                    for j in 0..=k.min(l) {
                        let th = theta_coefficient(j, k, l, m).map_err(err)?;
                        let term = r2.pow(j as u32).mul(&zonal_harmonic_pairing(m, k + l - 2 * j));
                        rhs = rhs.add(&term.scale(&ExactScalar::from(th)));
                    }
                    Ok(Outcome::equal(format!("{lhs:?}"), format!("{rhs:?}"), json!(null)))
                }));
            }
        }

        for deg in 0..=d as u32 {
            let cfg = config.clone();
            out.push(case(format!("projection/m{m}/d{deg}"), json!({ "m": m, "degree": deg }), move |rng| {
                let frame = frame_for(&cfg, m, rng);
                let f = random::poly(rng, m, "z", deg, 4);
                let a = hua_kernel(&frame, deg as usize).apply(&f, Exec::Sequential).map_err(err)?;
                let b = hua_radon_via_basis(&frame, &f, Exec::Sequential).map_err(err)?;
                Ok(Outcome::polys(&a, &b))
            }));
        }
    }
    out
}
