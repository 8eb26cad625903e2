//! Acceptance criteria, one line per criterion; exits non-zero on any failure.

use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hua_radon::algebra::{ExactScalar, Multivector, SpinElement};
use hua_radon::exec::Exec;
use hua_radon::fischer::{almansi_assemble, harmonic_fischer, harmonic_to_monogenic, monogenic_fischer};
use hua_radon::integrate::wick::{LinearFormPoly, PairingPoly, StiefelEngine, Symbol};
use hua_radon::integrate::{
    lie_sphere_integral, mc_lie_sphere_integral, mc_sphere_integral, mc_stiefel_average, sphere_integral,
    sphere_integrate_var, stiefel_average, tau, tau_dagger,
};
use hua_radon::poly::PolyMV;
use hua_radon::random;
use hua_radon::special::{pfaff_saalschutz_sides, q, qi};
use hua_radon::transforms::{
    basis_f, frame_average, hua_kernel, hua_radon_via_basis, invert_hua, invert_polarized, frame_moment,
    phi_hypergeometric, phi_theta_sum, phi_xi_sum, rho_coefficient, rho_with_lower_limit, theta_coefficient,
    vartheta_coefficient, DualRadonOperator, FrameFactor, IsotropicFrame, KernelKind, RhoLowerLimit,
};
use hua_radon::zonal::{harmonic_monogenic_relation_check, zonal_harmonic, zonal_harmonic_pairing, zonal_monogenic};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const MS: [usize; 3] = [3, 4, 5];

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

fn s(n: i64) -> ExactScalar {
    ExactScalar::from_int(n)
}

fn r(x: BigRational) -> ExactScalar {
    ExactScalar::real(x)
}

fn unit(m: usize, j: usize) -> Vec<ExactScalar> {
    let mut v = vec![ExactScalar::zero(); m];
    v[j] = ExactScalar::one();
    v
}

fn random_y(rng: &mut ChaCha8Rng, m: usize) -> Vec<ExactScalar> {
    loop {
        let y = random::real_vector(rng, m);
        if y.iter().any(|c| !c.is_zero()) {
            return y;
        }
    }
}

/// A random left-monogenic polynomial of degree `k` in `var`.
fn random_monogenic(rng: &mut ChaCha8Rng, m: usize, k: usize, var: &str) -> PolyMV {
    // right factors can be zero divisors
    loop {
        let y = random_y(rng, m);
        let c = random::multivector(rng, m, 2);
        let p = zonal_monogenic(m, k).at_y(&y).rename(&[var]).right_mul(&c);
        if !p.is_zero() {
            return p;
        }
    }
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for m in 3..=6 {
        for j in 1..=m {
            let ej = Multivector::e(m, j);
            ensure!(&ej * &ej == Multivector::scalar(m, s(-1)), "e_{j}² ≠ −1 in m={m}");
            for k in j + 1..=m {
                let ek = Multivector::e(m, k);
                ensure!((&(&ej * &ek) + &(&ek * &ej)).is_zero(), "e_{j}, e_{k} do not anticommute");
            }
        }
    }
    let mut g = rng(1);
    for m in MS {
        for _ in 0..20 {
            let a = random::multivector(&mut g, m, 6);
            let lhs = (&a.hermitian_conjugate() * &a).scalar_part();
            let rhs: ExactScalar = a.terms().iter().map(|(_, c)| &c.conj() * c).sum();
            ensure!(lhs == rhs, "[α†α]₀ ≠ Σ|α_A|² in m={m}");
            let u: Vec<ExactScalar> = (0..m).map(|_| random::gaussian_rational(&mut g, 3)).collect();
            let v: Vec<ExactScalar> = (0..m).map(|_| random::gaussian_rational(&mut g, 3)).collect();
            let dot: ExactScalar = u.iter().zip(&v).map(|(x, y)| x * y).sum();
            let mut wedge = Multivector::zero(m);
            for i in 0..m {
                for j in i + 1..m {
                    let c = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
                    wedge = &wedge + &Multivector::blade(m, &[i + 1, j + 1], c).unwrap();
                }
            }
            let uv = &Multivector::vector(m, &u) * &Multivector::vector(m, &v);
            ensure!(uv == &Multivector::scalar(m, -dot) + &wedge, "uv ≠ −⟨u,v⟩ + u∧v in m={m}");
            checked += 1;
        }
        ensure!(IsotropicFrame::canonical(m).identities_hold(), "canonical frame fails in m={m}");
        for i in 0..20 {
            let f = IsotropicFrame::random(&mut g, m);
            ensure!(f.identities_hold(), "random frame {i} fails in m={m}");
        }
    }
    Ok(format!("generator relations m=3..6, {checked} product checks, 63 frames"))
}

fn criterion_2() -> Outcome {
    let mut g = rng(2);
    for m in MS {
        for d in 0..=5 {
            let p = random::homogeneous_poly(&mut g, m, "x", d, 4, false);
            let lhs = p.dirac_left("x").unwrap().dirac_left("x").unwrap();
            ensure!(lhs == -&p.laplacian("x").unwrap(), "∂² ≠ −Δ, m={m} degree {d}");
        }
        for frame in [IsotropicFrame::canonical(m), IsotropicFrame::random(&mut g, m)] {
            for k in 0..=6u32 {
                for l in 0..=(6 - k) {
                    let f = basis_f(&frame, k, l, "z");
                    let mut lap = f.clone();
                    for j in 0..=k.min(l) + 1 {
                        if j > 0 {
                            lap = lap.laplacian("z").unwrap();
                        }
                        let expect = if j > k.min(l) {
                            PolyMV::zero(m, &["z"])
                        } else {
                            let c = qi(-4).pow(j as i32) * hua_radon::special::factorial_q(k as u64)
                                / hua_radon::special::factorial_q((k - j) as u64)
                                * hua_radon::special::factorial_q(l as u64)
                                / hua_radon::special::factorial_q((l - j) as u64);
                            basis_f(&frame, k - j, l - j, "z").scale(&r(c))
                        };
                        ensure!(lap == expect, "iterated Laplacian j={j} k={k} ℓ={l} m={m}");
                    }
                }
            }
        }
        let z = PolyMV::vector_variable("z", m);
        for t in 0..=5usize {
            for a in 0..=t {
                let mm = random_monogenic(&mut g, m, t - a, "z");
                let f = &z.pow(a as u32) * &mm;
                ensure!(f.euler("z").unwrap() == f.scale(&s(t as i64)), "Euler eigenvalue t={t} a={a}");
                let n = (a / 2) as i64;
                let ev = if a % 2 == 0 { 2 * n - t as i64 } else { t as i64 - 2 * n + m as i64 - 2 };
                ensure!(f.gamma_op("z").unwrap() == f.scale(&s(ev)), "Gamma eigenvalue t={t} a={a} m={m}");
            }
        }
    }
    Ok("∂²=−Δ, iterated Laplacian for k+ℓ ≤ 6, Euler/Gamma on z^aM for t ≤ 5".into())
}

fn criterion_3() -> Outcome {
    let mut g = rng(3);
    let mut count = 0;
    for m in MS {
        for d in 0..=6 {
            let p = random::homogeneous_poly(&mut g, m, "x", d, 3, false);
            let ht = harmonic_fischer(&p, "x").map_err(|e| e.to_string())?;
            ensure!(ht.recombine(&p).unwrap() == p, "harmonic tower does not recombine, m={m} d={d}");
            for (_, h) in &ht.components {
                ensure!(h.laplacian("x").unwrap().is_zero(), "non-harmonic component, m={m} d={d}");
                let (mk, mk1) = harmonic_to_monogenic(h, "x").map_err(|e| e.to_string())?;
                ensure!(mk.dirac_left("x").unwrap().is_zero(), "M_k not monogenic");
                ensure!(mk1.dirac_left("x").unwrap().is_zero(), "M_(k−1) not monogenic");
                let x = PolyMV::vector_variable("x", m);
                ensure!(&mk + &(&x * &mk1) == *h, "split does not recombine");
            }
            let mt = monogenic_fischer(&p, "x").map_err(|e| e.to_string())?;
            ensure!(mt.recombine(&p).unwrap() == p, "monogenic tower does not recombine, m={m} d={d}");
            for c in &mt.components {
                ensure!(c.m.dirac_left("x").unwrap().is_zero(), "tower component not monogenic");
            }
            count += 1;
        }
    }
    Ok(format!("{count} random polynomials of degree ≤ 6"))
}

fn criterion_4() -> Outcome {
    let mut g = rng(4);
    for m in MS {
        for k in 0..=6 {
            let kk = zonal_harmonic(m, k).body;
            ensure!(kk.laplacian("x").unwrap().is_zero() && kk.laplacian("y").unwrap().is_zero(), "K not harmonic");
            let c = zonal_monogenic(m, k).body;
            ensure!(c.dirac_left("x").unwrap().is_zero(), "𝒞 not left monogenic in x, m={m} k={k}");
            ensure!(c.dirac_right("y").unwrap().is_zero(), "𝒞 not right monogenic in y, m={m} k={k}");
        }
        for k in 0..=5 {
            ensure!(harmonic_monogenic_relation_check(m, k), "K/𝒞 relation fails m={m} k={k}");
        }
        // reproducing on the sphere and the Lie sphere against spanning families
        for k in 0..=4usize {
            let p = random::homogeneous_poly(&mut g, m, "w", k as u32, 4, false);
            let h = hua_radon::fischer::proj_harmonic(&p, "w", 0).unwrap();
            let mono = random_monogenic(&mut g, m, k, "w");
            for j in 0..=4usize {
                let kj = zonal_harmonic(m, j).body.rename(&["x", "w"]);
                let cj = zonal_monogenic(m, j).body.rename(&["x", "w"]);
                let he = h.embed(&["x", "w"]).unwrap();
                let me = mono.embed(&["x", "w"]).unwrap();
                let expect_h = if j == k { h.rename(&["x"]) } else { PolyMV::zero(m, &["x"]) };
                let expect_m = if j == k { mono.rename(&["x"]) } else { PolyMV::zero(m, &["x"]) };
                let sh = sphere_integrate_var(&(&kj * &he), "w").unwrap();
                ensure!(sh == expect_h, "sphere reproducing for K fails m={m} j={j} k={k}");
                let sm = sphere_integrate_var(&(&cj * &me), "w").unwrap();
                ensure!(sm == expect_m, "sphere reproducing for 𝒞 fails m={m} j={j} k={k}");
                let lh = lie_sphere_integral(&kj, "w", &h, Exec::Sequential).map_err(|e| e.to_string())?;
                ensure!(lh == expect_h, "Lie-sphere reproducing for K fails m={m} j={j} k={k}");
                let lm = lie_sphere_integral(&cj, "w", &mono, Exec::Sequential).map_err(|e| e.to_string())?;
                ensure!(lm == expect_m, "Lie-sphere reproducing for 𝒞 fails m={m} j={j} k={k}");
            }
        }
    }
    for (i, m) in [3usize, 3, 4, 4, 5].into_iter().enumerate() {
        let fs: Vec<Multivector> = (0..2 + 2 * (i % 2))
            .map(|_| Multivector::vector(m, &random::rational_unit_vector(&mut g, m)))
            .collect();
        let spin = SpinElement::new(fs).map_err(|e| e.to_string())?;
        let rot = spin.inverse_rotation_matrix();
        for k in 0..=3 {
            for body in [zonal_harmonic(m, k).body, zonal_monogenic(m, k).body] {
                let moved = body.linear_substitute("x", &rot).unwrap().linear_substitute("y", &rot).unwrap();
                ensure!(moved.left_mul(spin.sigma()).right_mul(spin.sigma_bar()) == body, "spin invariance fails m={m} k={k}");
            }
        }
    }
    Ok("kernels k ≤ 6, relation k ≤ 5, reproducing j,k ≤ 4, 5 spin elements".into())
}

fn criterion_5() -> Outcome {
    for m in 3..=6 {
        let mut g = rng(50 + m as u64);
        let omegas = [unit(m, 0), random::rational_unit_vector(&mut g, m)];
        for omega in omegas {
            for j in 0..=4u32 {
                let f = LinearFormPoly::tau(1, 0).pow(j).mul(&LinearFormPoly::tau_dagger(1, 0).pow(j));
                let v = StiefelEngine::new(m, 1).stiefel_average(&f).realize(m, &[], &[Symbol::Fixed(omega.clone())]).unwrap();
                ensure!(v == PolyMV::scalar(m, &[], r(frame_moment(j as usize, m))), "frame moment j={j} m={m}");
            }
        }
    }
    // statistical cross-checks
    let samples = 100_000;
    let exec = Exec::default();
    let mut worst: f64 = 0.0;
    let m = 4;
    let vars = ["t", "s"];
    let om = Multivector::vector(m, &unit(m, 0));
    let tw = PolyMV::scalar_pairing(&vars, "t", &om).unwrap();
    let sw = PolyMV::scalar_pairing(&vars, "s", &om).unwrap();
    let i = ExactScalar::i();
    let f2 = (&(&tw + &sw.scale(&i)) * &(&(-&tw) + &sw.scale(&i))).pow(2);
    let est = mc_stiefel_average(&f2, &[], samples, 42, exec).map_err(|e| e.to_string())?;
    let z = est.z_score(&Multivector::scalar(m, ExactScalar::frac(1, 3)));
    ensure!(z < 5.0, "frame moment j=2 MC z-score {z}");
    worst = worst.max(z);
    let mut g = rng(5);
    for trial in 0..3 {
        for m in [3usize, 4] {
            let a = random::poly(&mut g, m, "t", 2, 3).embed(&vars).unwrap();
            let b = random::poly(&mut g, m, "s", 2, 3).embed(&vars).unwrap();
            let c = random::homogeneous_poly(&mut g, m, "s", 4, 2, true).embed(&vars).unwrap();
            let f = &(&a * &b) + &c;
            let exact = stiefel_average(&f).map_err(|e| e.to_string())?;
            let exact = exact.terms().values().next().cloned().unwrap_or_else(|| Multivector::zero(m));
            let est = mc_stiefel_average(&f, &[], samples, 100 + trial, exec).map_err(|e| e.to_string())?;
            let z = est.z_score(&exact);
            ensure!(z < 5.0, "random Stiefel integrand MC z-score {z} (m={m})");
            worst = worst.max(z);
            let p = random::poly(&mut g, m, "w", 4, 4);
            let exact = sphere_integral(&p).map_err(|e| e.to_string())?;
            let est = mc_sphere_integral(&p, "w", &[], samples, 200 + trial, exec).map_err(|e| e.to_string())?;
            let z = est.z_score(&exact);
            ensure!(z < 5.0, "sphere MC z-score {z} (m={m})");
            worst = worst.max(z);
            let frame = IsotropicFrame::canonical(m);
            let fb = basis_f(&frame, 1, 1, "w");
            let kern = hua_kernel(&frame, 2).terms[2].clone();
            let fixed = [("z", random::real_vector(&mut g, m).iter().map(|x| x.to_complex()).collect::<Vec<Complex64>>())];
            let exact = lie_sphere_integral(&kern, "w", &fb, Exec::Sequential).map_err(|e| e.to_string())?;
            let assign: Vec<(&str, Vec<ExactScalar>)> =
                vec![("z", fixed[0].1.iter().map(|c| ExactScalar::real(BigRational::from_float(c.re).unwrap())).collect())];
            let exact = exact.evaluate_exact(&assign).map_err(|e| e.to_string())?;
            let est = mc_lie_sphere_integral(&kern, "w", &fb, &fixed, samples, 300 + trial, exec).map_err(|e| e.to_string())?;
            let z = est.z_score(&exact);
            ensure!(z < 5.0, "Lie-sphere MC z-score {z} (m={m})");
            worst = worst.max(z);
        }
    }
    Ok(format!("frame moments j ≤ 4, m ≤ 6 exact; worst MC |z| = {worst:.2} at {samples} samples"))
}

fn pairing_identity(m: usize, k: usize, l: usize) -> Result<(PairingPoly, PairingPoly), String> {
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
        let th = theta_coefficient(j, k, l, m).map_err(|e| e.to_string())?;
        rhs = rhs.add(&r2.pow(j as u32).mul(&zonal_harmonic_pairing(m, k + l - 2 * j)).scale(&r(th)));
    }
    Ok((lhs, rhs))
}

fn criterion_6() -> Outcome {
    let symbols = [Symbol::Var("x".into()), Symbol::Var("y".into())];
    let mut cases = 0;
    for m in MS {
        for k in 0..=6 {
            for l in 0..=(6 - k) {
                let (lhs, rhs) = pairing_identity(m, k, l)?;
                ensure!(lhs == rhs, "L_(k,ℓ) identity fails in pairing form, k={k} ℓ={l} m={m}");
                if k + l <= 4 {
                    let a = lhs.realize(m, &["x", "y"], &symbols).unwrap();
                    let b = rhs.realize(m, &["x", "y"], &symbols).unwrap();
                    ensure!(a == b, "L_(k,ℓ) identity fails in coordinates, k={k} ℓ={l} m={m}");
                }
                cases += 1;
                if l <= k {
                    for n in 0..=l {
                        let (a, b) = pfaff_saalschutz_sides(k, l, n, m).map_err(|e| e.to_string())?;
                        ensure!(a == b, "Pfaff–Saalschütz fails k={k} ℓ={l} n={n} m={m}");
                    }
                }
            }
        }
    }
    // the coordinate Stiefel integrator on the smallest cases
    let m = 3;
    let vars = ["x", "y", "t", "s"];
    let tv = tau(m, &vars).unwrap();
    let tdv = tau_dagger(m, &vars).unwrap();
    let pair = |v: &str, p: &PolyMV| {
        let x = PolyMV::vector_in(m, &vars, v).unwrap();
        (&(&x * p) + &(p * &x)).scale(&ExactScalar::frac(-1, 2))
    };
    for (k, l) in [(1u32, 0u32), (1, 1), (0, 2)] {
        let f = &(&pair("x", &tv).pow(k) * &pair("x", &tdv).pow(l)) * &(&pair("y", &tv).pow(l) * &pair("y", &tdv).pow(k));
        let a = stiefel_average(&f).map_err(|e| e.to_string())?;
        let (_, rhs) = pairing_identity(m, k as usize, l as usize)?;
        ensure!(a == rhs.realize(m, &["x", "y"], &symbols).unwrap(), "coordinate route disagrees k={k} ℓ={l}");
    }
    Ok(format!("{cases} (k, ℓ, m) cases with k+ℓ ≤ 6, Pfaff–Saalschütz grid"))
}

fn criterion_7() -> Outcome {
    let symbols = [Symbol::Var("x".into()), Symbol::Var("y".into())];
    for m in [3usize, 4] {
        let x = PolyMV::vector_in(m, &["x", "y"], "x").unwrap();
        let y = PolyMV::vector_in(m, &["x", "y"], "y").unwrap();
        for k in 0..=2usize {
            let kk = k as u32;
            let f = LinearFormPoly::tau(2, 0)
                .pow(kk)
                .mul(&LinearFormPoly::tau_dagger(2, 0).pow(kk))
                .mul(&LinearFormPoly::tau(2, 1).pow(kk))
                .mul(&LinearFormPoly::tau_dagger(2, 1).pow(kk));
            let lhs = frame_average(m, &f, &symbols, &["x", "y"], FrameFactor::TauDaggerTau);
            let mut rhs = PolyMV::zero(m, &["x", "y"]);
            for j in 0..=2 * k {
                let v = vartheta_coefficient(j, k, m).map_err(|e| e.to_string())?;
                let c = zonal_monogenic(m, 2 * k - j).body;
                rhs = &rhs + &(&(&x.pow(j as u32) * &c) * &y.pow(j as u32)).scale(&r(v));
            }
            ensure!(lhs == rhs, "ϑ identity fails k={k} m={m}");
        }
    }
    Ok("k ≤ 2, m ∈ {3,4}".into())
}

fn criterion_8() -> Outcome {
    let exec = Exec::default();
    let mut findings = Vec::new();
    let mut cases = 0;
    for m in MS {
        let op = DualRadonOperator::new(m, KernelKind::Hua);
        let mut g = rng(80 + m as u64);
        let z = PolyMV::vector_variable("z", m);
        for t in 0..=6usize {
            for n in 0..=t / 2 {
                let y = random_y(&mut g, m);
                let h = zonal_harmonic(m, t - 2 * n).at_y(&y).rename(&["z"]);
                let f = &z.pow(2 * n as u32) * &h;
                let out = op.apply(&f, None, exec).map_err(|e| e.to_string())?;
                let a = phi_hypergeometric(t, n, m).map_err(|e| e.to_string())?;
                let b = phi_xi_sum(t, n, m).map_err(|e| e.to_string())?;
                let c = phi_theta_sum(t, n, m).map_err(|e| e.to_string())?;
                let pipeline = out.scalar_ratio(&f);
                ensure!(pipeline.is_some(), "output is not a multiple of the input, t={t} n={n} m={m}");
                let pipeline = pipeline.unwrap();
                ensure!(a == b, "₄F₃ and ξ-sum routes differ t={t} n={n} m={m}");
                if r(a.clone()) != pipeline || a != c {
                    findings.push(format!("t={t} n={n} m={m}: pipeline {pipeline}, ₄F₃ {a}, θ-sum {c}"));
                }
                cases += 1;
            }
        }
    }
    ensure!(findings.is_empty(), "closed forms disagree with the pipeline: {}", findings.join("; "));
    Ok(format!("{cases} cases 0 ≤ 2n ≤ t ≤ 6, m ∈ {{3,4,5}}; ₄F₃ = ξ-sum = θ-sum = pipeline"))
}

fn criterion_9() -> Outcome {
    let exec = Exec::default();
    let mut cases = 0;
    for m in MS {
        let pol = DualRadonOperator::new(m, KernelKind::Polarized);
        let hua = DualRadonOperator::new(m, KernelKind::Hua);
        let mut g = rng(90 + m as u64);
        let z = PolyMV::vector_variable("z", m);
        for t in 0..=5usize {
            for a in 0..=t {
                let mm = random_monogenic(&mut g, m, t - a, "z");
                let f = &z.pow(a as u32) * &mm;
                let out = pol.apply(&f, None, exec).map_err(|e| e.to_string())?;
                let rho = rho_coefficient(t, a, m).map_err(|e| e.to_string())?;
                let from_n = rho_with_lower_limit(t, a, m, RhoLowerLimit::N).map_err(|e| e.to_string())?;
                let from_0 = rho_with_lower_limit(t, a, m, RhoLowerLimit::Zero).map_err(|e| e.to_string())?;
                ensure!(out == f.scale(&r(rho.clone())), "polarized pipeline ≠ ρ·input, t={t} a={a} m={m}");
                ensure!(from_n == from_0, "printed ρ branches differ t={t} a={a} m={m}");
                cases += 1;
            }
        }
        for trial in 0..3 {
            let nm = 1 + trial % 3;
            let ms: Vec<PolyMV> = (0..nm).map(|i| random_monogenic(&mut g, m, (i * 2 + trial) % 5, "z")).collect();
            let ns: Vec<PolyMV> = (0..2).map(|i| random_monogenic(&mut g, m, (i * 3 + trial) % 5, "z")).collect();
            let form = almansi_assemble(m, "z", &ms, &ns).map_err(|e| e.to_string())?;
            let f = &form.value;
            let gh = hua.apply(f, None, exec).map_err(|e| e.to_string())?;
            ensure!(invert_hua(&gh).map_err(|e| e.to_string())? == *f, "Hua reconstruction fails m={m} trial {trial}");
            let gp = pol.apply(f, None, exec).map_err(|e| e.to_string())?;
            ensure!(
                invert_polarized(&gp).map_err(|e| e.to_string())? == *f,
                "polarized reconstruction fails m={m} trial {trial}"
            );
        }
    }
    Ok(format!("{cases} ρ cases t ≤ 5; 9 Almansi inputs reconstructed by both inversions"))
}

fn criterion_10() -> Outcome {
    let exec = Exec::default();
    let mut total = 0;
    for m in MS {
        let mut g = rng(100 + m as u64);
        let frames = [IsotropicFrame::canonical(m), IsotropicFrame::random(&mut g, m)];
        let kernels: Vec<_> = frames.iter().map(|f| hua_kernel(f, 4)).collect();
        for d in 0..=4u32 {
            let inputs: Vec<PolyMV> = (0..50).map(|_| random::poly(&mut g, m, "z", d, 4)).collect();
            let results = exec.map_range(inputs.len(), |i| {
                let fi = i % 2;
                let a = kernels[fi].apply(&inputs[i], Exec::Sequential)?;
                let b = hua_radon_via_basis(&frames[fi], &inputs[i], Exec::Sequential)?;
                Ok::<bool, hua_radon::transforms::TransformError>(a == b)
            });
            for (i, res) in results.into_iter().enumerate() {
                ensure!(res.map_err(|e| e.to_string())?, "routes differ on input {i}, m={m} degree {d}");
                total += 1;
            }
        }
    }
    Ok(format!("{total} random inputs"))
}

fn criterion_11() -> Outcome {
    for m in MS {
        let one = PolyMV::one(m, &["z"]);
        let phi = phi_hypergeometric(0, 0, m).map_err(|e| e.to_string())?;
        let piped = DualRadonOperator::new(m, KernelKind::Hua).apply(&one, None, Exec::Sequential).map_err(|e| e.to_string())?;
        ensure!(phi == qi(1) && piped == one, "φ₀,₀ ≠ 1 (m={m})");
        let rho = rho_coefficient(0, 0, m).map_err(|e| e.to_string())?;
        let piped = DualRadonOperator::new(m, KernelKind::Polarized)
            .apply(&one, None, Exec::Sequential)
            .map_err(|e| e.to_string())?;
        ensure!(rho == q(1, 2) && piped == one.scale(&ExactScalar::frac(1, 2)), "ρ₀,₀ ≠ 1/2 (m={m})");

        let th = theta_coefficient(0, 1, 0, m).map_err(|e| e.to_string())?;
        let vars = ["x", "y", "t", "s"];
        let pair = |v: &str, p: &PolyMV| {
            let x = PolyMV::vector_in(m, &vars, v).unwrap();
            (&(&x * p) + &(p * &x)).scale(&ExactScalar::frac(-1, 2))
        };
        let f = &pair("x", &tau(m, &vars).unwrap()) * &pair("y", &tau_dagger(m, &vars).unwrap());
        let avg = stiefel_average(&f).map_err(|e| e.to_string())?;
        let ratio = avg.scalar_ratio(&zonal_harmonic(m, 1).body);
        let expect = q(-2, (m * m) as i64);
        ensure!(th == expect && ratio == Some(r(expect)), "θ₀,₁,₀ ≠ −2/m² (m={m})");

        let w = Multivector::vector(m, &unit(m, 0));
        let v2 = ["t", "s"];
        let tw = PolyMV::scalar_pairing(&v2, "t", &w).unwrap();
        let sw = PolyMV::scalar_pairing(&v2, "s", &w).unwrap();
        let i = ExactScalar::i();
        let coord = stiefel_average(&(&(&tw + &sw.scale(&i)) * &(&(-&tw) + &sw.scale(&i)))).map_err(|e| e.to_string())?;
        let wick = StiefelEngine::new(m, 1)
            .stiefel_average(&LinearFormPoly::tau(1, 0).mul(&LinearFormPoly::tau_dagger(1, 0)))
            .realize(m, &[], &[Symbol::Fixed(unit(m, 0))])
            .unwrap();
        let expect = PolyMV::scalar(m, &[], ExactScalar::frac(-2, m as i64));
        ensure!(coord == expect && wick == expect && frame_moment(1, m) == q(-2, m as i64), "frame moment j=1 ≠ −2/m (m={m})");
    }
    Ok("φ₀,₀ = 1, ρ₀,₀ = 1/2, θ₀,₁,₀ = −2/m², frame moment j=1 = −2/m for m ∈ {3,4,5}".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("algebra axioms and frame identities", criterion_1),
        ("operator identities", criterion_2),
        ("Fischer decompositions and projection", criterion_3),
        ("zonal kernels", criterion_4),
        ("Stiefel integrator and Monte-Carlo", criterion_5),
        ("θ coefficients of the frame average", criterion_6),
        ("ϑ coefficients with the τ†τ factor", criterion_7),
        ("dual Hua-Radon eigenvalues φ", criterion_8),
        ("dual polarized eigenvalues ρ and inversions", criterion_9),
        ("projection route equivalence", criterion_10),
        ("known scalars by two routes", criterion_11),
    ];
    let mut failed = 0;
    let start = Instant::now();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let res = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t0.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("[PASS] criterion {:>2}: {name} ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {:>2}: {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1}s", criteria.len() - failed, criteria.len(), start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

