use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::random;

fn s(n: i64) -> ExactScalar {
    ExactScalar::from_int(n)
}

#[test]
fn vector_variable_squares_to_minus_norm() {
    let z = PolyMV::vector_variable("z", 3);
    assert_eq!(z.len(), 3);
    let zz = &z * &z;
    let norm = PolyMV::pairing(3, &["z"], "z", "z").unwrap();
    assert_eq!(zz, -&norm);
    assert!(zz.is_scalar_valued());
}

#[test]
fn scalar_pairing_examples() {
    let e1 = Multivector::e(3, 1);
    let p = PolyMV::scalar_pairing(&["z"], "z", &e1).unwrap();
    assert_eq!(p, PolyMV::coordinate(3, &["z"], "z", 1).unwrap());
    let tau = &Multivector::e(3, 1) + &Multivector::e(3, 2).scale(&ExactScalar::i());
    let p = PolyMV::scalar_pairing(&["z"], "z", &tau).unwrap();
    let z1 = PolyMV::coordinate(3, &["z"], "z", 1).unwrap();
    let z2 = PolyMV::coordinate(3, &["z"], "z", 2).unwrap();
    assert_eq!(p, &z1 + &z2.scale(&ExactScalar::i()));
    let bivec = Multivector::blade(3, &[1, 2], ExactScalar::one()).unwrap();
    assert!(matches!(PolyMV::scalar_pairing(&["z"], "z", &bivec), Err(PolyError::NotAVector)));
}

#[test]
fn dirac_of_vector_variable_is_minus_m() {
    for m in 3..=6 {
        let z = PolyMV::vector_variable("z", m);
        assert_eq!(z.dirac_left("z").unwrap(), PolyMV::scalar(m, &["z"], s(-(m as i64))));
        assert_eq!(z.dirac_right("z").unwrap(), PolyMV::scalar(m, &["z"], s(-(m as i64))));
    }
}

#[test]
fn dirac_of_linear_form_is_its_vector() {
    let c = Multivector::vector(4, &[s(1), ExactScalar::gaussian(0, 2), s(-3), ExactScalar::frac(1, 2)]);
    let p = PolyMV::scalar_pairing(&["z"], "z", &c).unwrap();
    assert_eq!(p.dirac_left("z").unwrap(), PolyMV::constant(&["z"], c));
}

#[test]
fn unknown_variable_is_an_error() {
    let z = PolyMV::vector_variable("z", 3);
    assert!(matches!(z.laplacian("w"), Err(PolyError::UnknownVariable(_))));
    assert!(matches!(z.dirac_left("w"), Err(PolyError::UnknownVariable(_))));
}

#[test]
fn gamma_annihilates_radial_powers() {
    let z = PolyMV::vector_variable("z", 4);
    let r2 = -&(&z * &z);
    for n in 0..4 {
        assert!(r2.pow(n).gamma_op("z").unwrap().is_zero());
    }
}

#[test]
fn wedge_examples() {
    let e1 = PolyMV::constant(&["z"], Multivector::e(3, 1));
    let e2 = PolyMV::constant(&["z"], Multivector::e(3, 2));
    let e12 = PolyMV::constant(&["z"], Multivector::blade(3, &[1, 2], ExactScalar::one()).unwrap());
    assert_eq!(e1.wedge(&e2).unwrap(), e12);
    assert!(e1.wedge(&e1).unwrap().is_zero());
    assert!(matches!(e12.wedge(&e1), Err(PolyError::NotAVector)));
}

#[test]
fn uv_splits_into_pairing_and_wedge() {
    let vars = ["x", "y"];
    let x = PolyMV::vector_in(4, &vars, "x").unwrap();
    let y = PolyMV::vector_in(4, &vars, "y").unwrap();
    let xy = PolyMV::pairing(4, &vars, "x", "y").unwrap();
    assert_eq!(&x * &y, &(-&xy) + &x.wedge(&y).unwrap());
}

#[test]
fn evaluate_examples() {
    let z1 = PolyMV::coordinate(3, &["z"], "z", 1).unwrap();
    let v = z1.evaluate(&[("z", vec![2.0.into(), 0.0.into(), 0.0.into()])]).unwrap();
    assert_eq!(v.get(Blade::SCALAR), Complex64::new(2.0, 0.0));
    let z = PolyMV::vector_variable("z", 3);
    let a = 0.3f64;
    let unit = vec![a.cos().into(), (a.sin() * 0.6).into(), (a.sin() * 0.8).into()];
    let v = (&z * &z).evaluate(&[("z", unit)]).unwrap();
    assert!((v.get(Blade::SCALAR) - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
    assert!(matches!(z.evaluate(&[]), Err(PolyError::MissingAssignment(_))));
}

#[test]
fn euler_and_gamma_eigenvalues_on_fischer_pieces() {
    let m = 3;
    let z = PolyMV::vector_variable("z", m);
    // z1 - e12 z2 is left monogenic
    let z1 = PolyMV::coordinate(m, &["z"], "z", 1).unwrap();
    let z2 = PolyMV::coordinate(m, &["z"], "z", 2).unwrap();
    let e12 = Multivector::blade(m, &[1, 2], ExactScalar::one()).unwrap();
    let mono = &z1 - &z2.left_mul(&e12);
    assert!(mono.dirac_left("z").unwrap().is_zero());
    for j in 0..4u32 {
        let f = &z.pow(j) * &mono;
        let t = (j + 1) as i64;
        assert_eq!(f.euler("z").unwrap(), f.scale(&s(t)));
        let expect = if j % 2 == 0 { 2 * (j as i64 / 2) - t } else { t - 2 * (j as i64 / 2) + m as i64 - 2 };
        assert_eq!(f.gamma_op("z").unwrap(), f.scale(&s(expect)), "j={j}");
    }
}

#[test]
fn text_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let p = random::poly(&mut rng, 3, "z", 3, 3).embed(&["z", "w"]).unwrap();
    let q = &p * &PolyMV::vector_in(3, &["z", "w"], "w").unwrap();
    let txt = format_poly(&q);
    assert_eq!(parse_poly(&txt).unwrap(), q);
    assert!(parse_poly("poly dim=3 vars=z\nz; 1 0; []; 1/1; 0/1").is_err());
}

#[test]
fn embed_restrict_and_substitute() {
    let p = PolyMV::vector_variable("z", 3);
    let e = p.embed(&["w", "z"]).unwrap();
    assert_eq!(e.restrict(&["z"]).unwrap(), p);
    let val = e.evaluate_exact(&[("z", vec![s(1), s(2), s(3)]), ("w", vec![s(0); 3])]).unwrap();
    assert_eq!(val, Multivector::vector(3, &[s(1), s(2), s(3)]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dirac_squared_is_minus_laplacian(seed in any::<u64>(), m in 3usize..=5, deg in 0u32..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random::homogeneous_poly(&mut rng, m, "z", deg, 4, false);
        let dd = p.dirac_left("z").unwrap().dirac_left("z").unwrap();
        prop_assert_eq!(dd, -&p.laplacian("z").unwrap());
    }

    #[test]
    fn euler_measures_degree(seed in any::<u64>(), m in 3usize..=5, deg in 0u32..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random::homogeneous_poly(&mut rng, m, "z", deg, 4, false);
        prop_assert_eq!(p.euler("z").unwrap(), p.scale(&s(deg as i64)));
    }

    #[test]
    fn laplacian_leibniz(seed in any::<u64>(), m in 3usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random::homogeneous_poly(&mut rng, m, "z", 2, 3, true);
        let g = random::homogeneous_poly(&mut rng, m, "z", 3, 3, true);
        let lhs = (&f * &g).laplacian("z").unwrap();
        let mut cross = PolyMV::zero(m, &["z"]);
        for j in 1..=m {
            cross = &cross + &(&f.partial("z", j).unwrap() * &g.partial("z", j).unwrap());
        }
        let rhs = &(&(&f.laplacian("z").unwrap() * &g) + &(&f * &g.laplacian("z").unwrap())) + &cross.scale(&s(2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn float_evaluation_matches_exact(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random::poly(&mut rng, 3, "z", 3, 3);
        let pt = random::real_vector(&mut rng, 3);
        let exact = p.evaluate_exact(&[("z", pt.clone())]).unwrap().to_float();
        let fl: Vec<Complex64> = pt.iter().map(ExactScalar::to_complex).collect();
        let approx = p.evaluate(&[("z", fl)]).unwrap();
        prop_assert!(exact.max_abs_diff(&approx) < 1e-9);
    }
}
