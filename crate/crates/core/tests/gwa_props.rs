use qsmooth_core::freealg::confluence_check;
use qsmooth_core::gwa::{
    gwa_match, gwa_presentation, nakayama_check, recheck_smoothness, smoothness_check, GwaSpec, Smoothness,
};
use qsmooth_core::{Parameter, Scalar, UniPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(k: i64) -> Scalar {
    Scalar::t_pow(k)
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    &Scalar::from_ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2)) * &q(rng.gen_range(-2..=2))
}

fn nonzero_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = random_scalar(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> UniPoly {
    loop {
        let deg = rng.gen_range(0..=max_deg);
        let p = UniPoly::from_coeffs((0..=deg).map(|_| random_scalar(rng)).collect());
        if !p.is_zero() {
            return p;
        }
    }
}

fn linear(root: &Scalar) -> UniPoly {
    UniPoly::from_coeffs(vec![-root, Scalar::one()])
}

fn power(f: &UniPoly, n: usize) -> UniPoly {
    (0..n).fold(UniPoly::one(), |acc, _| &acc * f)
}

#[test]
fn random_specs_give_confluent_presentations() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..50 {
        let spec = GwaSpec::new(nonzero_scalar(&mut rng), random_scalar(&mut rng), random_poly(&mut rng, 5)).unwrap();
        let pres = gwa_presentation(&spec, Parameter::real("q")).unwrap();
        let pairs = confluence_check(&pres).unwrap();
        assert!(pairs.is_empty(), "κ={:?} χ={:?} p={:?}", spec.kappa, spec.chi, spec.p);
        let report = gwa_match(&pres, "a", "xp").unwrap();
        assert_eq!(report.first_match().and_then(|c| c.spec()), Some(spec));
    }
}

#[test]
fn twist_and_untwist_are_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..100 {
        let spec = GwaSpec::new(nonzero_scalar(&mut rng), random_scalar(&mut rng), UniPoly::one()).unwrap();
        let f = random_poly(&mut rng, 4);
        assert_eq!(spec.pi_inv(&spec.pi(&f)).unwrap(), f);
    }
}

#[test]
fn verdict_follows_root_multiplicities() {
    // roots q^i for distinct i, so multiplicities are known exactly
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..60 {
        let n_roots = rng.gen_range(1..=3);
        let mut exps: Vec<i64> = Vec::new();
        while exps.len() < n_roots {
            let e = rng.gen_range(-3..=3);
            if !exps.contains(&e) {
                exps.push(e);
            }
        }
        let mults: Vec<usize> = (0..n_roots).map(|_| rng.gen_range(1..=3)).collect();
        let mut p = UniPoly::constant(nonzero_scalar(&mut rng));
        let mut expected_gcd = UniPoly::one();
        for (e, m) in exps.iter().zip(&mults) {
            p = &p * &power(&linear(&q(*e)), *m);
            expected_gcd = &expected_gcd * &power(&linear(&q(*e)), m - 1);
        }
        let spec = GwaSpec::new(q(2), Scalar::zero(), p).unwrap();
        let report = smoothness_check(&spec).unwrap();
        let repeated = mults.iter().any(|&m| m > 1);
        assert_eq!(report.verdict == Smoothness::NotSmooth, repeated, "roots {exps:?} mults {mults:?}");
        assert_eq!(report.gcd, expected_gcd);
        assert!(recheck_smoothness(&spec, &report).unwrap());
    }
}

#[test]
fn square_free_part_by_repeated_stripping() {
    // dividing p by gcd(p, p') leaves a square-free polynomial
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..40 {
        let f = random_poly(&mut rng, 2);
        let g = random_poly(&mut rng, 2);
        let p = &(&f * &f) * &g;
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        let spec = GwaSpec::new(q(2), Scalar::zero(), p.clone()).unwrap();
        let report = smoothness_check(&spec).unwrap();
        let (core, rem) = p.div_rem(&report.gcd).unwrap();
        assert!(rem.is_zero());
        let stripped = GwaSpec::new(q(2), Scalar::zero(), core).unwrap();
        assert_eq!(smoothness_check(&stripped).unwrap().verdict, Smoothness::SmoothDim2);
        if f.degree().unwrap_or(0) > 0 {
            assert_eq!(report.verdict, Smoothness::NotSmooth);
        }
    }
}

#[test]
fn tampered_witness_is_rejected() {
    let p = &power(&linear(&Scalar::zero()), 2) * &linear(&q(2));
    let spec = GwaSpec::new(q(2), Scalar::zero(), p).unwrap();
    let mut report = smoothness_check(&spec).unwrap();
    assert!(recheck_smoothness(&spec, &report).unwrap());
    report.verdict = Smoothness::SmoothDim2;
    assert!(!recheck_smoothness(&spec, &report).unwrap());
    report = smoothness_check(&spec).unwrap();
    report.gcd = UniPoly::one();
    assert!(!recheck_smoothness(&spec, &report).unwrap());
}

#[test]
fn nakayama_maps_are_mutually_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    for _ in 0..20 {
        let spec = GwaSpec::new(nonzero_scalar(&mut rng), Scalar::zero(), random_poly(&mut rng, 3)).unwrap();
        let pres = gwa_presentation(&spec, Parameter::real("q")).unwrap();
        let report = nakayama_check(&spec, &pres, "xp", "xm").unwrap();
        assert!(report.composite_is_identity);
        // scaling x± by c^{±1} fixes every relation when χ = 0
        assert!(report.direct.is_ok() && report.inverse.is_ok());
    }
}
