use num_bigint::BigInt;
use num_rational::BigRational;
use qsmooth_core::catalog::{get_algebra, get_ansatz, get_grading, list_entries, Params};
use qsmooth_core::grading::{
    connection_matrix, connection_matrix_det, connection_power, determinant_closed_form, determinant_printed_form,
    involutive_decompose, solve_connection, tensor_mu, Grading, TensorElement,
};
use qsmooth_core::linalg::{solve, LinearSolution};
use qsmooth_core::{Element, GenId, Presentation, Scalar, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

fn random_word(rng: &mut ChaCha8Rng, p: &Presentation, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word((0..len).map(|_| rng.gen_range(0..p.gen_count()) as GenId).collect())
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    &Scalar::from_ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2)) * &Scalar::t_pow(rng.gen_range(-2..=2))
}

/// Every catalog grading at a few parameter values.
fn graded_algebras() -> Vec<(Presentation, Grading)> {
    let mut out = Vec::new();
    for e in list_entries() {
        let ls: &[u32] = if e.uses_l { &[1, 2, 3] } else { &[1] };
        let ks: &[u32] = if e.uses_k { &[0, 2] } else { &[1] };
        for &k in ks {
            for &l in ls {
                let params = Params::kl(k, l);
                for g in e.gradings {
                    let p = get_algebra(e.name, params).unwrap();
                    out.push((p, get_grading(e.name, g, params).unwrap()));
                }
            }
        }
    }
    out
}

#[test]
fn reduction_preserves_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, grading) in graded_algebras() {
        let Grading::Degree(g) = &grading else { continue };
        for _ in 0..150 {
            let first = random_word(&mut rng, &p, 5);
            let deg = g.word_degree(&first);
            let mut e = Element::term(random_scalar(&mut rng), first);
            for _ in 0..3 {
                let w = random_word(&mut rng, &p, 5);
                if g.word_degree(&w) == deg {
                    e.add_term(w, random_scalar(&mut rng));
                }
            }
            let n = p.normal_form(&e).unwrap();
            if !n.is_zero() {
                assert_eq!(g.element_degree(&n), Some(deg), "{}: {}", p.name, p.fmt_element(&n));
            }
        }
    }
}

#[test]
fn involutive_parts_recombine() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (p, grading) in graded_algebras() {
        let Grading::Involutive(s) = &grading else { continue };
        for _ in 0..100 {
            let e = Element::term(random_scalar(&mut rng), random_word(&mut rng, &p, 5));
            let (even, odd) = involutive_decompose(&p, s, &e).unwrap();
            assert_eq!(&even + &odd, p.normal_form(&e).unwrap());
            if !even.is_zero() {
                assert_eq!(s.parity(&p, &even).unwrap(), Some(0));
            }
            if !odd.is_zero() {
                assert_eq!(s.parity(&p, &odd).unwrap(), Some(1));
            }
            let twice = s.apply(&p, &s.apply(&p, &e).unwrap()).unwrap();
            assert_eq!(twice, p.normal_form(&e).unwrap());
        }
    }
}

/// `Σ c · NF(u·v)` computed term by term.
fn mu_by_hand(p: &Presentation, t: &TensorElement) -> Element {
    let mut acc = Element::zero();
    for (u, v, c) in t.terms() {
        acc = &acc + &p.nf_word(&u.concat(v)).unwrap().scale(c);
    }
    acc
}

#[test]
fn multiplication_map_matches_termwise_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (p, _) in graded_algebras() {
        for _ in 0..30 {
            let mut t = TensorElement::zero();
            for _ in 0..rng.gen_range(1..=4) {
                t.add_term(random_word(&mut rng, &p, 3), random_word(&mut rng, &p, 3), random_scalar(&mut rng));
            }
            assert_eq!(tensor_mu(&p, &t).unwrap(), mu_by_hand(&p, &t), "{}", p.name);
        }
    }
}

#[test]
fn strong_connection_powers() {
    let cases: &[(&str, &str, u32, usize)] = &[
        ("su2q", "Zl", 1, 4),
        ("su2q", "Zl", 2, 4),
        ("su2q", "Zl", 3, 4),
        ("sigma3", "Zl", 2, 4),
        ("sigma3", "Zl", 3, 3),
        ("s2u", "Z2", 1, 4),
        ("torus", "Z2", 1, 2),
    ];
    for &(name, g, l, n) in cases {
        let params = Params::l(l);
        let p = get_algebra(name, params).unwrap();
        let grading = get_grading(name, g, params).unwrap();
        let ansatz = get_ansatz(name, g, params).unwrap();
        let sol = solve_connection(&p, &grading, &ansatz).unwrap();
        assert_eq!(mu_by_hand(&p, &sol.omega), Element::one(), "{name} l={l}");
        let report = connection_power(&p, &grading, &sol.omega, n).unwrap();
        assert!(report.is_ok(), "{name} l={l}: {:?}", report.levels);
        assert_eq!(mu_by_hand(&p, &report.omega), Element::one(), "{name} l={l} n={n}");
    }
}

#[test]
fn connection_survives_specialisation() {
    let p = get_algebra("su2q", Params::l(3)).unwrap();
    let grading = get_grading("su2q", "Zl", Params::l(3)).unwrap();
    let sol = solve_connection(&p, &grading, &get_ansatz("su2q", "Zl", Params::l(3)).unwrap()).unwrap();
    let ps = p.specialize(&half()).unwrap();
    let mu = tensor_mu(&ps, &sol.omega.specialize(&half()).unwrap()).unwrap();
    assert_eq!(mu, Element::one());
}

/// Leibniz expansion over all permutations.
fn leibniz(m: &[Vec<Scalar>]) -> Scalar {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.len();
    let mut det = Scalar::zero();
    for p in perms(n) {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = Scalar::from_int(if inversions % 2 == 0 { 1 } else { -1 });
        for (row, &col) in p.iter().enumerate() {
            term = &term * &m[row][col];
        }
        det = &det + &term;
    }
    det
}

#[test]
fn determinant_matches_permutation_expansion() {
    for l in 1..=5 {
        let m = connection_matrix(l);
        let det = leibniz(&m);
        assert_eq!(connection_matrix_det(l), det, "l={l}");
        assert_eq!(determinant_closed_form(l), det, "l={l}");
        assert_eq!(determinant_printed_form(l) == det, l == 1, "l={l}");
    }
}

#[test]
fn determinant_at_one_half() {
    // l = 3: q^-4 (1 - q^2)(1 - q^4) at 1/2 is 16 · 3/4 · 15/16 = 45/4
    let v = determinant_closed_form(3).evaluate(&half()).unwrap();
    assert_eq!(v, BigRational::new(BigInt::from(45), BigInt::from(4)));
    let numeric: Vec<Vec<Scalar>> = connection_matrix(3)
        .iter()
        .map(|row| row.iter().map(|c| Scalar::from_rational(c.evaluate(&half()).unwrap())).collect())
        .collect();
    assert_eq!(leibniz(&numeric).as_rational(), Some(v));
}

#[test]
fn elimination_solves_random_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let a: Vec<Vec<Scalar>> = (0..n).map(|_| (0..n).map(|_| random_scalar(&mut rng)).collect()).collect();
        let x: Vec<Scalar> = (0..n).map(|_| random_scalar(&mut rng)).collect();
        let b: Vec<Scalar> =
            a.iter().map(|row| row.iter().zip(&x).fold(Scalar::zero(), |acc, (r, v)| &acc + &(r * v))).collect();
        let LinearSolution::Solved { x: got, free } = solve(a.clone(), b.clone()) else { panic!("consistent system") };
        for (row, rhs) in a.iter().zip(&b) {
            let lhs = row.iter().zip(&got).fold(Scalar::zero(), |acc, (r, v)| &acc + &(r * v));
            assert_eq!(&lhs, rhs);
        }
        if leibniz(&a).is_zero() {
            continue;
        }
        assert!(free.is_empty());
        assert_eq!(got, x);
    }
}

#[test]
fn elimination_detects_inconsistency() {
    // x + y = 1, x + y = 2
    let a = vec![vec![Scalar::one(), Scalar::one()], vec![Scalar::one(), Scalar::one()]];
    let b = vec![Scalar::one(), Scalar::from_int(2)];
    assert_eq!(solve(a, b), LinearSolution::Inconsistent);
}
