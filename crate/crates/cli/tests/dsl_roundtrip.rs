use qsmooth_cli::dsl::{emit_dsl, parse_dsl, DslDocument};
use qsmooth_core::catalog::{list_entries, Params};
use qsmooth_core::freealg::Star;
use qsmooth_core::grading::{AnsatzTerm, ConnectionAnsatz, DegreeGrading, Grading, GradingGroup, InvolutiveGrading};
use qsmooth_core::{Element, GenId, ParamMode, Parameter, Presentation, Scalar, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_round_trip(doc: &DslDocument) {
    let text = emit_dsl(doc);
    let back = parse_dsl(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
    assert_eq!(&back, doc, "structural round trip failed for\n{text}");
    assert_eq!(emit_dsl(&back), text);
}

#[test]
fn catalog_entries_round_trip() {
    for e in list_entries() {
        let ks: &[u32] = if e.uses_k { &[0, 1, 2, 3] } else { &[1] };
        let ls: &[u32] = if e.uses_l { &[1, 2, 3, 5] } else { &[1] };
        for &k in ks {
            for &l in ls {
                let doc = DslDocument::from_catalog(e.name, Params::kl(k, l)).unwrap();
                assert_round_trip(&doc);
            }
        }
    }
    let printed = DslDocument::from_catalog("A", Params { k: 2, l: 3, printed: true }).unwrap();
    assert_round_trip(&printed);
}

#[test]
fn catalog_emission_is_stable() {
    let a = emit_dsl(&DslDocument::from_catalog("sigma3", Params::l(3)).unwrap());
    let b = emit_dsl(&DslDocument::from_catalog("sigma3", Params::l(3)).unwrap());
    assert_eq!(a, b);
    assert!(a.contains("gen zeta1 star -> zeta1.xi"), "{a}");
}

#[test]
fn reoriented_commutation_rule() {
    let src =
        "algebra s over q real\ngen alpha selfadjoint\ngen beta selfadjoint\nrule beta.alpha -> (1/q) * alpha.beta ;\n";
    let d = parse_dsl(src).unwrap();
    let p = &d.presentation;
    assert_eq!(p.rules().len(), 1);
    assert_eq!(p.rules()[0].lhs, p.word_of("beta.alpha").unwrap());
    assert_eq!(p.rules()[0].rhs, p.parse_element("q^-1 * alpha.beta").unwrap());
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    let base = Scalar::from_ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4));
    match rng.gen_range(0..4) {
        0 => base,
        1 => &base * &Scalar::t_pow(rng.gen_range(-3..=3)),
        2 => &base + &Scalar::t_pow(rng.gen_range(1..=3)),
        _ => {
            let den = &Scalar::t() + &Scalar::from_int(rng.gen_range(1..=3));
            (&base + &Scalar::t_pow(2)).checked_div(&den).unwrap()
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word((0..len).map(|_| rng.gen_range(0..n) as GenId).collect())
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> Element {
    let mut e = Element::zero();
    for _ in 0..rng.gen_range(0..4) {
        e.add_term(random_word(rng, n, 3), random_scalar(rng));
    }
    e
}

fn random_document(rng: &mut ChaCha8Rng, idx: usize) -> DslDocument {
    let param =
        if rng.gen_bool(0.5) { Parameter::real("q") } else { Parameter { name: "q".into(), mode: ParamMode::Unitary } };
    let mut p = Presentation::new(format!("rand{idx}"), param);
    let n = rng.gen_range(1..=4);
    for i in 0..n {
        p.add_gen(&format!("g{i}"), rng.gen_range(1..=3));
    }
    for g in 0..n as GenId {
        if rng.gen_bool(0.5) {
            let img = random_element(rng, n);
            p.set_star(g, Star::Image(img));
        }
    }
    for _ in 0..rng.gen_range(0..5) {
        let mut lhs = random_word(rng, n, 3);
        if lhs.is_empty() {
            lhs = Word::gen(0);
        }
        p.add_rule(lhs, random_element(rng, n));
    }
    let mut gradings = Vec::new();
    if rng.gen_bool(0.6) {
        let group = if rng.gen_bool(0.5) { GradingGroup::Integers } else { GradingGroup::Cyclic(rng.gen_range(1..=5)) };
        let degrees = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        gradings.push(Grading::Degree(DegreeGrading::new("G", group, degrees)));
    }
    if rng.gen_bool(0.4) {
        let sigma = (0..n).map(|_| random_element(rng, n)).collect();
        gradings.push(Grading::Involutive(InvolutiveGrading { name: "S".into(), sigma }));
    }
    let mut ansatze = Vec::new();
    for a in 0..rng.gen_range(0..3) {
        let terms = (0..rng.gen_range(0..3))
            .map(|t| AnsatzTerm {
                unknown: format!("c{t}"),
                pairs: (0..rng.gen_range(1..3)).map(|_| (random_element(rng, n), random_element(rng, n))).collect(),
            })
            .collect();
        ansatze.push(ConnectionAnsatz { name: format!("a{a}"), terms });
    }
    DslDocument { presentation: p, gradings, ansatze }
}

#[test]
fn randomized_documents_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd51);
    for i in 0..100 {
        assert_round_trip(&random_document(&mut rng, i));
    }
}

#[test]
fn errors_carry_locations() {
    let cases: &[(&str, (usize, usize), &str)] = &[
        ("algebra s over q real\ngen a selfadjoint\nrule a.b -> a ;\n", (3, 8), "unknown generator"),
        ("algebra s over q imaginary\n", (1, 18), "real"),
        ("algebra s over q real\ngen a selfadjoint\ngrading G : Z/0 { a = 1 }\n", (3, 15), "positive"),
        ("algebra s over q real\ngen a selfadjoint\nansatz x { c: a a }\n", (3, 17), "⊗"),
        ("algebra s over q real\ngen a selfadjoint\nfoo\n", (3, 1), "expected `gen`"),
        ("gen a selfadjoint\n", (1, 1), "algebra"),
        ("algebra s over q real\ngen a weight 0 selfadjoint\n", (2, 14), "weight"),
    ];
    for (src, (line, col), needle) in cases {
        let e = parse_dsl(src).unwrap_err();
        assert_eq!((e.line, e.column), (*line, *col), "{src:?}: {e}");
        assert!(e.message.contains(needle), "{src:?}: {e}");
    }
}

#[test]
fn comments_and_ascii_tensor() {
    let src = "# header comment\nalgebra s over q real # trailing\ngen a selfadjoint\n\nansatz x { c: a @ a }\n";
    let d = parse_dsl(src).unwrap();
    assert_eq!(d.ansatze[0].terms[0].pairs.len(), 1);
}

#[test]
fn repeated_unknown_groups_pairs() {
    let src =
        "algebra s over q real\ngen a selfadjoint\ngen b selfadjoint\nansatz x { c: a ⊗ b, d: b ⊗ a, c: b ⊗ b }\n";
    let d = parse_dsl(src).unwrap();
    let terms = &d.ansatze[0].terms;
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0].pairs.len(), 2);
}
