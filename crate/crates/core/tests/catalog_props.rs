use qsmooth_core::catalog::{get_algebra, get_grading, get_morphism, list_entries, tower, Params};
use qsmooth_core::freealg::{confluence_check, validate_presentation};
use qsmooth_core::grading::{check_rule_homogeneity, Grading};
use qsmooth_core::MorphismSpec;

fn params_for(uses_k: bool, uses_l: bool, max_k: u32, max_l: u32) -> Vec<Params> {
    let ks: Vec<u32> = if uses_k { (0..=max_k).collect() } else { vec![1] };
    let ls: Vec<u32> = if uses_l { (1..=max_l).collect() } else { vec![1] };
    ks.iter().flat_map(|&k| ls.iter().map(move |&l| Params::kl(k, l))).collect()
}

#[test]
fn every_entry_validates_and_is_confluent() {
    for e in list_entries() {
        for params in params_for(e.uses_k, e.uses_l, 3, 6) {
            let p = get_algebra(e.name, params).unwrap();
            let report = validate_presentation(&p);
            assert!(report.is_ok(), "{} {params:?}: {report:?}", e.name);
            let pairs = confluence_check(&p).unwrap();
            assert!(pairs.is_empty(), "{} {params:?}: {} unresolved", e.name, pairs.len());
        }
    }
}

#[test]
fn degree_gradings_are_homogeneous() {
    for e in list_entries() {
        for params in params_for(e.uses_k, e.uses_l, 3, 6) {
            let p = get_algebra(e.name, params).unwrap();
            for g in e.gradings {
                match get_grading(e.name, g, params).unwrap() {
                    Grading::Degree(d) => {
                        let bad = check_rule_homogeneity(&p, &d);
                        assert!(bad.is_empty(), "{} {g} {params:?}: {bad:?}", e.name);
                    }
                    Grading::Involutive(s) => assert!(s.verify(&p).unwrap().is_ok(), "{} {g}", e.name),
                }
            }
        }
    }
}

#[test]
fn tower_maps_are_star_morphisms() {
    for l in 1..=6 {
        for e in list_entries() {
            for name in e.morphisms {
                let m = get_morphism(name, Params::l(l)).unwrap();
                let report = m.verify().unwrap();
                assert!(report.is_ok(), "{name} l={l}: {report:?}");
            }
        }
    }
}

#[test]
fn tower_chains_compose() {
    for base in ["rp2minus", "sigma3minus", "sigma3", "teardrop", "lens"] {
        for l in 1..=3 {
            let maps: Vec<MorphismSpec> =
                tower(base).unwrap().iter().map(|n| get_morphism(n, Params::l(l)).unwrap()).collect();
            for pair in maps.windows(2) {
                assert_eq!(pair[0].target.name, pair[1].source.name, "{base}");
            }
            let composite = maps[1..].iter().fold(maps[0].clone(), |acc, m| acc.then(m).unwrap());
            assert!(composite.verify().unwrap().is_ok(), "{base} l={l}");
        }
    }
}

#[test]
fn printed_weyl_relation_is_rejected_when_it_differs() {
    for k in 0..=3 {
        for l in 1..=3 {
            let p = get_algebra("A", Params { k, l, printed: true }).unwrap();
            // the printed twist agrees with the corrected one exactly when kl = l
            let agrees = k == 1;
            assert_eq!(confluence_check(&p).unwrap().is_empty(), agrees, "k={k} l={l}");
        }
    }
}

#[test]
fn unknown_names_are_errors() {
    assert!(get_algebra("nope", Params::default()).is_err());
    assert!(get_grading("su2q", "Z7", Params::default()).is_err());
    assert!(get_morphism("nope", Params::default()).is_err());
    assert!(tower("nope").is_err());
    assert!(get_algebra("lens", Params::l(0)).is_err());
}
