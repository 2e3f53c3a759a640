//! Built-in presentations, gradings, connection ansätze and tower maps.

mod algebras;
mod pillow;

pub use algebras::{lens, rp2minus, s2u, sigma3, sigma3minus, su2q, torus, weyl};
pub use pillow::{pillow_ansatz, pillow_data, pillow_sigma, PillowData};

use crate::error::{Error, Result};
use crate::freealg::{Element, MorphismSpec, Presentation};
use crate::grading::{AnsatzTerm, ConnectionAnsatz, DegreeGrading, Grading, GradingGroup};
use crate::scalars::ParamMode;

/// Integer parameters of the parametrised families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub k: u32,
    pub l: u32,
    /// Use the printed `ab = q^{-2kl} ba` instead of `q^{-2l}` for `A(k,l)`.
    pub printed: bool,
}

impl Default for Params {
    fn default() -> Self {
        Params { k: 1, l: 1, printed: false }
    }
}

impl Params {
    pub fn l(l: u32) -> Self {
        Params { l, ..Self::default() }
    }

    pub fn kl(k: u32, l: u32) -> Self {
        Params { k, l, printed: false }
    }
}

/// Static description of a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub mode: ParamMode,
    pub uses_k: bool,
    pub uses_l: bool,
    pub gradings: &'static [&'static str],
    /// Gradings that come with a built-in ansatz.
    pub ansatze: &'static [&'static str],
    pub morphisms: &'static [&'static str],
    pub summary: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "torus",
        mode: ParamMode::Unitary,
        uses_k: false,
        uses_l: false,
        gradings: &["Z2"],
        ansatze: &["Z2"],
        morphisms: &[],
        summary: "noncommutative torus on unitaries U, V with UV = lambda VU",
    },
    CatalogEntry {
        name: "su2q",
        mode: ParamMode::Real,
        uses_k: false,
        uses_l: true,
        gradings: &["Zl"],
        ansatze: &["Zl"],
        morphisms: &[],
        summary: "quantum 3-sphere on alpha, beta",
    },
    CatalogEntry {
        name: "lens",
        mode: ParamMode::Real,
        uses_k: false,
        uses_l: true,
        gradings: &["Z"],
        ansatze: &[],
        morphisms: &["lens-to-s3"],
        summary: "quantum lens space L(l;1,l) on c, d",
    },
    CatalogEntry {
        name: "teardrop",
        mode: ParamMode::Real,
        uses_k: false,
        uses_l: true,
        gradings: &["Z"],
        ansatze: &[],
        morphisms: &["wp-to-lens", "wp-to-s3"],
        summary: "quantum teardrop WP(1,l) on a, b",
    },
    CatalogEntry {
        name: "A",
        mode: ParamMode::Real,
        uses_k: true,
        uses_l: true,
        gradings: &["Z"],
        ansatze: &[],
        morphisms: &[],
        summary: "the family A(k,l) on a, b",
    },
    CatalogEntry {
        name: "s2u",
        mode: ParamMode::Real,
        uses_k: false,
        uses_l: false,
        gradings: &["Z2"],
        ansatze: &["Z2"],
        morphisms: &[],
        summary: "equatorial Podles sphere with a unitary u adjoined",
    },
    CatalogEntry {
        name: "sigma3",
        mode: ParamMode::Real,
        uses_k: false,
        uses_l: true,
        gradings: &["Zl"],
        ansatze: &["Zl"],
        morphisms: &["sigma3-to-s2u"],
        summary: "quantum Seifert manifold on zeta0, zeta1 and a central unitary xi",
    },
    CatalogEntry {
        name: "sigma3minus",
        mode: ParamMode::Real,
        uses_k: false,
        uses_l: true,
        gradings: &["Z"],
        ansatze: &[],
        morphisms: &["sigma3minus-to-sigma3"],
        summary: "Seifert lens space Sigma(l;-) on x, y and a central unitary z",
    },
    CatalogEntry {
        name: "rp2minus",
        mode: ParamMode::Real,
        uses_k: false,
        uses_l: true,
        gradings: &[],
        ansatze: &[],
        morphisms: &["rp2minus-to-sigma3minus"],
        summary: "odd weighted real projective plane RP(l;-) on a, b, cm",
    },
];

/// Tower maps as `(name, source, target)`.
pub const MORPHISMS: &[(&str, &str, &str)] = &[
    ("wp-to-lens", "teardrop", "lens"),
    ("lens-to-s3", "lens", "su2q"),
    ("wp-to-s3", "teardrop", "su2q"),
    ("sigma3minus-to-sigma3", "sigma3minus", "sigma3"),
    ("rp2minus-to-sigma3minus", "rp2minus", "sigma3minus"),
    ("sigma3-to-s2u", "sigma3", "s2u"),
];

/// Chain of maps starting at each tower base.
pub fn tower(name: &str) -> Result<Vec<&'static str>> {
    match name {
        "rp2minus" => Ok(vec!["rp2minus-to-sigma3minus", "sigma3minus-to-sigma3", "sigma3-to-s2u"]),
        "sigma3minus" => Ok(vec!["sigma3minus-to-sigma3", "sigma3-to-s2u"]),
        "sigma3" => Ok(vec!["sigma3-to-s2u"]),
        "teardrop" | "wp" => Ok(vec!["wp-to-lens", "lens-to-s3"]),
        "lens" => Ok(vec!["lens-to-s3"]),
        _ => Err(Error::Unknown { kind: "tower", name: name.to_string() }),
    }
}

pub fn list_entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::Unknown { kind: "catalog entry", name: name.into() })
}

fn need_l(params: Params) -> Result<()> {
    if params.l == 0 {
        return Err(Error::UnsupportedParams("l must be at least 1".into()));
    }
    Ok(())
}

pub fn get_algebra(name: &str, params: Params) -> Result<Presentation> {
    let e = entry(name)?;
    if e.uses_l {
        need_l(params)?;
    }
    Ok(match name {
        "torus" => torus(),
        "su2q" => su2q(),
        "lens" => lens(params.l),
        "teardrop" => weyl(1, params.l, false),
        "A" => weyl(params.k, params.l, params.printed),
        "s2u" => s2u(),
        "sigma3" => sigma3(),
        "sigma3minus" => sigma3minus(params.l),
        "rp2minus" => rp2minus(params.l),
        _ => unreachable!("entry table and constructors agree"),
    })
}

pub fn get_grading(name: &str, grading: &str, params: Params) -> Result<Grading> {
    let e = entry(name)?;
    if !e.gradings.contains(&grading) {
        return Err(Error::Unknown { kind: "grading", name: format!("{name}:{grading}") });
    }
    if name == "torus" {
        return Ok(Grading::Involutive(pillow_sigma(&torus())?));
    }
    let p = get_algebra(name, params)?;
    let l = params.l as i64;
    let g = match name {
        "su2q" => {
            let group = GradingGroup::cyclic(params.l)?;
            DegreeGrading::from_names("Zl", group, &p, &[("alpha", 1), ("alphastar", l - 1)])?
        }
        "sigma3" => {
            let group = GradingGroup::cyclic(params.l)?;
            DegreeGrading::from_names("Zl", group, &p, &[("zeta0", 1), ("zeta0star", l - 1)])?
        }
        "lens" => DegreeGrading::from_names(
            "Z",
            GradingGroup::Integers,
            &p,
            &[("c", 1), ("cstar", -1), ("d", -1), ("dstar", 1)],
        )?,
        "teardrop" | "A" => DegreeGrading::from_names("Z", GradingGroup::Integers, &p, &[("b", 1), ("bstar", -1)])?,
        "s2u" => DegreeGrading::from_names(
            "Z2",
            GradingGroup::Cyclic(2),
            &p,
            &[("z0", 1), ("z0star", 1), ("z1", 1), ("u", 1), ("ustar", 1)],
        )?,
        "sigma3minus" => DegreeGrading::from_names(
            "Z",
            GradingGroup::Integers,
            &p,
            &[("x", 1), ("xstar", -1), ("y", 1), ("z", -2), ("zstar", 2)],
        )?,
        _ => unreachable!("grading table and constructors agree"),
    };
    Ok(Grading::Degree(g))
}

/// The built-in ansatz attached to a grading.
pub fn get_ansatz(name: &str, grading: &str, params: Params) -> Result<ConnectionAnsatz> {
    let e = entry(name)?;
    if !e.ansatze.contains(&grading) {
        return Err(Error::Unknown { kind: "ansatz", name: format!("{name}:{grading}") });
    }
    match name {
        "torus" => pillow_ansatz(&torus()),
        "su2q" => {
            need_l(params)?;
            sphere_like_ansatz(&su2q(), "alpha", "alphastar", "beta.betastar", params.l)
        }
        "sigma3" => {
            need_l(params)?;
            sphere_like_ansatz(&sigma3(), "zeta0", "zeta0star", "zeta1^2.xi", params.l)
        }
        "s2u" => {
            let p = s2u();
            Ok(ConnectionAnsatz::simple(
                "sphere",
                vec![("c0".into(), p.elem("z0")?, p.elem("z0star")?), ("c1".into(), p.elem("z1")?, p.elem("z1")?)],
            ))
        }
        _ => unreachable!("ansatz table and constructors agree"),
    }
}

/// `x₁ g^{l−1} ⊗ g*^{l−1} + Σ_{i=1}^{l−1} yᵢ a^{i−1} g* ⊗ g`.
fn sphere_like_ansatz(p: &Presentation, g: &str, gstar: &str, a: &str, l: u32) -> Result<ConnectionAnsatz> {
    let l = l as usize;
    let gen = p.elem(g)?;
    let star = p.elem(gstar)?;
    let a = p.elem(a)?;
    let mut terms = vec![AnsatzTerm { unknown: "x1".into(), pairs: vec![(p.pow(&gen, l - 1)?, p.pow(&star, l - 1)?)] }];
    let mut apow = Element::one();
    for i in 1..l {
        terms.push(AnsatzTerm { unknown: format!("y{i}"), pairs: vec![(p.mul(&apow, &star)?, gen.clone())] });
        apow = p.mul(&apow, &a)?;
    }
    Ok(ConnectionAnsatz { name: "standard".into(), terms })
}

pub fn get_morphism(name: &str, params: Params) -> Result<MorphismSpec> {
    need_l(params)?;
    let l = params.l;
    let m = match name {
        "wp-to-lens" => MorphismSpec::from_texts(
            name,
            &weyl(1, l, false),
            &lens(l),
            &[("a", "d.dstar"), ("b", "c.d"), ("bstar", "dstar.cstar")],
        )?,
        "lens-to-s3" => {
            let (a, astar) = (format!("alpha^{l}"), format!("alphastar^{l}"));
            MorphismSpec::from_texts(
                name,
                &lens(l),
                &su2q(),
                &[("c", &a), ("cstar", &astar), ("d", "beta"), ("dstar", "betastar")],
            )?
        }
        "wp-to-s3" => get_morphism("wp-to-lens", params)?.then(&get_morphism("lens-to-s3", params)?)?,
        "sigma3minus-to-sigma3" => {
            let (x, xstar) = (format!("zeta0^{l}"), format!("zeta0star^{l}"));
            MorphismSpec::from_texts(
                name,
                &sigma3minus(l),
                &sigma3(),
                &[("x", &x), ("xstar", &xstar), ("y", "zeta1"), ("z", "xi"), ("zstar", "xistar")],
            )?
        }
        "rp2minus-to-sigma3minus" => {
            let bstar = format!("q^{l} * xstar.y");
            MorphismSpec::from_texts(
                name,
                &rp2minus(l),
                &sigma3minus(l),
                &[("a", "y^2.z"), ("b", "x.y.z"), ("bstar", &bstar), ("cm", "x^2.z"), ("cmstar", "xstar^2.zstar")],
            )?
        }
        "sigma3-to-s2u" => MorphismSpec::from_texts(
            name,
            &sigma3(),
            &s2u(),
            &[
                ("zeta0", "z0.u"),
                ("zeta0star", "z0star.ustar"),
                ("zeta1", "z1.u"),
                ("xi", "ustar^2"),
                ("xistar", "u^2"),
            ],
        )?,
        _ => return Err(Error::Unknown { kind: "morphism", name: name.to_string() }),
    };
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{confluence_check, validate_presentation};
    use crate::grading::check_rule_homogeneity;

    #[test]
    fn every_entry_validates_for_small_parameters() {
        for e in list_entries() {
            for l in 1..=3 {
                let p = get_algebra(e.name, Params::kl(1, l)).unwrap();
                let v = validate_presentation(&p);
                assert!(v.is_ok(), "{} l={l}: {v:?}", e.name);
                let cp = confluence_check(&p).unwrap();
                assert!(cp.is_empty(), "{} l={l}: {} critical pairs", e.name, cp.len());
            }
        }
    }

    #[test]
    fn gradings_are_homogeneous() {
        for e in list_entries() {
            for g in e.gradings {
                for l in 1..=3 {
                    let params = Params::kl(1, l);
                    if let Grading::Degree(d) = get_grading(e.name, g, params).unwrap() {
                        let p = get_algebra(e.name, params).unwrap();
                        assert!(check_rule_homogeneity(&p, &d).is_empty(), "{}:{g} l={l}", e.name);
                    }
                }
            }
        }
    }

    #[test]
    fn morphisms_verify_for_small_l() {
        for (name, _, _) in MORPHISMS {
            for l in 1..=2 {
                let r = get_morphism(name, Params::l(l)).unwrap().verify().unwrap();
                assert!(r.is_ok(), "{name} l={l}: {r:?}");
            }
        }
    }

    #[test]
    fn unknown_names_and_bad_params() {
        assert!(matches!(get_algebra("nope", Params::default()), Err(Error::Unknown { .. })));
        assert!(matches!(get_algebra("lens", Params::l(0)), Err(Error::UnsupportedParams(_))));
        assert!(get_grading("su2q", "Z", Params::l(2)).is_err());
        assert!(get_morphism("nope", Params::l(1)).is_err());
    }

    #[test]
    fn su2q_ansatz_unknowns() {
        let a = get_ansatz("su2q", "Zl", Params::l(3)).unwrap();
        let names: Vec<_> = a.terms.iter().map(|t| t.unknown.as_str()).collect();
        assert_eq!(names, ["x1", "y1", "y2"]);
    }
}
