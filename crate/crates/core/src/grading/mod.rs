//! Group gradings, tensor squares and strong connections.

mod connection;
mod qbinomial;
mod tensor;

use std::collections::BTreeMap;

pub use connection::{
    check_ansatz_degrees, connection_power, irreducible_words, leg_degrees_ok, search_ansatz, solve_connection,
    AnsatzTerm, ConnectionAnsatz, ConnectionSolution, PowerLevel, PowerReport, MAX_TENSOR_TERMS,
};
pub use qbinomial::{
    connection_matrix, connection_matrix_det, determinant_closed_form, determinant_printed_form, determinant_report,
    expected_first_column_terms, first_column_terms, poch_expand, verify_poch_identity, DeterminantReport,
};
pub use tensor::{tensor_mu, tensor_sandwich, TensorElement};

use crate::error::{Error, Result};
use crate::freealg::{substitute, verify_automorphism, AutomorphismReport, Element, GenId, Presentation, Word};
use crate::scalars::Scalar;

/// ℤ or ℤ/n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradingGroup {
    Integers,
    Cyclic(u32),
}

impl GradingGroup {
    pub fn cyclic(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("cyclic grading modulus must be at least 1".into()));
        }
        Ok(GradingGroup::Cyclic(n))
    }

    /// Canonical representative: unchanged in ℤ, in `0..n` for ℤ/n.
    pub fn reduce(self, d: i64) -> i64 {
        match self {
            GradingGroup::Integers => d,
            GradingGroup::Cyclic(n) => d.rem_euclid(n as i64),
        }
    }

    pub fn label(self) -> String {
        match self {
            GradingGroup::Integers => "Z".into(),
            GradingGroup::Cyclic(n) => format!("Z/{n}"),
        }
    }
}

/// A grading fixed by the degrees of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeGrading {
    pub name: String,
    pub group: GradingGroup,
    /// Indexed by generator id, already reduced.
    pub degrees: Vec<i64>,
}

impl DegreeGrading {
    pub fn new(name: &str, group: GradingGroup, degrees: Vec<i64>) -> Self {
        let degrees = degrees.into_iter().map(|d| group.reduce(d)).collect();
        DegreeGrading { name: name.to_string(), group, degrees }
    }

    /// Builds from `(generator, degree)` pairs; unlisted generators get 0.
    pub fn from_names(name: &str, group: GradingGroup, p: &Presentation, degrees: &[(&str, i64)]) -> Result<Self> {
        let mut d = vec![0; p.gen_count()];
        for (g, deg) in degrees {
            d[p.gen(g)? as usize] = *deg;
        }
        Ok(Self::new(name, group, d))
    }

    pub fn gen_degree(&self, g: GenId) -> i64 {
        self.degrees[g as usize]
    }

    pub fn word_degree(&self, w: &Word) -> i64 {
        self.group.reduce(w.letters().iter().map(|&g| self.degrees[g as usize]).sum())
    }

    /// The common degree of all words, or `None` if mixed; zero has no degree.
    pub fn element_degree(&self, e: &Element) -> Option<i64> {
        let mut degs = e.terms().map(|(w, _)| self.word_degree(w));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }
}

/// A ℤ/2-grading by the ±1 eigenspaces of an order-two automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutiveGrading {
    pub name: String,
    /// Indexed by generator id.
    pub sigma: Vec<Element>,
}

impl InvolutiveGrading {
    pub fn apply(&self, p: &Presentation, e: &Element) -> Result<Element> {
        substitute(p, &self.sigma, e)
    }

    pub fn verify(&self, p: &Presentation) -> Result<AutomorphismReport> {
        verify_automorphism(p, &self.sigma, Some(2))
    }

    /// `Some(0)` for σ-even, `Some(1)` for σ-odd, `None` otherwise.
    pub fn parity(&self, p: &Presentation, e: &Element) -> Result<Option<i64>> {
        let s = self.apply(p, e)?;
        let e = p.normal_form(e)?;
        Ok(if s == e {
            Some(0)
        } else if s == -&e {
            Some(1)
        } else {
            None
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    Degree(DegreeGrading),
    Involutive(InvolutiveGrading),
}

impl Grading {
    pub fn name(&self) -> &str {
        match self {
            Grading::Degree(g) => &g.name,
            Grading::Involutive(g) => &g.name,
        }
    }

    pub fn group(&self) -> GradingGroup {
        match self {
            Grading::Degree(g) => g.group,
            Grading::Involutive(_) => GradingGroup::Cyclic(2),
        }
    }

    /// Degree of a homogeneous element, `None` if not homogeneous.
    pub fn degree_of(&self, p: &Presentation, e: &Element) -> Result<Option<i64>> {
        match self {
            Grading::Degree(g) => Ok(g.element_degree(&p.normal_form(e)?)),
            Grading::Involutive(s) => s.parity(p, e),
        }
    }
}

/// A rule whose two sides have different degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneityViolation {
    pub rule: usize,
    pub lhs_degree: i64,
    pub word: Word,
    pub degree: i64,
}

/// Lists every right-hand word whose degree differs from the left-hand side.
pub fn check_rule_homogeneity(p: &Presentation, g: &DegreeGrading) -> Vec<HomogeneityViolation> {
    let mut out = Vec::new();
    for (i, r) in p.rules().iter().enumerate() {
        let lhs_degree = g.word_degree(&r.lhs);
        for (w, _) in r.rhs.terms() {
            let degree = g.word_degree(w);
            if degree != lhs_degree {
                out.push(HomogeneityViolation { rule: i, lhs_degree, word: w.clone(), degree });
            }
        }
    }
    out
}

/// Splits a normal form into homogeneous components.
pub fn degree_decompose(p: &Presentation, g: &DegreeGrading, e: &Element) -> Result<BTreeMap<i64, Element>> {
    let mut out: BTreeMap<i64, Element> = BTreeMap::new();
    for (w, c) in p.normal_form(e)?.into_terms() {
        out.entry(g.word_degree(&w)).or_default().add_term(w, c);
    }
    Ok(out)
}

/// `((e + σe)/2, (e − σe)/2)`, both reduced.
pub fn involutive_decompose(p: &Presentation, s: &InvolutiveGrading, e: &Element) -> Result<(Element, Element)> {
    let e = p.normal_form(e)?;
    let se = s.apply(p, &e)?;
    let half = Scalar::from_ratio(1, 2);
    let even = p.normal_form(&(&e + &se).scale(&half))?;
    let odd = p.normal_form(&(&e - &se).scale(&half))?;
    Ok((even, odd))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Parameter;

    fn toy() -> Presentation {
        let mut p = Presentation::new("toy", Parameter::real("q"));
        let x = p.add_gen("x", 1);
        let y = p.add_gen("y", 1);
        p.add_rule(Word(vec![y, x]), Element::term(Scalar::t(), Word(vec![x, y])));
        p
    }

    #[test]
    fn cyclic_reduction_is_nonnegative() {
        assert_eq!(GradingGroup::Cyclic(3).reduce(-1), 2);
        assert_eq!(GradingGroup::Integers.reduce(-1), -1);
        assert!(GradingGroup::cyclic(0).is_err());
    }

    #[test]
    fn homogeneity_and_decomposition() {
        let p = toy();
        let g = DegreeGrading::from_names("Z", GradingGroup::Integers, &p, &[("x", 1), ("y", -1)]).unwrap();
        assert!(check_rule_homogeneity(&p, &g).is_empty());
        let e = p.elem("x + y.x + 3").unwrap();
        let parts = degree_decompose(&p, &g, &e).unwrap();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(parts[&0], p.elem("q * x.y + 3").unwrap());

        let bad = DegreeGrading::from_names("bad", GradingGroup::Integers, &p, &[("x", 1), ("y", 2)]).unwrap();
        assert!(check_rule_homogeneity(&p, &bad).is_empty());
        let mut p2 = toy();
        p2.add_rule(Word(vec![1, 1]), Element::gen(0));
        assert_eq!(check_rule_homogeneity(&p2, &bad).len(), 1);
    }

    #[test]
    fn involutive_split() {
        let mut p = Presentation::new("comm", Parameter::real("q"));
        p.add_gen("x", 1);
        p.add_gen("y", 1);
        p.add_rule(Word(vec![1, 0]), Element::word(Word(vec![0, 1])));
        let s = InvolutiveGrading { name: "swap".into(), sigma: vec![Element::gen(1), Element::gen(0)] };
        assert!(s.verify(&p).unwrap().is_ok());
        let (even, odd) = involutive_decompose(&p, &s, &Element::gen(0)).unwrap();
        assert_eq!(even, p.elem("1/2 * x + 1/2 * y").unwrap());
        assert_eq!(odd, p.elem("1/2 * x - 1/2 * y").unwrap());
        assert_eq!(s.parity(&p, &odd).unwrap(), Some(1));
    }
}
