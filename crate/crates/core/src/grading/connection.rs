use std::collections::BTreeSet;

use super::tensor::{tensor_mu, tensor_sandwich, TensorElement};
use super::{DegreeGrading, Grading};
use crate::error::{Error, Result};
use crate::freealg::{Element, GenId, Presentation, Word};
use crate::linalg::{solve, LinearSolution};
use crate::scalars::Scalar;

/// Hard cap on tensor size during the recursion.
pub const MAX_TENSOR_TERMS: usize = 2_000_000;

/// One unknown coefficient multiplying a fixed sum of `u ⊗ v` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzTerm {
    pub unknown: String,
    pub pairs: Vec<(Element, Element)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionAnsatz {
    pub name: String,
    pub terms: Vec<AnsatzTerm>,
}

impl ConnectionAnsatz {
    /// One unknown per pair.
    pub fn simple(name: &str, pairs: Vec<(String, Element, Element)>) -> Self {
        ConnectionAnsatz {
            name: name.to_string(),
            terms: pairs.into_iter().map(|(unknown, u, v)| AnsatzTerm { unknown, pairs: vec![(u, v)] }).collect(),
        }
    }

    /// `Σ cᵢ Σ uᵢⱼ ⊗ vᵢⱼ` for given coefficients.
    pub fn instantiate(&self, p: &Presentation, coeffs: &[Scalar]) -> Result<TensorElement> {
        let mut omega = TensorElement::zero();
        for (term, c) in self.terms.iter().zip(coeffs) {
            for (u, v) in &term.pairs {
                omega.add_product(&p.normal_form(u)?, &p.normal_form(v)?, c);
            }
        }
        Ok(omega)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSolution {
    pub ansatz: String,
    pub coefficients: Vec<(String, Scalar)>,
    /// Unknowns left unconstrained by the system and set to 0.
    pub free_unknowns: Vec<String>,
    pub omega: TensorElement,
}

/// Checks that every first leg has degree g⁻¹ and every second leg degree g.
pub fn check_ansatz_degrees(p: &Presentation, grading: &Grading, ansatz: &ConnectionAnsatz) -> Result<()> {
    let group = grading.group();
    let (want_u, want_v) = (group.reduce(-1), group.reduce(1));
    for term in &ansatz.terms {
        for (u, v) in &term.pairs {
            for (leg, want, side) in [(u, want_u, "first"), (v, want_v, "second")] {
                let nf = p.normal_form(leg)?;
                if nf.is_zero() {
                    continue;
                }
                if grading.degree_of(p, &nf)? != Some(want) {
                    return Err(Error::NotHomogeneous(format!(
                        "{side} leg `{}` of `{}` should have degree {want}",
                        p.fmt_element(&nf),
                        term.unknown
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Solves `μ(Σ cᵢ ωᵢ) = 1` for the unknown coefficients.
///
/// One equation per irreducible word occurring in some `μ(ωᵢ)`; free
/// unknowns are set to 0. The result is re-verified before returning.
pub fn solve_connection(p: &Presentation, grading: &Grading, ansatz: &ConnectionAnsatz) -> Result<ConnectionSolution> {
    check_ansatz_degrees(p, grading, ansatz)?;
    let mut products = Vec::with_capacity(ansatz.terms.len());
    for term in &ansatz.terms {
        let mut sum = Element::zero();
        for (u, v) in &term.pairs {
            sum = &sum + &p.mul(u, v)?;
        }
        products.push(p.normal_form(&sum)?);
    }
    let mut words: BTreeSet<Word> = BTreeSet::new();
    words.insert(Word::empty());
    for e in &products {
        words.extend(e.terms().map(|(w, _)| w.clone()));
    }
    let words: Vec<Word> = words.into_iter().collect();
    let a: Vec<Vec<Scalar>> = words.iter().map(|w| products.iter().map(|e| e.coefficient(w)).collect()).collect();
    let b: Vec<Scalar> = words.iter().map(|w| if w.is_empty() { Scalar::one() } else { Scalar::zero() }).collect();
    let LinearSolution::Solved { x, free } = solve(a, b) else {
        return Err(Error::NoSolution);
    };
    let omega = ansatz.instantiate(p, &x)?;
    if tensor_mu(p, &omega)? != Element::one() {
        return Err(Error::Invalid("solution failed the multiplication round trip".into()));
    }
    Ok(ConnectionSolution {
        ansatz: ansatz.name.clone(),
        coefficients: ansatz.terms.iter().map(|t| t.unknown.clone()).zip(x).collect(),
        free_unknowns: free.into_iter().map(|i| ansatz.terms[i].unknown.clone()).collect(),
        omega,
    })
}

/// Whether `t ∈ A_{g⁻ⁿ} ⊗ A_{gⁿ}`.
///
/// For an involutive grading this is `(σ⊗id)t = (−1)ⁿt = (id⊗σ)t`.
pub fn leg_degrees_ok(p: &Presentation, grading: &Grading, t: &TensorElement, n: i64) -> Result<bool> {
    match grading {
        Grading::Degree(g) => {
            let (want_u, want_v) = (g.group.reduce(-n), g.group.reduce(n));
            Ok(t.terms().all(|(u, v, _)| g.word_degree(u) == want_u && g.word_degree(v) == want_v))
        }
        Grading::Involutive(s) => {
            let expected = if n % 2 == 0 { t.clone() } else { t.scale(&Scalar::from_int(-1)) };
            let left = t.map_legs(|u| s.apply(p, &Element::word(u.clone())), |v| Ok(Element::word(v.clone())))?;
            if left != expected {
                return Ok(false);
            }
            let right = t.map_legs(|u| Ok(Element::word(u.clone())), |v| s.apply(p, &Element::word(v.clone())))?;
            Ok(right == expected)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerLevel {
    pub n: usize,
    pub terms: usize,
    pub degrees_ok: bool,
    pub mu_is_one: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerReport {
    pub levels: Vec<PowerLevel>,
    /// ω(n) for the last level.
    pub omega: TensorElement,
}

impl PowerReport {
    pub fn is_ok(&self) -> bool {
        self.levels.iter().all(|l| l.degrees_ok && l.mu_is_one)
    }
}

/// Builds `ω(k+1) = Σᵢ ω′ᵢ ω(k) ω″ᵢ` for `k < n`, checking every level.
pub fn connection_power(p: &Presentation, grading: &Grading, omega1: &TensorElement, n: usize) -> Result<PowerReport> {
    if n == 0 {
        return Err(Error::Invalid("connection power must be at least 1".into()));
    }
    // iterate on D·ω(1) so the inner loop only sees Laurent polynomials; ω(k) = cur / Dᵏ
    let den = Scalar::from_poly(omega1.common_denominator());
    let base = omega1.scale(&den);
    let mut cur = base.clone();
    let mut den_pow = den.clone();
    let mut levels = Vec::with_capacity(n);
    for k in 1..=n {
        if k > 1 {
            let mut next = TensorElement::zero();
            for (u, v, s) in base.terms() {
                let part = tensor_sandwich(p, &Element::word(u.clone()), &cur, &Element::word(v.clone()))?.scale(s);
                next = next.add(&part);
                if next.len() > MAX_TENSOR_TERMS {
                    return Err(Error::SizeBudget { terms: next.len() });
                }
            }
            cur = next;
            den_pow = &den_pow * &den;
        }
        levels.push(PowerLevel {
            n: k,
            terms: cur.len(),
            degrees_ok: leg_degrees_ok(p, grading, &cur, k as i64)?,
            mu_is_one: tensor_mu(p, &cur)? == Element::scalar(den_pow.clone()),
        });
    }
    let omega = cur.scale(&den_pow.inv()?);
    Ok(PowerReport { levels, omega })
}

/// Irreducible words of length `1..=max_len`, in increasing term order.
pub fn irreducible_words(p: &Presentation, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..p.gen_count() as GenId {
                let mut v = w.0.clone();
                v.push(g);
                let nw = Word(v);
                if p.is_irreducible(&nw) {
                    next.push(nw);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort_by(|a, b| p.cmp_words(a, b));
    out
}

/// Tries the generic ansatz of all word pairs of degrees (g⁻¹, g) with length
/// at most `len`, for `len = 1..=max_len`; returns the first that solves.
pub fn search_ansatz(
    p: &Presentation,
    grading: &DegreeGrading,
    max_len: usize,
) -> Result<Option<(ConnectionAnsatz, ConnectionSolution)>> {
    let words = irreducible_words(p, max_len);
    let (want_u, want_v) = (grading.group.reduce(-1), grading.group.reduce(1));
    let wrapped = Grading::Degree(grading.clone());
    for len in 1..=max_len {
        let lefts: Vec<&Word> = words.iter().filter(|w| w.len() <= len && grading.word_degree(w) == want_u).collect();
        let rights: Vec<&Word> = words.iter().filter(|w| w.len() <= len && grading.word_degree(w) == want_v).collect();
        let mut pairs = Vec::new();
        for u in &lefts {
            for v in &rights {
                let name = format!("c{}", pairs.len() + 1);
                pairs.push((name, Element::word((*u).clone()), Element::word((*v).clone())));
            }
        }
        if pairs.is_empty() {
            continue;
        }
        let ansatz = ConnectionAnsatz::simple(&format!("search{len}"), pairs);
        match solve_connection(p, &wrapped, &ansatz) {
            Ok(sol) => return Ok(Some((ansatz, sol))),
            Err(Error::NoSolution) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::super::GradingGroup;
    use super::*;
    use crate::scalars::Parameter;

    /// Laurent polynomials in one variable: x.xinv = xinv.x = 1.
    fn laurent() -> (Presentation, DegreeGrading) {
        let mut p = Presentation::new("laurent", Parameter::real("q"));
        let x = p.add_gen("x", 1);
        let xi = p.add_gen("xinv", 1);
        p.add_rule(Word(vec![x, xi]), Element::one());
        p.add_rule(Word(vec![xi, x]), Element::one());
        let g = DegreeGrading::new("Z", GradingGroup::Integers, vec![1, -1]);
        (p, g)
    }

    #[test]
    fn solves_unit_connection() {
        let (p, g) = laurent();
        let ans = ConnectionAnsatz::simple("inv", vec![("c".into(), p.elem("xinv").unwrap(), p.elem("x").unwrap())]);
        let sol = solve_connection(&p, &Grading::Degree(g.clone()), &ans).unwrap();
        assert_eq!(sol.coefficients, vec![("c".to_string(), Scalar::one())]);
        let rep = connection_power(&p, &Grading::Degree(g), &sol.omega, 3).unwrap();
        assert!(rep.is_ok());
        assert_eq!(rep.omega.len(), 1);
    }

    #[test]
    fn rejects_wrong_degree_and_inconsistent_systems() {
        let (p, g) = laurent();
        let g = Grading::Degree(g);
        let wrong = ConnectionAnsatz::simple("w", vec![("c".into(), p.elem("x").unwrap(), p.elem("x").unwrap())]);
        assert!(matches!(solve_connection(&p, &g, &wrong), Err(Error::NotHomogeneous(_))));
        let zero = ConnectionAnsatz::simple("z", vec![("c".into(), p.elem("xinv").unwrap(), p.elem("x - x").unwrap())]);
        assert_eq!(solve_connection(&p, &g, &zero), Err(Error::NoSolution));
    }

    #[test]
    fn search_finds_length_one_pair() {
        let (p, g) = laurent();
        let (ans, sol) = search_ansatz(&p, &g, 2).unwrap().unwrap();
        assert_eq!(ans.terms.len(), 1);
        assert!(sol.free_unknowns.is_empty());
    }

    #[test]
    fn irreducible_words_skip_redexes() {
        let (p, _) = laurent();
        let words = irreducible_words(&p, 2);
        assert_eq!(words.len(), 4);
        assert!(words.iter().all(|w| p.is_irreducible(w)));
    }
}
