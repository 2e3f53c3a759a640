//! Presentation validation and the diamond-lemma overlap check.

use std::cmp::Ordering;

use super::element::{Element, GenId, Word};
use super::presentation::Presentation;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderViolation {
    pub rule: usize,
    pub word: Word,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Rules with a right-hand word not smaller than the left-hand side.
    pub order_violations: Vec<OrderViolation>,
    /// Generators whose double star does not reduce back to themselves.
    pub involution_failures: Vec<(GenId, Element)>,
    /// Rules whose starred relation `(lhs - rhs)*` does not reduce to zero.
    pub star_closure_failures: Vec<(usize, Element)>,
    /// Reduction errors (e.g. fuel exhaustion) encountered while checking.
    pub errors: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.order_violations.is_empty()
            && self.involution_failures.is_empty()
            && self.star_closure_failures.is_empty()
            && self.errors.is_empty()
    }
}

/// Runs the termination, involutivity and star-closure checks.
pub fn validate_presentation(p: &Presentation) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (i, r) in p.rules().iter().enumerate() {
        for (w, _) in r.rhs.terms() {
            if p.cmp_words(w, &r.lhs) != Ordering::Less {
                report.order_violations.push(OrderViolation { rule: i, word: w.clone() });
            }
        }
    }
    // star checks only make sense for a terminating system
    if !report.order_violations.is_empty() {
        return report;
    }
    for g in 0..p.gen_count() as GenId {
        let once = p.star_image(g);
        match p.star_element(&once) {
            Ok(twice) if twice == Element::gen(g) => {}
            Ok(twice) => report.involution_failures.push((g, &twice - &Element::gen(g))),
            Err(e) => report.errors.push(format!("{}: {e}", p.gen_name(g))),
        }
    }
    for (i, r) in p.rules().iter().enumerate() {
        let rel = &Element::word(r.lhs.clone()) - &r.rhs;
        match p.star_element(&rel) {
            Ok(res) if res.is_zero() => {}
            Ok(res) => report.star_closure_failures.push((i, res)),
            Err(e) => report.errors.push(format!("rule {i}: {e}")),
        }
    }
    report
}

/// An ambiguity of two rules whose two resolutions disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub first: usize,
    pub second: usize,
    /// The ambiguous word.
    pub word: Word,
    /// Normal form of (first resolution − second resolution).
    pub difference: Element,
}

/// All overlaps (proper suffix/prefix) and inclusions of left-hand sides.
pub fn ambiguities(p: &Presentation) -> Vec<(usize, usize, Word, Element, Element)> {
    let rules = p.rules();
    let mut out = Vec::new();
    for (i, ri) in rules.iter().enumerate() {
        let li = &ri.lhs.0;
        for (j, rj) in rules.iter().enumerate() {
            let lj = &rj.lhs.0;
            // overlap: suffix of li == prefix of lj
            for k in 1..li.len().min(lj.len()) {
                if li[li.len() - k..] == lj[..k] {
                    let word = Word(li.iter().chain(&lj[k..]).copied().collect());
                    let tail = Word(lj[k..].to_vec());
                    let head = Word(li[..li.len() - k].to_vec());
                    let left = ri.rhs.mul_raw(&Element::word(tail));
                    let right = Element::word(head).mul_raw(&rj.rhs);
                    out.push((i, j, word, left, right));
                }
            }
            // inclusion: lj strictly inside li
            if i == j {
                continue;
            }
            if lj.len() < li.len() {
                for pos in 0..=li.len() - lj.len() {
                    if li[pos..pos + lj.len()] == lj[..] {
                        let head = Element::word(Word(li[..pos].to_vec()));
                        let tail = Element::word(Word(li[pos + lj.len()..].to_vec()));
                        let right = head.mul_raw(&rj.rhs).mul_raw(&tail);
                        out.push((i, j, ri.lhs.clone(), ri.rhs.clone(), right));
                    }
                }
            } else if li == lj && i < j {
                out.push((i, j, ri.lhs.clone(), ri.rhs.clone(), rj.rhs.clone()));
            }
        }
    }
    out
}

/// Resolves every ambiguity; an empty result certifies local confluence.
pub fn confluence_check(p: &Presentation) -> Result<Vec<CriticalPair>> {
    let mut failures = Vec::new();
    for (first, second, word, left, right) in ambiguities(p) {
        let difference = p.normal_form(&(&left - &right))?;
        if !difference.is_zero() {
            failures.push(CriticalPair { first, second, word, difference });
        }
    }
    Ok(failures)
}
