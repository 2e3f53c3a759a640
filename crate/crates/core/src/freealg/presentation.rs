use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_rational::BigRational;

use super::element::{Element, GenId, Word};
use crate::error::{Error, Result};
use crate::scalars::{Parameter, Scalar};

/// Default reduction budget per normal-form call.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Star image of a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Star {
    SelfAdjoint,
    Image(Element),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    /// Weight in the graded part of the term order.
    pub weight: u32,
    pub star: Star,
}

/// An oriented relation `lhs → rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Element,
}

/// Generators with star structure plus oriented rewrite rules.
///
/// Generator indices double as precedence ranks; words are compared by total
/// weight first and then lexicographically by rank.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub param: Parameter,
    gens: Vec<Generator>,
    rules: Vec<RewriteRule>,
    by_first: Vec<Vec<usize>>,
    fuel: u64,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.param == other.param && self.gens == other.gens && self.rules == other.rules
    }
}

impl Presentation {
    pub fn new(name: impl Into<String>, param: Parameter) -> Self {
        Presentation {
            name: name.into(),
            param,
            gens: Vec::new(),
            rules: Vec::new(),
            by_first: Vec::new(),
            fuel: DEFAULT_FUEL,
        }
    }

    /// Declares a generator; its star image defaults to self-adjoint.
    pub fn add_gen(&mut self, name: &str, weight: u32) -> GenId {
        assert!(weight > 0, "generator weights must be positive");
        let id = GenId::try_from(self.gens.len()).expect("too many generators");
        self.gens.push(Generator { name: name.to_string(), weight, star: Star::SelfAdjoint });
        self.by_first.push(Vec::new());
        id
    }

    pub fn set_star(&mut self, g: GenId, star: Star) {
        self.gens[g as usize].star = star;
    }

    /// Declares `a` and `b` as each other's adjoints.
    pub fn pair_star(&mut self, a: GenId, b: GenId) {
        self.set_star(a, Star::Image(Element::gen(b)));
        self.set_star(b, Star::Image(Element::gen(a)));
    }

    pub fn add_rule(&mut self, lhs: Word, rhs: Element) {
        assert!(!lhs.is_empty(), "rule left-hand side must be a nonempty word");
        self.by_first[lhs.0[0] as usize].push(self.rules.len());
        self.rules.push(RewriteRule { lhs, rhs });
    }

    /// Replaces every right-hand side by its normal form under the full system.
    pub fn normalize_rules(&mut self) -> Result<()> {
        for i in 0..self.rules.len() {
            let rhs = self.normal_form(&self.rules[i].rhs)?;
            self.rules[i].rhs = rhs;
        }
        Ok(())
    }

    pub fn with_fuel(mut self, fuel: u64) -> Self {
        self.fuel = fuel;
        self
    }

    pub fn set_fuel(&mut self, fuel: u64) {
        self.fuel = fuel;
    }

    pub fn fuel(&self) -> u64 {
        self.fuel
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn gen_count(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_id(&self, name: &str) -> Option<GenId> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as GenId)
    }

    /// Looks up a generator, failing with a descriptive error.
    pub fn gen(&self, name: &str) -> Result<GenId> {
        self.gen_id(name).ok_or_else(|| Error::Unknown { kind: "generator", name: name.to_string() })
    }

    pub fn gen_name(&self, g: GenId) -> &str {
        &self.gens[g as usize].name
    }

    pub fn weight(&self, w: &Word) -> u32 {
        w.0.iter().map(|&g| self.gens[g as usize].weight).sum()
    }

    /// The term order: weighted degree, then lexicographic by rank.
    pub fn cmp_words(&self, a: &Word, b: &Word) -> Ordering {
        self.weight(a).cmp(&self.weight(b)).then_with(|| a.0.cmp(&b.0))
    }

    /// Leftmost position and first matching rule, if the word is reducible.
    pub fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        for pos in 0..w.0.len() {
            for &ri in &self.by_first[w.0[pos] as usize] {
                if w.0[pos..].starts_with(&self.rules[ri].lhs.0) {
                    return Some((pos, ri));
                }
            }
        }
        None
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_none()
    }

    /// Reduces to the unique combination of irreducible words.
    ///
    /// Terms are processed largest-first in the term order, so every word is
    /// rewritten at most once after all its contributions have merged.
    pub fn normal_form(&self, e: &Element) -> Result<Element> {
        let mut pending: BTreeMap<(u32, Word), Scalar> = BTreeMap::new();
        for (w, c) in e.terms() {
            pending.insert((self.weight(w), w.clone()), c.clone());
        }
        let mut out = Element::zero();
        let mut steps: u64 = 0;
        while let Some(((_, w), c)) = pending.pop_last() {
            let Some((pos, ri)) = self.find_redex(&w) else {
                out.add_term(w, c);
                continue;
            };
            steps += 1;
            if steps > self.fuel {
                return Err(Error::FuelExhausted { budget: self.fuel });
            }
            let rule = &self.rules[ri];
            let tail = &w.0[pos + rule.lhs.len()..];
            for (rw, rc) in rule.rhs.terms() {
                let mut v = Vec::with_capacity(pos + rw.len() + tail.len());
                v.extend_from_slice(&w.0[..pos]);
                v.extend_from_slice(&rw.0);
                v.extend_from_slice(tail);
                let nw = Word(v);
                let coeff = &c * rc;
                match pending.entry((self.weight(&nw), nw)) {
                    Entry::Vacant(slot) => {
                        slot.insert(coeff);
                    }
                    Entry::Occupied(mut slot) => {
                        let sum = slot.get() + &coeff;
                        if sum.is_zero() {
                            slot.remove();
                        } else {
                            *slot.get_mut() = sum;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn nf_word(&self, w: &Word) -> Result<Element> {
        self.normal_form(&Element::word(w.clone()))
    }

    /// Normal form of a product.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.normal_form(&a.mul_raw(b))
    }

    /// Normal form of `e^n`, reducing after each factor.
    pub fn pow(&self, e: &Element, n: usize) -> Result<Element> {
        let mut acc = Element::one();
        for _ in 0..n {
            acc = self.mul(&acc, e)?;
        }
        Ok(acc)
    }

    /// Normal form of a product of several elements, reducing as it goes.
    pub fn product(&self, factors: &[&Element]) -> Result<Element> {
        let mut acc = Element::one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn star_image(&self, g: GenId) -> Element {
        match &self.gens[g as usize].star {
            Star::SelfAdjoint => Element::gen(g),
            Star::Image(e) => e.clone(),
        }
    }

    /// Star of a word, unreduced: reversed product of the star images.
    pub fn star_word_raw(&self, w: &Word) -> Element {
        let mut acc = Element::one();
        for &g in w.0.iter().rev() {
            acc = acc.mul_raw(&self.star_image(g));
        }
        acc
    }

    /// Antilinear, antimultiplicative extension of the star images (unreduced).
    pub fn star_raw(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            let s = self.star_word_raw(w).scale(&c.conjugate(self.param.mode));
            out = &out + &s;
        }
        out
    }

    pub fn star_element(&self, e: &Element) -> Result<Element> {
        // reduce letter by letter to keep intermediate sizes small
        let mut out = Element::zero();
        for (w, c) in e.terms() {
            let mut acc = Element::one();
            for &g in w.0.iter().rev() {
                acc = self.mul(&acc, &self.star_image(g))?;
            }
            out = &out + &acc.scale(&c.conjugate(self.param.mode));
        }
        self.normal_form(&out)
    }

    /// Copy with every coefficient evaluated at `t = v`.
    ///
    /// Only normal forms are meaningful in the copy; the involution no longer
    /// acts on the (now constant) coefficients.
    pub fn specialize(&self, v: &BigRational) -> Result<Presentation> {
        let mut out = self.clone();
        for g in &mut out.gens {
            if let Star::Image(e) = &g.star {
                g.star = Star::Image(e.specialize(v)?);
            }
        }
        for r in &mut out.rules {
            r.rhs = r.rhs.specialize(v)?;
        }
        out.name = format!("{}@{}", self.name, v);
        Ok(out)
    }

    /// Words built from `name.name^k...`, `1` for the identity.
    pub fn word_of(&self, text: &str) -> Result<Word> {
        let e = self.parse_element(text)?;
        let single = match e.terms().next() {
            Some((w, c)) if e.len() == 1 && c.is_one() => Some(w.clone()),
            _ => None,
        };
        single.ok_or_else(|| Error::Invalid(format!("`{text}` is not a single word")))
    }

    pub fn parse_element(&self, text: &str) -> Result<Element> {
        super::text::parse_element(self, text)
    }

    /// Parses and reduces.
    pub fn elem(&self, text: &str) -> Result<Element> {
        self.normal_form(&self.parse_element(text)?)
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        super::text::format_word(self, w)
    }

    pub fn fmt_element(&self, e: &Element) -> String {
        super::text::format_element(self, e)
    }

    pub fn fmt_scalar(&self, s: &Scalar) -> String {
        s.to_text(&self.param.name)
    }

    /// Inline string for a rule, e.g. `beta.alpha -> 1/q * alpha.beta`.
    pub fn fmt_rule(&self, idx: usize) -> String {
        let r = &self.rules[idx];
        format!("{} -> {}", self.fmt_word(&r.lhs), self.fmt_element(&r.rhs))
    }
}
