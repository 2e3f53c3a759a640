use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::Result;
use crate::freealg::{Element, Presentation, Word};
use crate::scalars::{QPoly, Scalar};

/// A finite sum of `s · (u ⊗ v)` with both legs irreducible words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 ⊗ 1`.
    pub fn one() -> Self {
        let mut t = Self::zero();
        t.add_term(Word::empty(), Word::empty(), Scalar::one());
        t
    }

    pub fn add_term(&mut self, u: Word, v: Word, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry((u, v)) {
            Entry::Vacant(slot) => {
                slot.insert(s);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &s;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `s · (a ⊗ b)` for already reduced elements.
    pub fn add_product(&mut self, a: &Element, b: &Element, s: &Scalar) {
        for (u, cu) in a.terms() {
            let su = s * cu;
            for (v, cv) in b.terms() {
                self.add_term(u.clone(), v.clone(), &su * cv);
            }
        }
    }

    /// `a ⊗ b`, with both legs reduced first.
    pub fn from_pair(p: &Presentation, a: &Element, b: &Element) -> Result<Self> {
        let mut t = Self::zero();
        t.add_product(&p.normal_form(a)?, &p.normal_form(b)?, &Scalar::one());
        Ok(t)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Scalar)> {
        self.terms.iter().map(|((u, v), s)| (u, v, s))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for ((u, v), c) in &self.terms {
            out.add_term(u.clone(), v.clone(), c * s);
        }
        out
    }

    pub fn add(&self, other: &TensorElement) -> Self {
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> Self {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn specialize(&self, v: &BigRational) -> Result<Self> {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            out.add_term(a.clone(), b.clone(), c.specialize(v)?);
        }
        Ok(out)
    }

    /// Applies maps to each leg (the results must be reduced) and recollects.
    pub fn map_legs(
        &self,
        mut left: impl FnMut(&Word) -> Result<Element>,
        mut right: impl FnMut(&Word) -> Result<Element>,
    ) -> Result<Self> {
        let mut lcache: BTreeMap<&Word, Element> = BTreeMap::new();
        let mut rcache: BTreeMap<&Word, Element> = BTreeMap::new();
        let mut out = Self::zero();
        for ((u, v), c) in &self.terms {
            if !lcache.contains_key(u) {
                lcache.insert(u, left(u)?);
            }
            if !rcache.contains_key(v) {
                rcache.insert(v, right(v)?);
            }
            out.add_product(&lcache[u], &rcache[v], c);
        }
        Ok(out)
    }

    /// Monic lcm of all coefficient denominators.
    pub fn common_denominator(&self) -> QPoly {
        let mut den = QPoly::one();
        for c in self.terms.values() {
            let d = c.denom();
            if d.is_one() || *d == den {
                continue;
            }
            let g = QPoly::gcd(&den, d);
            den = &den * &d.div_rem(&g).0;
        }
        den.monic()
    }

    /// Distinct first legs and second legs.
    pub fn legs(&self) -> (Vec<Word>, Vec<Word>) {
        let mut l: Vec<Word> = self.terms.keys().map(|(u, _)| u.clone()).collect();
        let mut r: Vec<Word> = self.terms.keys().map(|(_, v)| v.clone()).collect();
        l.sort();
        l.dedup();
        r.sort();
        r.dedup();
        (l, r)
    }

    /// Text such as `2 * alpha ⊗ alphastar + beta ⊗ 1`.
    pub fn to_text(&self, p: &Presentation) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for ((u, v), c) in &self.terms {
            let coeff = if c.is_one() { String::new() } else { format!("({}) * ", p.fmt_scalar(c)) };
            parts.push(format!("{coeff}{} ⊗ {}", p.fmt_word(u), p.fmt_word(v)));
        }
        parts.join(" + ")
    }
}

/// Multiplication map: `Σ s · NF(u v)`.
pub fn tensor_mu(p: &Presentation, t: &TensorElement) -> Result<Element> {
    // group second legs by first leg so each left word is multiplied once
    let mut grouped: BTreeMap<&Word, Element> = BTreeMap::new();
    for ((u, v), c) in &t.terms {
        grouped.entry(u).or_default().add_term(v.clone(), c.clone());
    }
    let mut raw = Element::zero();
    for (u, rest) in grouped {
        raw = &raw + &Element::word(u.clone()).mul_raw(&rest);
    }
    p.normal_form(&raw)
}

/// `left · t · right`, multiplying onto the first and second legs.
pub fn tensor_sandwich(p: &Presentation, left: &Element, t: &TensorElement, right: &Element) -> Result<TensorElement> {
    t.map_legs(
        |u| p.normal_form(&left.mul_raw(&Element::word(u.clone()))),
        |v| p.normal_form(&Element::word(v.clone()).mul_raw(right)),
    )
}
