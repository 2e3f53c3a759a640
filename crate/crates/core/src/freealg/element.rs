use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::Result;
use crate::scalars::{ParamMode, Scalar};

/// Index of a generator in its presentation; the index is also its
/// precedence rank in the term order.
pub type GenId = u16;

/// A word in the generators; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: GenId) -> Self {
        Word(vec![g])
    }

    pub fn pow(g: GenId, n: usize) -> Self {
        Word(vec![g; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn letters(&self) -> &[GenId] {
        &self.0
    }
}

impl From<Vec<GenId>> for Word {
    fn from(v: Vec<GenId>) -> Self {
        Word(v)
    }
}

/// A finite ℚ(t)-linear combination of words with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        Self::term(s, Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(Scalar::one(), w)
    }

    pub fn gen(g: GenId) -> Self {
        Self::word(Word::gen(g))
    }

    pub fn term(s: Scalar, w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, s);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut e = Self::zero();
        for (w, s) in terms {
            e.add_term(w, s);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, s: Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(s);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &s;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The value when the element is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect() }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn try_map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Result<Scalar>) -> Result<Self> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn conjugate_coeffs(&self, mode: ParamMode) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.conjugate(mode));
        }
        out
    }

    pub fn specialize(&self, v: &BigRational) -> Result<Self> {
        self.try_map_coeffs(|c| c.specialize(v))
    }

    /// Concatenation product extended bilinearly (no reduction).
    pub fn mul_raw(&self, rhs: &Element) -> Element {
        let mut out = Element::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.mul_raw(rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<Scalar> for Element {
    fn from(s: Scalar) -> Self {
        Element::scalar(s)
    }
}
