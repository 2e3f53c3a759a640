use num_rational::BigRational;

use super::element::{Element, GenId, Word};
use super::presentation::Presentation;
use crate::error::{Error, Result};

/// An algebra map given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct MorphismSpec {
    pub name: String,
    pub source: Presentation,
    pub target: Presentation,
    /// Indexed by source generator id.
    pub images: Vec<Element>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorphismReport {
    /// Source rules whose image does not reduce to zero, with the residue.
    pub relation_failures: Vec<(usize, Element)>,
    /// Source generators with `φ(g*) ≠ φ(g)*`, with the residue.
    pub star_failures: Vec<(GenId, Element)>,
}

impl MorphismReport {
    pub fn relations_ok(&self) -> bool {
        self.relation_failures.is_empty()
    }

    pub fn is_ok(&self) -> bool {
        self.relation_failures.is_empty() && self.star_failures.is_empty()
    }
}

impl MorphismSpec {
    /// Builds a morphism from `(source generator, target expression)` pairs.
    pub fn from_texts(
        name: &str,
        source: &Presentation,
        target: &Presentation,
        images: &[(&str, &str)],
    ) -> Result<Self> {
        let mut imgs = vec![None; source.gen_count()];
        for (g, text) in images {
            let id = source.gen(g)?;
            imgs[id as usize] = Some(target.elem(text)?);
        }
        let images = imgs
            .into_iter()
            .enumerate()
            .map(|(i, e)| {
                e.ok_or_else(|| Error::Invalid(format!("no image for generator `{}`", source.gen_name(i as GenId))))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MorphismSpec { name: name.to_string(), source: source.clone(), target: target.clone(), images })
    }

    pub fn identity(p: &Presentation) -> Self {
        MorphismSpec {
            name: format!("id:{}", p.name),
            source: p.clone(),
            target: p.clone(),
            images: (0..p.gen_count() as GenId).map(Element::gen).collect(),
        }
    }

    pub fn apply_word(&self, w: &Word) -> Result<Element> {
        substitute_word(&self.target, &self.images, w)
    }

    /// Substitutes the images and reduces in the target.
    pub fn apply(&self, e: &Element) -> Result<Element> {
        substitute(&self.target, &self.images, e)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &MorphismSpec) -> Result<MorphismSpec> {
        let images = self.images.iter().map(|e| other.apply(e)).collect::<Result<Vec<_>>>()?;
        Ok(MorphismSpec {
            name: format!("{}∘{}", other.name, self.name),
            source: self.source.clone(),
            target: other.target.clone(),
            images,
        })
    }

    pub fn specialize(&self, v: &BigRational) -> Result<MorphismSpec> {
        Ok(MorphismSpec {
            name: self.name.clone(),
            source: self.source.specialize(v)?,
            target: self.target.specialize(v)?,
            images: self.images.iter().map(|e| e.specialize(v)).collect::<Result<_>>()?,
        })
    }

    /// Checks every source relation maps to zero; with `check_star`, also the
    /// compatibility with the involutions.
    pub fn verify_with(&self, check_star: bool) -> Result<MorphismReport> {
        let mut report = MorphismReport::default();
        for (i, r) in self.source.rules().iter().enumerate() {
            let lhs = self.apply_word(&r.lhs)?;
            let rhs = self.apply(&r.rhs)?;
            let residue = self.target.normal_form(&(&lhs - &rhs))?;
            if !residue.is_zero() {
                report.relation_failures.push((i, residue));
            }
        }
        if check_star {
            for g in 0..self.source.gen_count() as GenId {
                let via_source = self.apply(&self.source.star_image(g))?;
                let via_target = self.target.star_element(&self.images[g as usize])?;
                let residue = self.target.normal_form(&(&via_source - &via_target))?;
                if !residue.is_zero() {
                    report.star_failures.push((g, residue));
                }
            }
        }
        Ok(report)
    }

    pub fn verify(&self) -> Result<MorphismReport> {
        self.verify_with(true)
    }
}

fn substitute_word(target: &Presentation, images: &[Element], w: &Word) -> Result<Element> {
    let mut acc = Element::one();
    for &g in w.letters() {
        acc = target.mul(&acc, &images[g as usize])?;
    }
    Ok(acc)
}

/// Replaces each generator `g` of `e` by `images[g]` and reduces in `target`.
pub fn substitute(target: &Presentation, images: &[Element], e: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (w, c) in e.terms() {
        out = &out + &substitute_word(target, images, w)?.scale(c);
    }
    target.normal_form(&out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismReport {
    pub relations: MorphismReport,
    /// Whether the `order`-fold composite fixes every generator, when asked.
    pub order_ok: Option<bool>,
    pub star_compatible: bool,
}

impl AutomorphismReport {
    pub fn is_ok(&self) -> bool {
        self.relations.relations_ok() && self.order_ok.unwrap_or(true)
    }
}

/// Checks that a generator map preserves all rules and, if `order` is given,
/// that its `order`-fold composite is the identity on generators.
pub fn verify_automorphism(p: &Presentation, images: &[Element], order: Option<u32>) -> Result<AutomorphismReport> {
    let m = MorphismSpec { name: "endo".into(), source: p.clone(), target: p.clone(), images: images.to_vec() };
    let relations = m.verify_with(true)?;
    let star_compatible = relations.star_failures.is_empty();
    let order_ok = match order {
        None => None,
        Some(n) => {
            let mut ok = true;
            for g in 0..p.gen_count() as GenId {
                let mut e = Element::gen(g);
                for _ in 0..n {
                    e = m.apply(&e)?;
                }
                ok &= e == Element::gen(g);
            }
            Some(ok)
        }
    };
    Ok(AutomorphismReport { relations, order_ok, star_compatible })
}
