//! Degree-one generalized Weyl algebras over K[a].

use crate::error::{Error, Result};
use crate::freealg::{verify_automorphism, AutomorphismReport, Element, GenId, Presentation, Star, Word};
use crate::scalars::{Parameter, Scalar, UniPoly};

/// `π(a) = κa + χ` together with the polynomial `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwaSpec {
    pub kappa: Scalar,
    pub chi: Scalar,
    pub p: UniPoly,
}

impl GwaSpec {
    pub fn new(kappa: Scalar, chi: Scalar, p: UniPoly) -> Result<Self> {
        if kappa.is_zero() {
            return Err(Error::ZeroKappa);
        }
        Ok(GwaSpec { kappa, chi, p })
    }

    pub fn pi(&self, f: &UniPoly) -> UniPoly {
        f.compose_linear(&self.kappa, &self.chi)
    }

    /// `π⁻¹(a) = κ⁻¹(a − χ)`.
    pub fn pi_inv(&self, f: &UniPoly) -> Result<UniPoly> {
        let k = self.kappa.inv()?;
        Ok(f.compose_linear(&k, &-(&k * &self.chi)))
    }
}

/// `Σ c_k a^k` as an element.
pub fn poly_to_element(f: &UniPoly, a: GenId) -> Element {
    Element::from_terms(f.coeffs().iter().enumerate().map(|(k, c)| (Word::pow(a, k), c.clone())))
}

/// Reads an element back as a polynomial in `a`, if it only involves powers of `a`.
pub fn element_to_poly(e: &Element, a: GenId) -> Option<UniPoly> {
    let mut coeffs = Vec::new();
    for (w, c) in e.terms() {
        if w.letters().iter().any(|&g| g != a) {
            return None;
        }
        if coeffs.len() <= w.len() {
            coeffs.resize(w.len() + 1, Scalar::zero());
        }
        coeffs[w.len()] = c.clone();
    }
    Some(UniPoly::from_coeffs(coeffs))
}

/// The presentation on `a, xp, xm` with `xp* = xm`.
pub fn gwa_presentation(s: &GwaSpec, param: Parameter) -> Result<Presentation> {
    if s.kappa.is_zero() {
        return Err(Error::ZeroKappa);
    }
    let d = s.p.degree().unwrap_or(0).max(1) as u32;
    let mut pres = Presentation::new("gwa", param);
    let a = pres.add_gen("a", 1);
    let xp = pres.add_gen("xp", d + 1);
    let xm = pres.add_gen("xm", d + 1);
    pres.set_star(a, Star::SelfAdjoint);
    pres.pair_star(xp, xm);
    let pi_a = UniPoly::from_coeffs(vec![s.chi.clone(), s.kappa.clone()]);
    let pi_inv_a = s.pi_inv(&UniPoly::var())?;
    pres.add_rule(Word(vec![xp, a]), poly_to_element(&pi_a, a).mul_raw(&Element::gen(xp)));
    pres.add_rule(Word(vec![xm, a]), poly_to_element(&pi_inv_a, a).mul_raw(&Element::gen(xm)));
    pres.add_rule(Word(vec![xm, xp]), poly_to_element(&s.p, a));
    pres.add_rule(Word(vec![xp, xm]), poly_to_element(&s.pi(&s.p), a));
    Ok(pres)
}

/// One orientation `(x₊, x₋)` tried by [`gwa_match`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwaCandidate {
    pub plus: String,
    pub minus: String,
    /// Inferred from `x₊a = (κa + χ)x₊`, when it has that shape.
    pub kappa: Option<Scalar>,
    pub chi: Option<Scalar>,
    /// Read from `x₋x₊`, when it is a polynomial in `a`.
    pub p: Option<UniPoly>,
    pub twist_plus_ok: bool,
    pub twist_minus_ok: bool,
    pub product_ok: bool,
}

impl GwaCandidate {
    pub fn matched(&self) -> bool {
        self.twist_plus_ok && self.twist_minus_ok && self.product_ok
    }

    pub fn spec(&self) -> Option<GwaSpec> {
        if !self.matched() {
            return None;
        }
        GwaSpec::new(self.kappa.clone()?, self.chi.clone()?, self.p.clone()?).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwaMatchReport {
    pub candidates: Vec<GwaCandidate>,
}

impl GwaMatchReport {
    pub fn first_match(&self) -> Option<&GwaCandidate> {
        self.candidates.iter().find(|c| c.matched())
    }
}

/// Tries both orientations `(b, b*)` and `(b*, b)` and verifies the axioms.
pub fn gwa_match(pres: &Presentation, a: &str, b: &str) -> Result<GwaMatchReport> {
    let ga = pres.gen(a)?;
    let gb = pres.gen(b)?;
    let star = pres.star_image(gb);
    let gbs = match star.terms().next() {
        Some((w, c)) if star.len() == 1 && c.is_one() && w.len() == 1 => w.letters()[0],
        _ => return Err(Error::Invalid(format!("`{b}` needs a generator as its star image"))),
    };
    let mut candidates = Vec::new();
    for (plus, minus) in [(gb, gbs), (gbs, gb)] {
        candidates.push(match_orientation(pres, ga, plus, minus)?);
    }
    Ok(GwaMatchReport { candidates })
}

fn match_orientation(pres: &Presentation, a: GenId, plus: GenId, minus: GenId) -> Result<GwaCandidate> {
    let mut cand = GwaCandidate {
        plus: pres.gen_name(plus).to_string(),
        minus: pres.gen_name(minus).to_string(),
        kappa: None,
        chi: None,
        p: None,
        twist_plus_ok: false,
        twist_minus_ok: false,
        product_ok: false,
    };
    let xa = pres.nf_word(&Word(vec![plus, a]))?;
    let kappa = xa.coefficient(&Word(vec![a, plus]));
    let chi = xa.coefficient(&Word(vec![plus]));
    let shape = Element::from_terms([(Word(vec![a, plus]), kappa.clone()), (Word(vec![plus]), chi.clone())]);
    let p = pres.nf_word(&Word(vec![minus, plus])).map(|e| element_to_poly(&e, a))?;
    cand.p = p.clone();
    if kappa.is_zero() || xa != shape {
        return Ok(cand);
    }
    cand.twist_plus_ok = true;
    let spec = GwaSpec::new(kappa.clone(), chi.clone(), p.clone().unwrap_or_default())?;
    cand.kappa = Some(kappa);
    cand.chi = Some(chi);
    let inv_a = poly_to_element(&spec.pi_inv(&UniPoly::var())?, a);
    let lhs = pres.nf_word(&Word(vec![minus, a]))?;
    let rhs = pres.mul(&inv_a, &Element::gen(minus))?;
    cand.twist_minus_ok = lhs == rhs;
    if let Some(p) = p {
        let plus_minus = pres.nf_word(&Word(vec![plus, minus]))?;
        let pi_p = pres.normal_form(&poly_to_element(&spec.pi(&p), a))?;
        cand.product_ok = plus_minus == pi_p;
    }
    Ok(cand)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    SmoothDim2,
    NotSmooth,
}

impl Smoothness {
    pub fn label(self) -> &'static str {
        match self {
            Smoothness::SmoothDim2 => "smooth-dim-2",
            Smoothness::NotSmooth => "not-smooth",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub verdict: Smoothness,
    /// Monic `gcd(p, p′)`.
    pub gcd: UniPoly,
    /// `(s, t)` with `s·p + t·p′ = gcd`.
    pub bezout: (UniPoly, UniPoly),
}

/// Smooth iff `p` has no repeated roots, i.e. `gcd(p, p′)` is constant.
pub fn smoothness_check(s: &GwaSpec) -> Result<SmoothnessReport> {
    if s.p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dp = s.p.derivative();
    let (gcd, u, v) = UniPoly::gcd_ext(&s.p, &dp)?;
    let verdict = if gcd.degree() == Some(0) { Smoothness::SmoothDim2 } else { Smoothness::NotSmooth };
    Ok(SmoothnessReport { verdict, gcd, bezout: (u, v) })
}

/// Re-derives the verdict from the witnesses without running Euclid.
pub fn recheck_smoothness(s: &GwaSpec, report: &SmoothnessReport) -> Result<bool> {
    let dp = s.p.derivative();
    let combo = &(&report.bezout.0 * &s.p) + &(&report.bezout.1 * &dp);
    if combo != report.gcd {
        return Ok(false);
    }
    let divides = |f: &UniPoly| -> Result<bool> { Ok(f.div_rem(&report.gcd)?.1.is_zero()) };
    if !divides(&s.p)? || !divides(&dp)? {
        return Ok(false);
    }
    Ok((report.gcd.degree() == Some(0)) == (report.verdict == Smoothness::SmoothDim2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NakayamaReport {
    /// `ν(x±) = κ^{±1} x±`.
    pub direct: AutomorphismReport,
    /// `ν(x±) = κ^{∓1} x±`.
    pub inverse: AutomorphismReport,
    /// The two maps compose to the identity on generators.
    pub composite_is_identity: bool,
}

/// Nakayama automorphism images: `x₊ ↦ c x₊`, `x₋ ↦ c⁻¹ x₋`, all else fixed.
pub fn nakayama_images(pres: &Presentation, plus: GenId, minus: GenId, c: &Scalar) -> Result<Vec<Element>> {
    let cinv = c.inv()?;
    Ok((0..pres.gen_count() as GenId)
        .map(|g| {
            if g == plus {
                Element::term(c.clone(), Word::gen(g))
            } else if g == minus {
                Element::term(cinv.clone(), Word::gen(g))
            } else {
                Element::gen(g)
            }
        })
        .collect())
}

/// Runs both sign conventions through the automorphism check.
pub fn nakayama_check(s: &GwaSpec, pres: &Presentation, plus: &str, minus: &str) -> Result<NakayamaReport> {
    let gp = pres.gen(plus)?;
    let gm = pres.gen(minus)?;
    let direct_images = nakayama_images(pres, gp, gm, &s.kappa)?;
    let inverse_images = nakayama_images(pres, gp, gm, &s.kappa.inv()?)?;
    let direct = verify_automorphism(pres, &direct_images, None)?;
    let inverse = verify_automorphism(pres, &inverse_images, None)?;
    let mut composite_is_identity = true;
    for g in 0..pres.gen_count() as GenId {
        let once = crate::freealg::substitute(pres, &direct_images, &Element::gen(g))?;
        let back = crate::freealg::substitute(pres, &inverse_images, &once)?;
        composite_is_identity &= back == Element::gen(g);
    }
    Ok(NakayamaReport { direct, inverse, composite_is_identity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::confluence_check;

    fn q(k: i64) -> Scalar {
        Scalar::t_pow(k)
    }

    fn teardrop_p() -> UniPoly {
        UniPoly::from_coeffs(vec![Scalar::zero(), Scalar::one(), -q(-2)])
    }

    #[test]
    fn presentation_is_confluent_and_matches_itself() {
        let s = GwaSpec::new(q(2), Scalar::zero(), teardrop_p()).unwrap();
        let pres = gwa_presentation(&s, Parameter::real("q")).unwrap();
        assert!(confluence_check(&pres).unwrap().is_empty());
        let report = gwa_match(&pres, "a", "xp").unwrap();
        let first = report.first_match().unwrap();
        assert_eq!(first.plus, "xp");
        assert_eq!(first.spec().unwrap(), s);
    }

    #[test]
    fn zero_kappa_is_rejected() {
        assert_eq!(GwaSpec::new(Scalar::zero(), Scalar::zero(), UniPoly::var()), Err(Error::ZeroKappa));
    }

    #[test]
    fn smoothness_verdicts() {
        let s = GwaSpec::new(q(2), Scalar::zero(), teardrop_p()).unwrap();
        let r = smoothness_check(&s).unwrap();
        assert_eq!(r.verdict, Smoothness::SmoothDim2);
        assert_eq!(r.gcd, UniPoly::one());
        assert!(recheck_smoothness(&s, &r).unwrap());

        let sq = &UniPoly::monomial(Scalar::one(), 2) * &teardrop_p();
        let s2 = GwaSpec::new(q(2), Scalar::zero(), sq).unwrap();
        let r2 = smoothness_check(&s2).unwrap();
        assert_eq!(r2.verdict, Smoothness::NotSmooth);
        assert_eq!(r2.gcd, UniPoly::monomial(Scalar::one(), 2));
        assert!(recheck_smoothness(&s2, &r2).unwrap());

        let zero = GwaSpec::new(q(2), Scalar::zero(), UniPoly::zero()).unwrap();
        assert_eq!(smoothness_check(&zero), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn nakayama_on_generic_gwa() {
        let s = GwaSpec::new(q(2), Scalar::from_int(3), teardrop_p()).unwrap();
        let pres = gwa_presentation(&s, Parameter::real("q")).unwrap();
        let r = nakayama_check(&s, &pres, "xp", "xm").unwrap();
        assert!(r.direct.relations.relations_ok());
        assert!(r.composite_is_identity);
    }
}
