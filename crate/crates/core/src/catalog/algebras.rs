use crate::freealg::{Element, Presentation, Star};
use crate::scalars::{pochhammer, Parameter, Scalar};

fn q(k: i64) -> Scalar {
    Scalar::t_pow(k)
}

fn w(p: &Presentation, text: &str) -> Element {
    p.parse_element(text).unwrap_or_else(|e| panic!("catalog word `{text}`: {e}"))
}

fn rule(p: &mut Presentation, lhs: &str, rhs: Element) {
    let word = p.word_of(lhs).unwrap_or_else(|e| panic!("catalog rule `{lhs}`: {e}"));
    p.add_rule(word, rhs);
}

/// `c · word`.
fn cw(p: &Presentation, c: Scalar, text: &str) -> Element {
    w(p, text).scale(&c)
}

/// `(x a; base)_n` with `a` replaced by the element `a`.
fn poch(a: &Element, x: Scalar, base: Scalar, n: usize) -> Element {
    let poly = pochhammer(&x, &base, n);
    let mut out = Element::zero();
    let mut power = Element::one();
    for c in poly.coeffs() {
        out = &out + &power.scale(c);
        power = power.mul_raw(a);
    }
    out
}

/// `(a; q²)_n`.
fn poch_up(a: &Element, n: usize) -> Element {
    poch(a, Scalar::one(), q(2), n)
}

/// `(q⁻²a; q⁻²)_n`.
fn poch_down(a: &Element, n: usize) -> Element {
    poch(a, q(-2), q(-2), n)
}

fn finish(mut p: Presentation) -> Presentation {
    p.normalize_rules().expect("catalog rules reduce");
    p
}

/// Noncommutative torus: unitaries `U`, `V` with `UV = λVU`.
pub fn torus() -> Presentation {
    let mut p = Presentation::new("torus", Parameter::unitary("lambda"));
    let u = p.add_gen("U", 1);
    let us = p.add_gen("Ustar", 1);
    let v = p.add_gen("V", 1);
    let vs = p.add_gen("Vstar", 1);
    p.pair_star(u, us);
    p.pair_star(v, vs);
    for (lhs, c, rhs) in [
        ("V.U", q(-1), "U.V"),
        ("V.Ustar", q(1), "Ustar.V"),
        ("Vstar.U", q(1), "U.Vstar"),
        ("Vstar.Ustar", q(-1), "Ustar.Vstar"),
    ] {
        let e = cw(&p, c, rhs);
        rule(&mut p, lhs, e);
    }
    for lhs in ["U.Ustar", "Ustar.U", "V.Vstar", "Vstar.V"] {
        rule(&mut p, lhs, Element::one());
    }
    finish(p)
}

/// Quantum 3-sphere: `αβ = qβα`, `αβ* = qβ*α`, `ββ* = β*β`,
/// `αα* + ββ* = 1`, `α*α + q⁻²ββ* = 1`.
pub fn su2q() -> Presentation {
    let mut p = Presentation::new("su2q", Parameter::real("q"));
    let a = p.add_gen("alpha", 2);
    let as_ = p.add_gen("alphastar", 2);
    let b = p.add_gen("beta", 1);
    let bs = p.add_gen("betastar", 1);
    p.pair_star(a, as_);
    p.pair_star(b, bs);
    let rules = [
        ("beta.alpha", cw(&p, q(-1), "alpha.beta")),
        ("betastar.alpha", cw(&p, q(-1), "alpha.betastar")),
        ("betastar.beta", w(&p, "beta.betastar")),
        ("beta.alphastar", cw(&p, q(1), "alphastar.beta")),
        ("betastar.alphastar", cw(&p, q(1), "alphastar.betastar")),
        ("alpha.alphastar", &Element::one() - &w(&p, "beta.betastar")),
        ("alphastar.alpha", &Element::one() - &cw(&p, q(-2), "beta.betastar")),
    ];
    for (lhs, rhs) in rules {
        rule(&mut p, lhs, rhs);
    }
    finish(p)
}

/// Quantum lens space `L(l;1,l)` on `c`, `d`.
pub fn lens(l: u32) -> Presentation {
    let li = l as i64;
    let n = l as usize;
    let mut p = Presentation::new("lens", Parameter::real("q"));
    let c = p.add_gen("c", l + 1);
    let cs = p.add_gen("cstar", l + 1);
    let d = p.add_gen("d", 1);
    let ds = p.add_gen("dstar", 1);
    p.pair_star(c, cs);
    p.pair_star(d, ds);
    let a = w(&p, "d.dstar");
    let rules = [
        ("d.c", cw(&p, q(-li), "c.d")),
        ("dstar.c", cw(&p, q(-li), "c.dstar")),
        ("dstar.d", w(&p, "d.dstar")),
        ("d.cstar", cw(&p, q(li), "cstar.d")),
        ("dstar.cstar", cw(&p, q(li), "cstar.dstar")),
        ("c.cstar", poch_up(&a, n)),
        ("cstar.c", poch_down(&a, n)),
    ];
    for (lhs, rhs) in rules {
        rule(&mut p, lhs, rhs);
    }
    finish(p)
}

/// The algebra `A(k,l)`: `a = a*`, `ba = q^{2e} ab`, `bb* = q^{2kl} a^k (a;q²)_l`,
/// `b*b = a^k (q⁻²a;q⁻²)_l`, with `e = kl` when `printed` and `e = l` otherwise.
pub fn weyl(k: u32, l: u32, printed: bool) -> Presentation {
    let (ki, li) = (k as i64, l as i64);
    let e = if printed { ki * li } else { li };
    let name = if printed {
        "A-printed"
    } else if k == 1 {
        "teardrop"
    } else {
        "A"
    };
    let mut p = Presentation::new(name, Parameter::real("q"));
    let a = p.add_gen("a", 1);
    let b = p.add_gen("b", k + l + 1);
    let bs = p.add_gen("bstar", k + l + 1);
    p.set_star(a, Star::SelfAdjoint);
    p.pair_star(b, bs);
    let av = w(&p, "a");
    let ak = Element::word(crate::freealg::Word::pow(a, k as usize));
    let rules = [
        ("b.a", cw(&p, q(2 * e), "a.b")),
        ("bstar.a", cw(&p, q(-2 * e), "a.bstar")),
        ("b.bstar", ak.mul_raw(&poch_up(&av, l as usize)).scale(&q(2 * ki * li))),
        ("bstar.b", ak.mul_raw(&poch_down(&av, l as usize))),
    ];
    for (lhs, rhs) in rules {
        rule(&mut p, lhs, rhs);
    }
    finish(p)
}

/// Equatorial Podleś sphere with a unitary `u` adjoined.
pub fn s2u() -> Presentation {
    let mut p = Presentation::new("s2u", Parameter::real("q"));
    let z0 = p.add_gen("z0", 2);
    let z0s = p.add_gen("z0star", 2);
    p.add_gen("z1", 1);
    let u = p.add_gen("u", 1);
    let us = p.add_gen("ustar", 1);
    p.pair_star(z0, z0s);
    p.pair_star(u, us);
    let rules = [
        ("z1.z0", cw(&p, q(-1), "z0.z1")),
        ("z1.z0star", cw(&p, q(1), "z0star.z1")),
        ("z0.z0star", &Element::one() - &w(&p, "z1^2")),
        ("z0star.z0", &Element::one() - &cw(&p, q(-2), "z1^2")),
    ];
    for (lhs, rhs) in rules {
        rule(&mut p, lhs, rhs);
    }
    central_unitary(&mut p, "u", "ustar", &["z0", "z0star", "z1"]);
    finish(p)
}

/// Rules making `g`, `gstar` central and mutually inverse.
fn central_unitary(p: &mut Presentation, g: &str, gstar: &str, others: &[&str]) {
    for x in [g, gstar] {
        for o in others {
            let e = w(p, &format!("{o}.{x}"));
            rule(p, &format!("{x}.{o}"), e);
        }
    }
    rule(p, &format!("{g}.{gstar}"), Element::one());
    rule(p, &format!("{gstar}.{g}"), Element::one());
}

/// Quantum Seifert manifold on `ζ₀`, `ζ₁` and central unitary `ξ`, with `ζ₁* = ζ₁ξ`.
pub fn sigma3() -> Presentation {
    let mut p = Presentation::new("sigma3", Parameter::real("q"));
    let z0 = p.add_gen("zeta0", 2);
    let z0s = p.add_gen("zeta0star", 2);
    let z1 = p.add_gen("zeta1", 1);
    let xi = p.add_gen("xi", 1);
    let xis = p.add_gen("xistar", 1);
    p.pair_star(z0, z0s);
    p.pair_star(xi, xis);
    p.set_star(z1, Star::Image(Element::word(crate::freealg::Word(vec![z1, xi]))));
    let rules = [
        ("zeta1.zeta0", cw(&p, q(-1), "zeta0.zeta1")),
        ("zeta1.zeta0star", cw(&p, q(1), "zeta0star.zeta1")),
        ("zeta0.zeta0star", &Element::one() - &w(&p, "zeta1^2.xi")),
        ("zeta0star.zeta0", &Element::one() - &cw(&p, q(-2), "zeta1^2.xi")),
    ];
    for (lhs, rhs) in rules {
        rule(&mut p, lhs, rhs);
    }
    central_unitary(&mut p, "xi", "xistar", &["zeta0", "zeta0star", "zeta1"]);
    finish(p)
}

/// `Σ³(l;−)` on `x`, `y` and central unitary `z`, with `y* = yz`.
pub fn sigma3minus(l: u32) -> Presentation {
    let li = l as i64;
    let n = l as usize;
    let mut p = Presentation::new("sigma3minus", Parameter::real("q"));
    let x = p.add_gen("x", 2 * l);
    let xs = p.add_gen("xstar", 2 * l);
    let y = p.add_gen("y", 1);
    let z = p.add_gen("z", 1);
    let zs = p.add_gen("zstar", 1);
    p.pair_star(x, xs);
    p.pair_star(z, zs);
    p.set_star(y, Star::Image(Element::word(crate::freealg::Word(vec![y, z]))));
    let a = w(&p, "y^2.z");
    let rules = [
        ("y.x", cw(&p, q(-li), "x.y")),
        ("y.xstar", cw(&p, q(li), "xstar.y")),
        ("x.xstar", poch_up(&a, n)),
        ("xstar.x", poch_down(&a, n)),
    ];
    for (lhs, rhs) in rules {
        rule(&mut p, lhs, rhs);
    }
    central_unitary(&mut p, "z", "zstar", &["x", "xstar", "y"]);
    finish(p)
}

/// `ℝP²(l;−)` on self-adjoint `a`, and `b`, `cm` with their adjoints.
pub fn rp2minus(l: u32) -> Presentation {
    let li = l as i64;
    let n = l as usize;
    let mut p = Presentation::new("rp2minus", Parameter::real("q"));
    let a = p.add_gen("a", 1);
    let cm = p.add_gen("cm", l + 1);
    let cms = p.add_gen("cmstar", l + 1);
    let b = p.add_gen("b", l + 2);
    let bs = p.add_gen("bstar", l + 2);
    p.set_star(a, Star::SelfAdjoint);
    p.pair_star(cm, cms);
    p.pair_star(b, bs);
    let av = w(&p, "a");
    let bw = w(&p, "b");
    let bsw = w(&p, "bstar");
    let rules = [
        ("b.a", cw(&p, q(2 * li), "a.b")),
        ("bstar.a", cw(&p, q(-2 * li), "a.bstar")),
        ("cm.a", cw(&p, q(4 * li), "a.cm")),
        ("cmstar.a", cw(&p, q(-4 * li), "a.cmstar")),
        ("b.b", cw(&p, q(3 * li), "a.cm")),
        ("bstar.bstar", cw(&p, q(-li), "a.cmstar")),
        ("b.cm", cw(&p, q(-2 * li), "cm.b")),
        ("bstar.cmstar", cw(&p, q(2 * li), "cmstar.bstar")),
        ("b.bstar", av.mul_raw(&poch_up(&av, n)).scale(&q(2 * li))),
        ("bstar.b", av.mul_raw(&poch_down(&av, n))),
        ("bstar.cm", poch_down(&av, n).mul_raw(&bw).scale(&q(-li))),
        ("cm.bstar", bw.mul_raw(&poch_up(&av, n)).scale(&q(li))),
        ("b.cmstar", poch_up(&av, n).mul_raw(&bsw).scale(&q(li))),
        ("cmstar.b", bsw.mul_raw(&poch_down(&av, n)).scale(&q(-li))),
        ("cm.cmstar", poch_up(&av, 2 * n)),
        ("cmstar.cm", poch_down(&av, 2 * n)),
    ];
    for (lhs, rhs) in rules {
        rule(&mut p, lhs, rhs);
    }
    finish(p)
}
