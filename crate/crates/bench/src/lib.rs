//! Benchmark fixtures shared by the criterion targets.

use qsmooth_core::catalog::{get_algebra, get_ansatz, get_grading, Params};
use qsmooth_core::grading::{ConnectionAnsatz, Grading};
use qsmooth_core::{Element, Presentation};

/// A catalog algebra with its `Zl` grading and built-in ansatz.
pub fn sphere_fixture(name: &str, l: u32) -> (Presentation, Grading, ConnectionAnsatz) {
    let params = Params::l(l);
    let p = get_algebra(name, params).expect("catalog algebra");
    let g = get_grading(name, "Zl", params).expect("catalog grading");
    let a = get_ansatz(name, "Zl", params).expect("catalog ansatz");
    (p, g, a)
}

/// The unreduced word `α*ⁿ αⁿ β*ⁿ βⁿ` in the quantum 3-sphere.
pub fn sphere_word(p: &Presentation, n: usize) -> Element {
    let text = format!("alphastar^{n}.alpha^{n}.betastar^{n}.beta^{n}");
    Element::word(p.word_of(&text).expect("generator names"))
}
