use super::algebras::torus;
use crate::error::Result;
use crate::freealg::{Element, Presentation};
use crate::grading::{AnsatzTerm, ConnectionAnsatz, InvolutiveGrading, TensorElement};
use crate::scalars::Scalar;

/// The hat elements, the identity they satisfy and the closed-form `ω(1)`.
#[derive(Clone, Debug)]
pub struct PillowData {
    pub presentation: Presentation,
    pub sigma: InvolutiveGrading,
    pub xh: Element,
    pub yh: Element,
    pub zh: Element,
    /// The σ-even element `UV* + U*V`.
    pub z: Element,
    /// `x̂² + ŷ² − λ̄ẑ² − x̂zŷ`, unreduced.
    pub identity_lhs: Element,
    /// `2(λ̄² − 1)`.
    pub constant: Scalar,
    pub omega1: TensorElement,
}

/// `σ: U ↦ U*, V ↦ V*`.
pub fn pillow_sigma(p: &Presentation) -> Result<InvolutiveGrading> {
    let sigma = ["Ustar", "U", "Vstar", "V"].iter().map(|g| p.elem(g)).collect::<Result<Vec<_>>>()?;
    Ok(InvolutiveGrading { name: "Z2".into(), sigma })
}

struct Hats {
    xh: Element,
    yh: Element,
    zh: Element,
    z: Element,
    lambda_bar: Scalar,
}

fn hats(p: &Presentation) -> Result<Hats> {
    Ok(Hats {
        xh: p.elem("U - Ustar")?,
        yh: p.elem("V - Vstar")?,
        zh: p.elem("U.Vstar - Ustar.V")?,
        z: p.elem("U.Vstar + Ustar.V")?,
        lambda_bar: Scalar::t_pow(-1),
    })
}

/// One unknown on `x̂⊗x̂ + ŷ⊗ŷ − λ̄ ẑ⊗ẑ − x̂z⊗ŷ`.
pub fn pillow_ansatz(p: &Presentation) -> Result<ConnectionAnsatz> {
    let h = hats(p)?;
    let pairs = vec![
        (h.xh.clone(), h.xh.clone()),
        (h.yh.clone(), h.yh.clone()),
        (h.zh.scale(&-&h.lambda_bar), h.zh.clone()),
        (-&p.mul(&h.xh, &h.z)?, h.yh.clone()),
    ];
    Ok(ConnectionAnsatz { name: "pillow".into(), terms: vec![AnsatzTerm { unknown: "c".into(), pairs }] })
}

pub fn pillow_data() -> Result<PillowData> {
    let p = torus();
    let h = hats(&p)?;
    let sigma = pillow_sigma(&p)?;
    let sq = |e: &Element| e.mul_raw(e);
    let identity_lhs =
        &(&(&sq(&h.xh) + &sq(&h.yh)) - &sq(&h.zh).scale(&h.lambda_bar)) - &h.xh.mul_raw(&h.z).mul_raw(&h.yh);
    let constant = Scalar::from_int(2) * (&h.lambda_bar * &h.lambda_bar - Scalar::one());
    let ansatz = pillow_ansatz(&p)?;
    let omega1 = ansatz.instantiate(&p, &[constant.inv()?])?;
    Ok(PillowData { sigma, xh: h.xh, yh: h.yh, zh: h.zh, z: h.z, identity_lhs, constant, omega1, presentation: p })
}
