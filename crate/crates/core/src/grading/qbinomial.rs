use crate::catalog;
use crate::error::Result;
use crate::freealg::Element;
use crate::linalg::determinant;
use crate::scalars::{pochhammer, Scalar};

/// Coefficients `c^m_0, …, c^m_m` of `(a; q²)_m` in powers of `a`.
pub fn poch_expand(m: usize) -> Vec<Scalar> {
    let poly = pochhammer(&Scalar::one(), &Scalar::t_pow(2), m);
    (0..=m).map(|k| poly.coeff(k)).collect()
}

/// Checks `α^m α*^m = Σ c^m_p (ββ*)^p` in the quantum 3-sphere.
pub fn verify_poch_identity(m: usize) -> Result<bool> {
    let p = catalog::su2q();
    let lhs = p.elem(&format!("alpha^{m}.alphastar^{m}"))?;
    let a = p.elem("beta.betastar")?;
    let mut rhs = Element::zero();
    let mut power = Element::one();
    for c in poch_expand(m) {
        rhs = &rhs + &power.scale(&c);
        power = p.mul(&power, &a)?;
    }
    Ok(p.normal_form(&(&lhs - &rhs))?.is_zero())
}

/// The `l × l` coefficient matrix of the 3-sphere connection system.
///
/// Rows are powers `a⁰ … a^{l−1}`; column 0 holds `c^{l−1}_p`, column `j ≥ 1`
/// holds `δ_{p,j−1} − q⁻² δ_{p,j}`.
pub fn connection_matrix(l: usize) -> Vec<Vec<Scalar>> {
    assert!(l >= 1, "l must be at least 1");
    let c = poch_expand(l - 1);
    let qm2 = Scalar::t_pow(-2);
    (0..l)
        .map(|p| {
            (0..l)
                .map(|j| {
                    if j == 0 {
                        c[p].clone()
                    } else if p + 1 == j {
                        Scalar::one()
                    } else if p == j {
                        -&qm2
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn connection_matrix_det(l: usize) -> Scalar {
    determinant(connection_matrix(l))
}

fn product_factor(l: usize) -> Scalar {
    (1..l).fold(Scalar::one(), |acc, p| acc * (Scalar::one() - Scalar::t_pow(2 * p as i64)))
}

/// `(−q⁻²)^{l−1} ∏_{p=1}^{l−1} (1 − q^{2p})`.
pub fn determinant_closed_form(l: usize) -> Scalar {
    let sign = if (l - 1).is_multiple_of(2) { 1 } else { -1 };
    Scalar::from_int(sign) * Scalar::t_pow(-2 * (l as i64 - 1)) * product_factor(l)
}

/// The same product with `(−q²)^{l−1}` in front.
pub fn determinant_printed_form(l: usize) -> Scalar {
    let sign = if (l - 1).is_multiple_of(2) { 1 } else { -1 };
    Scalar::from_int(sign) * Scalar::t_pow(2 * (l as i64 - 1)) * product_factor(l)
}

/// Laplace terms `M[p][0] · (−1)^p · minor(p, 0)` along the first column.
pub fn first_column_terms(l: usize) -> Vec<Scalar> {
    let m = connection_matrix(l);
    (0..l)
        .map(|p| {
            let minor: Vec<Vec<Scalar>> =
                m.iter().enumerate().filter(|(i, _)| *i != p).map(|(_, row)| row[1..].to_vec()).collect();
            let sign = Scalar::from_int(if p % 2 == 0 { 1 } else { -1 });
            &m[p][0] * &(sign * determinant(minor))
        })
        .collect()
}

/// `(−1)^{l−1} q^{−2(l−1−p)} c^{l−1}_p`, the expected first-column terms.
pub fn expected_first_column_terms(l: usize) -> Vec<Scalar> {
    let c = poch_expand(l - 1);
    let sign = Scalar::from_int(if (l - 1).is_multiple_of(2) { 1 } else { -1 });
    (0..l).map(|p| &sign * &(Scalar::t_pow(-2 * (l - 1 - p) as i64) * &c[p])).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantReport {
    pub l: usize,
    pub determinant: Scalar,
    pub closed_form: Scalar,
    pub printed_form: Scalar,
    pub matches_closed_form: bool,
    pub matches_printed_form: bool,
    pub first_column_terms: Vec<Scalar>,
    pub expected_first_column_terms: Vec<Scalar>,
    pub expansion_matches: bool,
}

pub fn determinant_report(l: usize) -> DeterminantReport {
    let det = connection_matrix_det(l);
    let closed_form = determinant_closed_form(l);
    let printed_form = determinant_printed_form(l);
    let terms = first_column_terms(l);
    let expected = expected_first_column_terms(l);
    DeterminantReport {
        l,
        matches_closed_form: det == closed_form,
        matches_printed_form: det == printed_form,
        expansion_matches: terms == expected,
        determinant: det,
        closed_form,
        printed_form,
        first_column_terms: terms,
        expected_first_column_terms: expected,
    }
}
