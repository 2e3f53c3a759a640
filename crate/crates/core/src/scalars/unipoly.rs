use std::ops::{Add, Mul, Neg, Sub};

use super::Scalar;
use crate::error::{Error, Result};

/// A polynomial in an auxiliary commuting variable `a` with coefficients in
/// ℚ(t), low degree first, leading coefficient nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `a`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    /// `c * a^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Formal derivative `d/da`.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &Scalar::from_int(i as i64)).collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Substitution `a ↦ kappa*a + chi`.
    pub fn compose_linear(&self, kappa: &Scalar, chi: &Scalar) -> Self {
        let lin = UniPoly::from_coeffs(vec![chi.clone(), kappa.clone()]);
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = d.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] = &rem[k + j] - &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Monic gcd by the Euclidean algorithm over ℚ(t).
    pub fn gcd(f: &UniPoly, g: &UniPoly) -> Result<UniPoly> {
        Ok(Self::gcd_ext(f, g)?.0)
    }

    /// Extended Euclid: `(g, s, t)` with `s*f + t*h = g`, `g` monic.
    pub fn gcd_ext(f: &UniPoly, h: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
        if f.is_zero() && h.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut r0, mut r1) = (f.clone(), h.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(&r1)?;
            // keep remainders monic so coefficients stay small
            let lc = match rem.leading() {
                Some(c) => c.inv()?,
                None => Scalar::one(),
            };
            let rem = rem.scale(&lc);
            let s2 = (&s0 - &(&quo * &s1)).scale(&lc);
            let t2 = (&t0 - &(&quo * &t1)).scale(&lc);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc = r0.leading().expect("nonzero gcd").inv()?;
        Ok((r0.scale(&lc), s0.scale(&lc), t0.scale(&lc)))
    }

    pub fn specialize(&self, v: &num_rational::BigRational) -> Result<UniPoly> {
        Ok(Self::from_coeffs(self.coeffs.iter().map(|c| c.specialize(v)).collect::<Result<_>>()?))
    }

    /// Human-readable form such as `q^2 a^2 + (-q^2 - 1) a + 1`.
    pub fn to_text(&self, var: &str, param: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let ct = c.to_text(param);
            let piece = if mono.is_empty() {
                ct
            } else if c.is_one() {
                mono
            } else if ct == "-1" {
                format!("-{mono}")
            } else if c.numer().term_count() > 1 && c.denom().is_one() {
                format!("({ct}) {mono}")
            } else {
                format!("{ct} {mono}")
            };
            parts.push(piece);
        }
        parts.join(" + ")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `(x a; base)_n = ∏_{m=0}^{n-1} (1 - base^m x a)` as a polynomial in `a`.
pub fn pochhammer(x: &Scalar, base: &Scalar, n: usize) -> UniPoly {
    let mut acc = UniPoly::one();
    let mut factor = x.clone();
    for _ in 0..n {
        let lin = UniPoly::from_coeffs(vec![Scalar::one(), -&factor]);
        acc = &acc * &lin;
        factor = &factor * base;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> Scalar {
        Scalar::t_pow(k)
    }

    #[test]
    fn gcd_extracts_common_factor() {
        // a^2 (1 - q^-2 a) and a
        let f = UniPoly::from_coeffs(vec![Scalar::zero(), Scalar::zero(), Scalar::one(), -q(-2)]);
        let g = UniPoly::var();
        assert_eq!(UniPoly::gcd(&f, &g).unwrap(), UniPoly::var());
    }

    #[test]
    fn derivative_of_quadratic() {
        let f = UniPoly::from_coeffs(vec![Scalar::zero(), Scalar::from_int(-1), Scalar::one()]);
        let expected = UniPoly::from_coeffs(vec![Scalar::from_int(-1), Scalar::from_int(2)]);
        assert_eq!(f.derivative(), expected);
    }

    #[test]
    fn distinct_roots_give_unit_gcd() {
        // p = a (1 - q^-2 a): roots 0 and q^2
        let p = UniPoly::from_coeffs(vec![Scalar::zero(), Scalar::one(), -q(-2)]);
        assert_eq!(UniPoly::gcd(&p, &p.derivative()).unwrap(), UniPoly::one());
    }

    #[test]
    fn gcd_of_zeros_is_an_error() {
        assert_eq!(UniPoly::gcd(&UniPoly::zero(), &UniPoly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn bezout_identity_holds() {
        let p = pochhammer(&Scalar::one(), &q(2), 3);
        let dp = p.derivative();
        let (g, s, t) = UniPoly::gcd_ext(&p, &dp).unwrap();
        assert_eq!(&(&s * &p) + &(&t * &dp), g);
        assert_eq!(g, UniPoly::one());
    }

    #[test]
    fn pochhammer_two_factors() {
        let p = pochhammer(&Scalar::one(), &q(2), 2);
        let expected = UniPoly::from_coeffs(vec![Scalar::one(), -(Scalar::one() + q(2)), q(2)]);
        assert_eq!(p, expected);
    }
}
