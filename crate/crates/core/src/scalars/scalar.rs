use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::QPoly;
use crate::error::{Error, Result};

/// How the involution acts on the formal parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamMode {
    /// `conj(t) = t` (e.g. `q ∈ (0, 1)`).
    Real,
    /// `conj(t) = 1/t` (e.g. `λ = e^{2πiθ}`).
    Unitary,
}

impl ParamMode {
    pub fn keyword(self) -> &'static str {
        match self {
            ParamMode::Real => "real",
            ParamMode::Unitary => "unitary",
        }
    }
}

/// The formal deformation parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Parameter {
    pub name: String,
    pub mode: ParamMode,
}

impl Parameter {
    pub fn real(name: &str) -> Self {
        Parameter { name: name.to_string(), mode: ParamMode::Real }
    }

    pub fn unitary(name: &str) -> Self {
        Parameter { name: name.to_string(), mode: ParamMode::Unitary }
    }
}

/// An element of ℚ(t) in canonical form: coprime numerator and monic
/// denominator, with zero stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: QPoly,
    den: QPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: QPoly::one(), den: QPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar { num: QPoly::constant(r), den: QPoly::one() }
    }

    pub fn from_poly(p: QPoly) -> Self {
        Scalar { num: p, den: QPoly::one() }
    }

    /// The parameter itself.
    pub fn t() -> Self {
        Self::t_pow(1)
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        let mono = QPoly::monomial(BigRational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Scalar { num: mono, den: QPoly::one() }
        } else {
            Scalar { num: QPoly::one(), den: mono }
        }
    }

    /// Builds `num/den` and brings it to canonical form.
    pub fn from_parts(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = QPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True for constants (no dependence on the parameter).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The constant value, if the scalar does not depend on the parameter.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Involution: identity in real mode, `t ↦ 1/t` in unitary mode.
    pub fn conjugate(&self, mode: ParamMode) -> Self {
        match mode {
            ParamMode::Real => self.clone(),
            ParamMode::Unitary => {
                if self.is_constant() {
                    return self.clone();
                }
                let dn = self.num.degree().unwrap_or(0);
                let dd = self.den.degree().unwrap_or(0);
                let top = dn.max(dd);
                let num = self.num.reversed(dn).shift(top - dn);
                let den = self.den.reversed(dd).shift(top - dd);
                Self::canonical(num, den)
            }
        }
    }

    /// Exact value at `t = v`.
    pub fn evaluate(&self, v: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return Err(Error::Pole { at: v.to_string() });
        }
        Ok(self.num.eval(v) / d)
    }

    /// The scalar with all parameter dependence replaced by its value at `v`.
    pub fn specialize(&self, v: &BigRational) -> Result<Self> {
        Ok(Self::from_rational(self.evaluate(v)?))
    }

    /// Sign of the leading numerator coefficient, used to pull a minus sign
    /// out in printed sums.
    pub fn is_negative_leading(&self) -> bool {
        self.num.leading().is_some_and(|c| c.is_negative())
    }

    /// Canonical text: both polynomials with coprime integer coefficients,
    /// decreasing degree, e.g. `(-q^2)/(q^2 - 1)`.
    pub fn to_text(&self, var: &str) -> String {
        if self.den.is_one() && self.num.coeffs().iter().all(|c| c.is_integer()) {
            return self.num.to_text(var);
        }
        // a common factor L turning both sides into primitive integer polys
        let joint = QPoly::from_coeffs(self.num.coeffs().iter().chain(self.den.coeffs()).cloned().collect());
        let scale = joint.integer_scale();
        let num = self.num.scale(&scale);
        let den = self.den.scale(&scale);
        if den.is_one() {
            return num.to_text(var);
        }
        let num_text = num.to_text(var);
        let den_text = den.to_text(var);
        let wrap_num = num.term_count() > 1 || num_text.starts_with('-');
        let den_bare = den.term_count() == 1 && den.leading().is_some_and(|c| c.is_one() || den.is_constant());
        let mut out = String::new();
        if wrap_num {
            out.push_str(&format!("({num_text})"));
        } else {
            out.push_str(&num_text);
        }
        out.push('/');
        if den_bare {
            out.push_str(&den_text);
        } else {
            out.push_str(&format!("({den_text})"));
        }
        out
    }

    /// Parses the canonical text grammar (plus `^`, `*`, juxtaposition and
    /// parentheses) in the variable `var`.
    pub fn parse(text: &str, var: &str) -> Result<Self> {
        super::parse::parse_scalar(text, var)
    }

    pub fn display<'a>(&'a self, var: &'a str) -> ScalarDisplay<'a> {
        ScalarDisplay { scalar: self, var }
    }

    /// Total number of nonzero polynomial terms; a rough size measure.
    pub fn size(&self) -> usize {
        self.num.term_count() + self.den.term_count()
    }

    pub(crate) fn big(n: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(n))
    }
}

pub struct ScalarDisplay<'a> {
    scalar: &'a Scalar,
    var: &'a str,
}

impl fmt::Display for ScalarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.scalar.to_text(self.var))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return Scalar { num, den: QPoly::one() };
            }
            return Scalar::canonical(num, self.den.clone());
        }
        let g = QPoly::gcd(&self.den, &rhs.den);
        let (l_rest, r_rest) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.div_rem(&g).0, rhs.den.div_rem(&g).0)
        };
        let num = &(&self.num * &r_rest) + &(&rhs.num * &l_rest);
        let den = &self.den * &r_rest;
        Scalar::canonical(num, den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar { num: &self.num * &rhs.num, den: QPoly::one() };
        }
        // cross-cancel so the product is already reduced
        let g1 = QPoly::gcd(&self.num, &rhs.den);
        let g2 = QPoly::gcd(&rhs.num, &self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_rem(&g1).0, rhs.den.div_rem(&g1).0)
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_rem(&g2).0, self.den.div_rem(&g2).0)
        };
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            Scalar { num, den }
        } else {
            let inv = lc.recip();
            Scalar { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i64) -> Scalar {
        Scalar::t_pow(k)
    }

    #[test]
    fn add_cancels_to_one() {
        // 1/(1-q^2) + (-q^2)/(1-q^2) = 1
        let den = (Scalar::one() - q(2)).inv().unwrap();
        let a = den.clone();
        let b = -q(2) * &den;
        assert!((a + b).is_one());
    }

    #[test]
    fn inverse_of_power_is_reciprocal() {
        let x = q(2).inv().unwrap();
        assert_eq!(x, q(-2));
        assert!(x.numer().is_one());
        assert_eq!(x.to_text("q"), "1/q^2");
    }

    #[test]
    fn product_cancels_common_factor() {
        let a = Scalar::one() - q(2);
        let b = (Scalar::one() - q(4)).inv().unwrap();
        let expected = (Scalar::one() + q(2)).inv().unwrap();
        assert_eq!(a * b, expected);
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugation_modes() {
        assert_eq!(q(1).conjugate(ParamMode::Unitary), q(-1));
        let p = q(3) - Scalar::one();
        assert_eq!(p.conjugate(ParamMode::Real), p);
        // 1/(2(λ^-2 - 1)) ↦ 1/(2(λ^2 - 1))
        let two = Scalar::from_int(2);
        let x = (two.clone() * (q(-2) - Scalar::one())).inv().unwrap();
        let y = (two * (q(2) - Scalar::one())).inv().unwrap();
        assert_eq!(x.conjugate(ParamMode::Unitary), y);
    }

    #[test]
    fn evaluation_and_poles() {
        let x = (Scalar::one() - q(2)).inv().unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(x.evaluate(&half).unwrap(), BigRational::new(4.into(), 3.into()));
        assert_eq!(q(0).evaluate(&BigRational::from_integer(7.into())).unwrap(), BigRational::one());
        assert!(matches!(x.evaluate(&BigRational::one()), Err(Error::Pole { .. })));
    }

    #[test]
    fn canonical_text_forms() {
        // -q^2/(q^2 - 1)
        let x = (-q(2)).checked_div(&(q(2) - Scalar::one())).unwrap();
        assert_eq!(x.to_text("q"), "(-q^2)/(q^2 - 1)");
        let y = (Scalar::from_int(2) * (q(2) - Scalar::one())).inv().unwrap();
        assert_eq!(y.to_text("l"), "1/(2l^2 - 2)");
        assert_eq!(Scalar::from_ratio(-3, 4).to_text("q"), "(-3)/4");
        assert_eq!((q(2) + Scalar::one()).to_text("q"), "q^2 + 1");
    }
}
