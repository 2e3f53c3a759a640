//! Exact arithmetic in ℚ(t) and univariate polynomials over it.

mod parse;
mod poly;
mod scalar;
mod unipoly;

pub use poly::QPoly;
pub use scalar::{ParamMode, Parameter, Scalar, ScalarDisplay};
pub use unipoly::{pochhammer, UniPoly};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Parses a rational number such as `1/2` or `-3`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (d != BigInt::from(0)).then(|| BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}
