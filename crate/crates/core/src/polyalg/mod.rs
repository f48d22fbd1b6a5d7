//! Exact arithmetic in ℚ[x] and ℚ(x).

mod factor;
pub mod linalg;
mod modp;
mod poly;
mod ratfunc;
mod zpoly;

pub use factor::{factor, is_irreducible, Factorization};
pub use poly::{Poly, PolyDisplay};
pub use ratfunc::RationalFunction;

use crate::error::Result;

/// Arbitrary-precision rational; always stored reduced with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The reduced, monic-denominator representative of `num / den`.
pub fn normalize(num: Poly, den: Poly) -> Result<RationalFunction> {
    RationalFunction::new(num, den)
}

/// Monic gcd of two polynomials, not both zero.
pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    a.gcd(b)
}
