//! Exact-arithmetic polynomial kernel.
//!
//! Coefficients are arbitrary-precision rationals ([`Rational`]). Univariate
//! polynomials ([`UniPoly`]), rational functions ([`RatFunc`]) and bivariate
//! polynomials ([`BiPoly`]) are dense, tagged with a [`Var`], and checked for
//! variable agreement at every operation boundary.

mod bipoly;
pub(crate) mod field;
mod ratfunc;
mod resultant;
mod unipoly;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use bipoly::{BiPoly, CanonicalPoly, CanonicalTerm, Monomial};
pub use field::Field;
pub use ratfunc::RatFunc;
pub use resultant::{resultant, resultant_subresultant, Eliminant};
pub use unipoly::UniPoly;
pub(crate) use unipoly::{forward_owned, rational_content};

use crate::{Error, Result};

/// Exact rational number; always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Closed set of variable names used by the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    N,
    Y,
    X,
    A,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::T, Var::N, Var::Y, Var::X, Var::A];

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::N => "n",
            Var::Y => "y",
            Var::X => "x",
            Var::A => "A",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::UnknownTag(s.to_string()))
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `"num/den"` form.
pub fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"num/den"` or a bare integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Least common multiple of the denominators.
pub(crate) fn denominator_lcm<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    it.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Gcd of the numerators of a list of integers (as rationals with denominator 1).
pub(crate) fn integer_gcd<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    use num_integer::Integer;
    it.into_iter()
        .fold(BigInt::zero(), |acc, z| acc.gcd(z))
        .abs()
}
