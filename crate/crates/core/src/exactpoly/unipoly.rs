use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field;
use super::{denominator_lcm, integer_gcd, Rational, Var};
use crate::{Error, Result};

/// Dense univariate polynomial over Q. `coeffs[i]` is the coefficient of `var^i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: Var,
}

impl UniPoly {
    pub fn new(var: Var, coeffs: Vec<Rational>) -> Self {
        UniPoly {
            coeffs: field::trim(coeffs),
            var,
        }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn from_bigints(var: Var, coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        Self::new(
            var,
            coeffs.into_iter().map(Rational::from_integer).collect(),
        )
    }

    pub fn zero(var: Var) -> Self {
        UniPoly {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    /// The polynomial `var`.
    pub fn identity(var: Var) -> Self {
        Self::from_ints(var, &[0, 1])
    }

    pub fn monomial(var: Var, c: Rational, exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Self::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        field::degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    fn check(&self, other: &UniPoly) {
        assert_eq!(
            self.var, other.var,
            "variable mismatch in univariate polynomial arithmetic"
        );
    }

    pub fn try_check(&self, other: &UniPoly) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                expected: self.var,
                found: other.var,
            })
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.var, field::scale(&self.coeffs, c))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.var), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        Self::new(self.var, coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        field::eval(&self.coeffs, x)
    }

    /// Horner evaluation at an integer point, staying in integer arithmetic
    /// when the coefficients are integers.
    pub fn eval_integer(&self, x: &BigInt) -> Rational {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            let v = self
                .coeffs
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * x + c.numer());
            Rational::from_integer(v)
        } else {
            self.eval(&Rational::from_integer(x.clone()))
        }
    }

    pub fn divrem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.try_check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = field::divrem(&self.coeffs, &divisor.coeffs);
        Ok((Self::new(self.var, q), Self::new(self.var, r)))
    }

    /// Monic greatest common divisor over Q.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        self.try_check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZero);
        }
        Ok(Self::new(self.var, field::gcd(&self.coeffs, &other.coeffs)))
    }

    pub fn monic(&self) -> UniPoly {
        Self::new(self.var, field::monic(&self.coeffs))
    }

    /// Splits off the rational content: `self = c * p` with `p` having coprime
    /// integer coefficients and positive leading coefficient.
    pub fn content_and_primitive(&self) -> Result<(Rational, UniPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c = rational_content(&self.coeffs);
        let c = if self.leading_coeff().is_negative() {
            -c
        } else {
            c
        };
        Ok((c.clone(), self.scale(&c.recip())))
    }

    /// Integer coefficients, if every coefficient is an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// Positive rational `c` such that `v / c` has coprime integer entries.
pub(crate) fn rational_content(v: &[Rational]) -> Rational {
    let l = denominator_lcm(v);
    let nums: Vec<BigInt> = v.iter().map(|q| (q * &l).to_integer()).collect();
    let g = integer_gcd(&nums);
    if g.is_zero() {
        return Rational::one();
    }
    Rational::new(g, l)
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs);
        UniPoly::new(self.var, field::add(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs);
        UniPoly::new(self.var, field::sub(&self.coeffs, &rhs.coeffs))
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.check(rhs);
        UniPoly::new(self.var, field::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var, field::neg(&self.coeffs))
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(UniPoly, Add::add, Sub::sub, Mul::mul);
pub(crate) use forward_owned;

/// Writes a sum of `coefficient * monomial` terms in the order given,
/// e.g. `256*t^2*A^4 - 107*t + 3/2`.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl IntoIterator<Item = (Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let mag = c.abs();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn power_string(var: Var, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| (c.clone(), power_string(self.var, i)));
        write_terms(f, terms)
    }
}
