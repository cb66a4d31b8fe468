use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::unipoly::forward_owned;
use super::{Rational, UniPoly, Var};
use crate::{Error, Result};

/// Reduced quotient `num / den` of univariate polynomials, `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = align(num, den)?;
        if num.is_zero() {
            return Ok(Self::zero_in(den.var()));
        }
        let g = num.gcd(&den)?;
        let (num, _) = num.divrem(&g)?;
        let (den, _) = den.divrem(&g)?;
        let lc = den.leading_coeff().recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let den = UniPoly::one(p.var());
        RatFunc { num: p, den }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(var, c))
    }

    pub fn zero_in(var: Var) -> Self {
        Self::from_poly(UniPoly::zero(var))
    }

    pub fn one_in(var: Var) -> Self {
        Self::from_poly(UniPoly::one(var))
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn with_var(self, var: Var) -> Self {
        RatFunc {
            num: self.num.with_var(var),
            den: self.den.with_var(var),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RatFunc::new(num, den).expect("nonzero denominator")
    }

    /// Value at `x`; fails at a pole.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x) / d)
    }
}

/// Brings two polynomials to a common variable; constants adopt the
/// variable of the other operand.
fn align(a: UniPoly, b: UniPoly) -> Result<(UniPoly, UniPoly)> {
    if a.var() == b.var() {
        return Ok((a, b));
    }
    if a.is_constant() {
        let v = b.var();
        Ok((a.with_var(v), b))
    } else if b.is_constant() {
        let v = a.var();
        Ok((a, b.with_var(v)))
    } else {
        Err(Error::VariableMismatch {
            expected: a.var(),
            found: b.var(),
        })
    }
}

fn common(a: &RatFunc, b: &RatFunc) -> (RatFunc, RatFunc) {
    let var = if a.is_constant() { b.var() } else { a.var() };
    if !a.is_constant() && !b.is_constant() {
        assert_eq!(
            a.var(),
            b.var(),
            "variable mismatch in rational function arithmetic"
        );
    }
    (a.clone().with_var(var), b.clone().with_var(var))
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let (a, b) = common(self, rhs);
        if a.den == b.den {
            return RatFunc::new(&a.num + &b.num, a.den).expect("nonzero denominator");
        }
        let num = &(&a.num * &b.den) + &(&b.num * &a.den);
        RatFunc::new(num, &a.den * &b.den).expect("nonzero denominator")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        let (a, b) = common(self, rhs);
        if a.is_zero() || b.is_zero() {
            return RatFunc::zero_in(a.var());
        }
        RatFunc::new(&a.num * &b.num, &a.den * &b.den).expect("nonzero denominator")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs)
            .expect("rational function division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_owned!(RatFunc, Add::add, Sub::sub, Mul::mul, Div::div);

impl From<UniPoly> for RatFunc {
    fn from(p: UniPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

/// Q(t), the coefficient field of the quotient-ring machinery.
impl super::field::Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero_in(Var::T)
    }
    fn one() -> Self {
        RatFunc::one_in(Var::T)
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_constant() && self.den.is_constant() && One::is_one(&self.num.coeff(0))
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::X, c)
    }

    #[test]
    fn normalizes_on_construction() {
        // (2x - 2) / (4x^2 - 4) = (1/2) / (x + 1)
        let r = RatFunc::new(p(&[-2, 2]), p(&[-4, 0, 4])).unwrap();
        assert_eq!(r.den(), &p(&[1, 1]));
        assert_eq!(
            r.num(),
            &UniPoly::constant(Var::X, crate::exactpoly::ratio(1, 2))
        );
        assert_eq!(r.num().gcd(r.den()).unwrap(), UniPoly::one(Var::X));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(p(&[1]), UniPoly::zero(Var::X)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn logarithmic_derivative_of_a348410_f() {
        // f = 1/((1-x)^2 (1+x)); f'/f = (1+3x)/(1-x^2)
        let f = RatFunc::new(p(&[1]), p(&[1, -1, -1, 1])).unwrap();
        let logd = &f.derivative() / &f;
        let expected = RatFunc::new(p(&[1, 3]), p(&[1, 0, -1])).unwrap();
        assert_eq!(logd, expected);
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = RatFunc::new(p(&[1]), p(&[1, -1])).unwrap();
        let b = RatFunc::new(p(&[1]), p(&[1, 1])).unwrap();
        let s = &a + &b; // 2/(1-x^2)
        assert_eq!(s, RatFunc::new(p(&[2]), p(&[1, 0, -1])).unwrap());
        assert_eq!(s.eval(&rat(0)).unwrap(), rat(2));
        assert!(s.eval(&rat(1)).is_err());
        assert_eq!(&(&s / &a) * &a, s);
    }
}
