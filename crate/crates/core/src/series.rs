//! Truncated formal power series with exact rational coefficients.
//!
//! Every value carries its truncation order `N`: coefficients of `t^0..=t^N`
//! are exact and everything from `t^(N+1)` on is unknown. Binary operations
//! return the smaller of the two input orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exactpoly::{
    denominator_lcm, parse_rational, rational_to_string, BiPoly, RatFunc, Rational, UniPoly, Var,
};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Series of truncation order `order`; `coeffs` is padded with zeros or
    /// cut to length `order + 1`.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(
            coeffs.iter().map(|&c| crate::exactpoly::rat(c)).collect(),
            order,
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        Self::from_ints(&[0, 1], order)
    }

    pub fn from_poly(p: &UniPoly, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise truncation order");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `t * self`, exact through one order higher.
    pub fn mul_t(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        TruncSeries { coeffs }
    }

    /// Formal derivative; exact through order `N - 1`. `None` at order 0.
    pub fn derivative(&self) -> Option<Self> {
        let n = self.order().checked_sub(1)?;
        let coeffs = (0..=n)
            .map(|i| &self.coeffs[i + 1] * Rational::from_integer(BigInt::from(i + 1)))
            .collect();
        Some(TruncSeries { coeffs })
    }

    /// Multiplicative inverse, by Newton iteration `g <- g (2 - f g)`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::SeriesNotInvertible);
        }
        let n = self.order();
        let mut g = TruncSeries::constant(c0.recip(), 0);
        let mut prec = 0;
        while prec < n {
            prec = (2 * prec + 1).min(n);
            let f = self.truncate(prec);
            let g_ext = TruncSeries::new(g.coeffs, prec);
            let fg = &f * &g_ext;
            let two_minus = &TruncSeries::constant(crate::exactpoly::rat(2), prec) - &fg;
            g = &g_ext * &two_minus;
        }
        Ok(g)
    }

    /// `self^e` by binary exponentiation, at the order of `self`.
    pub fn pow_trunc(&self, mut e: u64) -> Self {
        let mut acc = TruncSeries::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Composition `p(self)` by Horner's rule.
    pub fn compose_poly(&self, p: &UniPoly) -> Self {
        let n = self.order();
        p.coeffs()
            .iter()
            .rev()
            .fold(TruncSeries::zero(n), |acc, c| {
                &(&acc * self) + &TruncSeries::constant(c.clone(), n)
            })
    }

    /// Composition `f(self)`; requires the denominator of `f` to be a unit at
    /// `self(0)`.
    pub fn compose_ratfunc(&self, f: &RatFunc) -> Result<Self> {
        let num = self.compose_poly(f.num());
        let den = self.compose_poly(f.den());
        Ok(&num * &den.inverse()?)
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            coeffs: self.coeffs.iter().map(rational_to_string).collect(),
            order: self.order(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<Self> {
        if j.coeffs.len() != j.order + 1 {
            return Err(Error::Invalid(format!(
                "series of order {} needs {} coefficients, found {}",
                j.order,
                j.order + 1,
                j.coeffs.len()
            )));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<_>>()?;
        Ok(Self::new(coeffs, j.order))
    }
}

/// JSON form: `"num/den"` strings and the truncation order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub coeffs: Vec<String>,
    pub order: usize,
}

/// Numerators over a common denominator.
fn integer_form(v: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = denominator_lcm(v);
    let nums = v
        .iter()
        .map(|q| {
            if q.denom() == &d {
                q.numer().clone()
            } else {
                q.numer() * (&d / q.denom())
            }
        })
        .collect();
    (nums, d)
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        let (a, da) = integer_form(&self.coeffs[..=n]);
        let (b, db) = integer_form(&rhs.coeffs[..=n]);
        let den = da * db;
        let a_nz: Vec<usize> = (0..=n).filter(|&i| !a[i].is_zero()).collect();
        let coeffs = (0..=n)
            .map(|k| {
                let mut s = BigInt::zero();
                for &i in a_nz.iter().take_while(|&&i| i <= k) {
                    let y = &b[k - i];
                    if !y.is_zero() {
                        s += &a[i] * y;
                    }
                }
                Rational::new(s, den.clone())
            })
            .collect();
        TruncSeries { coeffs }
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

crate::exactpoly::forward_owned!(TruncSeries, Add::add, Sub::sub, Mul::mul);

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = UniPoly::monomial(Var::T, c.clone(), i).to_string();
            if first {
                f.write_str(&term)?;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {term}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

/// Taylor coefficients of `f` through order `n`.
pub fn expand_ratfunc(f: &RatFunc, n: usize) -> Result<TruncSeries> {
    let d0 = f.den().coeff(0);
    if d0.is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    let inv = d0.recip();
    let den = f.den().coeffs();
    let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut s = f.num().coeff(k);
        for (i, di) in den.iter().enumerate().skip(1).take_while(|(i, _)| *i <= k) {
            s -= di * &out[k - i];
        }
        out.push(s * &inv);
    }
    Ok(TruncSeries::new(out, n))
}

fn check_reversible(f: &RatFunc) -> Result<()> {
    if f.den().coeff(0).is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    if f.num().coeff(0).is_zero() {
        return Err(Error::ReversionNeedsNonzeroConstant);
    }
    Ok(())
}

/// The unique series `y` with `y(0) = 0` and `y = t f(y)`, by fixed-point
/// iteration. Each pass fixes at least one further coefficient; iteration
/// stops at the first pass that changes nothing.
pub fn revert(f: &RatFunc, n: usize) -> Result<TruncSeries> {
    check_reversible(f)?;
    let mut y = TruncSeries::zero(n);
    for _ in 0..=n + 1 {
        let next = y.compose_ratfunc(f)?.mul_t().truncate(n);
        if next == y {
            return Ok(y);
        }
        y = next;
    }
    unreachable!("fixed-point iteration for y = t f(y) gains one coefficient per pass")
}

/// Same series as [`revert`], by Newton iteration on
/// `G(y) = y den(y) - t num(y)`, doubling the precision each step.
pub fn revert_newton(f: &RatFunc, n: usize) -> Result<TruncSeries> {
    check_reversible(f)?;
    let num = f.num();
    let den = f.den();
    let (dnum, dden) = (num.derivative(), den.derivative());
    let f0 = &num.coeff(0) / &den.coeff(0);
    let mut y = TruncSeries::new(vec![Rational::zero(), f0], n.min(1));
    let mut prec = y.order();
    while prec < n {
        prec = (2 * prec + 1).min(n);
        let yp = TruncSeries::new(y.coeffs.clone(), prec);
        let g = &(&yp * &yp.compose_poly(den)) - &yp.compose_poly(num).mul_t().truncate(prec);
        let dg = &(&yp.compose_poly(den) + &(&yp * &yp.compose_poly(&dden)))
            - &yp.compose_poly(&dnum).mul_t().truncate(prec);
        y = &yp - &(&g * &dg.inverse()?);
    }
    Ok(y)
}

/// `[x^n] f(x)^n`, by expanding `f` through order `n` and raising to the
/// `n`-th power.
pub fn diagonal_coeff(f: &RatFunc, n: usize) -> Result<Rational> {
    let s = expand_ratfunc(f, n)?;
    Ok(s.pow_trunc(n as u64).coeff(n).clone())
}

/// `sum_{n <= order} ([x^n] f^n) t^n` in one pass, from the Lagrange–Bürmann
/// form `1 / (1 - t f'(y))` with `y = t f(y)`.
pub fn diagonal_series(f: &RatFunc, order: usize) -> Result<TruncSeries> {
    check_reversible(f)?;
    let y = revert_newton(f, order)?;
    let tfp = y.compose_ratfunc(&f.derivative())?.mul_t().truncate(order);
    (&TruncSeries::one(order) - &tfp).inverse()
}

/// Substitutes the series `s` for `var` in `p`; the other variable of `p` is
/// read as the series variable.
pub fn substitute(p: &BiPoly, var: Var, s: &TruncSeries) -> Result<TruncSeries> {
    let n = s.order();
    let coeffs = p.coeffs_in(var)?;
    Ok(coeffs.iter().rev().fold(TruncSeries::zero(n), |acc, c| {
        &(&acc * s) + &TruncSeries::from_poly(c, n)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(
            UniPoly::from_ints(Var::X, num),
            UniPoly::from_ints(Var::X, den),
        )
        .unwrap()
    }

    fn a348410_f() -> RatFunc {
        rf(&[1], &[1, -1, -1, 1])
    }

    #[test]
    fn mul_examples() {
        let a = TruncSeries::from_ints(&[1, 1], 2);
        let b = TruncSeries::from_ints(&[1, -1], 2);
        assert_eq!(&a * &b, TruncSeries::from_ints(&[1, 0, -1], 2));
        let a = TruncSeries::from_ints(&[1, 1, 6, 22], 3);
        let b = TruncSeries::from_ints(&[1, 0, -1, -2], 3);
        assert_eq!(&a * &b, TruncSeries::from_ints(&[1, 1, 5, 19], 3));
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = TruncSeries::from_ints(&[1, 1, 1], 2);
        let b = TruncSeries::from_ints(&[1, 1, 1, 1, 1], 4);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&b - &a).order(), 2);
    }

    #[test]
    fn inverse_examples() {
        let g = TruncSeries::from_ints(&[1, -1], 4).inverse().unwrap();
        assert_eq!(g, TruncSeries::from_ints(&[1, 1, 1, 1, 1], 4));
        let g = TruncSeries::from_ints(&[1, -1, -5, -11], 3)
            .inverse()
            .unwrap();
        assert_eq!(g, TruncSeries::from_ints(&[1, 1, 6, 22], 3));
        let g = TruncSeries::from_ints(&[2], 0).inverse().unwrap();
        assert_eq!(g.coeff(0), &crate::exactpoly::ratio(1, 2));
        assert_eq!(
            TruncSeries::from_ints(&[0, 1], 3).inverse(),
            Err(Error::SeriesNotInvertible)
        );
    }

    #[test]
    fn pow_examples() {
        let f = TruncSeries::from_ints(&[1, 1], 3);
        assert_eq!(f.pow_trunc(0), TruncSeries::one(3));
        assert_eq!(f.pow_trunc(1), f);
        let g = expand_ratfunc(&a348410_f(), 2).unwrap();
        assert_eq!(g.pow_trunc(2).coeff(2), &rat(5));
    }

    #[test]
    fn expand_examples() {
        assert_eq!(
            expand_ratfunc(&rf(&[1], &[1, -1]), 3).unwrap(),
            TruncSeries::from_ints(&[1, 1, 1, 1], 3)
        );
        assert_eq!(
            expand_ratfunc(&a348410_f(), 4).unwrap(),
            TruncSeries::from_ints(&[1, 1, 2, 2, 3], 4)
        );
        assert_eq!(
            expand_ratfunc(&rf(&[1, 3], &[1, 0, -1]), 2).unwrap(),
            TruncSeries::from_ints(&[1, 3, 1], 2)
        );
        assert_eq!(
            expand_ratfunc(&rf(&[1], &[0, 1]), 3),
            Err(Error::PoleAtOrigin)
        );
    }

    #[test]
    fn revert_examples() {
        let one = rf(&[1], &[1]);
        assert_eq!(revert(&one, 5).unwrap(), TruncSeries::variable(5));
        let catalan = TruncSeries::from_ints(&[0, 1, 1, 2, 5], 4);
        assert_eq!(revert(&rf(&[1], &[1, -1]), 4).unwrap(), catalan);
        assert_eq!(revert_newton(&rf(&[1], &[1, -1]), 4).unwrap(), catalan);
        let y = revert(&a348410_f(), 3).unwrap();
        assert_eq!(y, TruncSeries::from_ints(&[0, 1, 1, 3], 3));
        assert_eq!(
            revert(&rf(&[0, 1], &[1]), 3),
            Err(Error::ReversionNeedsNonzeroConstant)
        );
    }

    #[test]
    fn revert_routes_agree() {
        for f in [a348410_f(), rf(&[2, 1], &[1, 0, 3]), rf(&[1, -1, 1], &[3, 1])] {
            for n in [0, 1, 2, 5, 16] {
                assert_eq!(
                    revert(&f, n).unwrap(),
                    revert_newton(&f, n).unwrap(),
                    "n = {n}"
                );
            }
        }
    }

    #[test]
    fn diagonal_examples() {
        let f = a348410_f();
        assert_eq!(diagonal_coeff(&f, 0).unwrap(), rat(1));
        assert_eq!(diagonal_coeff(&f, 2).unwrap(), rat(5));
        assert_eq!(diagonal_coeff(&f, 3).unwrap(), rat(19));
    }

    #[test]
    fn diagonal_of_geometric_is_central_binomial_half() {
        // C(2n-1, n), with C(-1, 0) = 1
        let expected = [
            1, 1, 3, 10, 35, 126, 462, 1716, 6435, 24310, 92378, 352716, 1352078,
        ];
        let f = rf(&[1], &[1, -1]);
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(diagonal_coeff(&f, n).unwrap(), rat(e), "n = {n}");
        }
        let s = diagonal_series(&f, 12).unwrap();
        assert_eq!(s, TruncSeries::from_ints(&expected, 12));
    }

    #[test]
    fn diagonal_series_matches_coefficientwise() {
        let f = a348410_f();
        let s = diagonal_series(&f, 25).unwrap();
        for n in 0..=25 {
            assert_eq!(s.coeff(n), &diagonal_coeff(&f, n).unwrap());
        }
    }

    #[test]
    fn json_roundtrip() {
        let s = TruncSeries::new(vec![rat(1), crate::exactpoly::ratio(-3, 4)], 2);
        let j = s.to_json();
        assert_eq!(j.coeffs, vec!["1/1", "-3/4", "0/1"]);
        assert_eq!(TruncSeries::from_json(&j).unwrap(), s);
        let bad = SeriesJson {
            coeffs: vec!["1".into()],
            order: 3,
        };
        assert!(TruncSeries::from_json(&bad).is_err());
    }

    #[test]
    fn derivative_and_display() {
        let s = TruncSeries::from_ints(&[1, 2, 3], 2);
        assert_eq!(s.derivative().unwrap(), TruncSeries::from_ints(&[2, 6], 1));
        assert!(TruncSeries::one(0).derivative().is_none());
        assert_eq!(
            TruncSeries::from_ints(&[1, -1, 0, 5], 3).to_string(),
            "1 - t + 5*t^3 + O(t^4)"
        );
    }
}
