use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::unipoly::{forward_owned, power_string, rational_content, write_terms};
use super::{parse_rational, rational_to_string, RatFunc, Rational, UniPoly, Var};
use crate::{Error, Result};

/// Exponent pair `(i, j)` of `u^i v^j`.
pub type Monomial = (usize, usize);

/// Dense bivariate polynomial `sum c[i][j] u^i v^j` over Q, where
/// `(u, v) = vars`. Storage is a trimmed rectangle: the last row and the last
/// column each contain a nonzero entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BiPoly {
    coeffs: Vec<Vec<Rational>>,
    vars: (Var, Var),
}

impl BiPoly {
    pub fn new(vars: (Var, Var), coeffs: Vec<Vec<Rational>>) -> Self {
        assert_ne!(
            vars.0, vars.1,
            "bivariate polynomial needs two distinct variables"
        );
        let mut p = BiPoly { coeffs, vars };
        p.normalize();
        p
    }

    pub fn zero(vars: (Var, Var)) -> Self {
        Self::new(vars, Vec::new())
    }

    pub fn constant(vars: (Var, Var), c: Rational) -> Self {
        Self::new(vars, vec![vec![c]])
    }

    pub fn from_terms(
        vars: (Var, Var),
        terms: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut coeffs: Vec<Vec<Rational>> = Vec::new();
        for (i, j, c) in terms {
            if coeffs.len() <= i {
                coeffs.resize(i + 1, Vec::new());
            }
            let row = &mut coeffs[i];
            if row.len() <= j {
                row.resize(j + 1, Rational::zero());
            }
            row[j] += c;
        }
        Self::new(vars, coeffs)
    }

    pub fn from_int_terms(vars: (Var, Var), terms: &[(usize, usize, i64)]) -> Self {
        Self::from_terms(vars, terms.iter().map(|&(i, j, c)| (i, j, super::rat(c))))
    }

    /// The polynomial consisting of the single variable `var`.
    pub fn variable(vars: (Var, Var), var: Var) -> Result<Self> {
        let pos = position(vars, var)?;
        Ok(if pos == 0 {
            Self::from_int_terms(vars, &[(1, 0, 1)])
        } else {
            Self::from_int_terms(vars, &[(0, 1, 1)])
        })
    }

    fn normalize(&mut self) {
        let width = self.coeffs.iter().map(Vec::len).max().unwrap_or(0);
        for row in &mut self.coeffs {
            row.resize(width, Rational::zero());
        }
        while self
            .coeffs
            .last()
            .is_some_and(|r| r.iter().all(Zero::is_zero))
        {
            self.coeffs.pop();
        }
        loop {
            let last_col_zero = self
                .coeffs
                .iter()
                .all(|r| r.last().is_none_or(Zero::is_zero));
            if !last_col_zero || self.coeffs.first().is_none_or(|r| r.is_empty()) {
                break;
            }
            for row in &mut self.coeffs {
                row.pop();
            }
        }
        if self.coeffs.first().is_some_and(|r| r.is_empty()) {
            self.coeffs.clear();
        }
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        self.coeffs
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    /// `(deg_u, deg_v)`, `None` for the zero polynomial.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        if self.is_zero() {
            None
        } else {
            Some((self.coeffs.len() - 1, self.coeffs[0].len() - 1))
        }
    }

    pub fn degree_in(&self, var: Var) -> Result<Option<usize>> {
        let pos = position(self.vars, var)?;
        Ok(self.bidegree().map(|(a, b)| if pos == 0 { a } else { b }))
    }

    /// The variable other than `var`.
    pub fn other_var(&self, var: Var) -> Result<Var> {
        Ok(if position(self.vars, var)? == 0 {
            self.vars.1
        } else {
            self.vars.0
        })
    }

    /// Nonzero terms in ascending lexicographic order of `(i, j)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    /// Lexicographically largest monomial with nonzero coefficient
    /// (first-variable degree first).
    pub fn leading_monomial(&self) -> Option<Monomial> {
        let i = self.coeffs.len().checked_sub(1)?;
        let j = self.coeffs[i].iter().rposition(|c| !c.is_zero())?;
        Some((i, j))
    }

    fn check(&self, other: &BiPoly) {
        assert_eq!(
            self.vars, other.vars,
            "variable mismatch in bivariate polynomial arithmetic"
        );
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|r| r.iter().map(|x| x * c).collect())
            .collect();
        Self::new(self.vars, coeffs)
    }

    /// Same polynomial with variable order swapped.
    pub fn transpose(&self) -> Self {
        Self::from_terms(
            (self.vars.1, self.vars.0),
            self.terms().map(|(i, j, c)| (j, i, c.clone())),
        )
    }

    /// Same polynomial expressed over `vars`, which must be the same pair in
    /// either order.
    pub fn reorder(&self, vars: (Var, Var)) -> Result<Self> {
        if vars == self.vars {
            Ok(self.clone())
        } else if vars == (self.vars.1, self.vars.0) {
            Ok(self.transpose())
        } else {
            Err(Error::VariableMismatch {
                expected: vars.0,
                found: self.vars.0,
            })
        }
    }

    pub fn differentiate(&self, var: Var) -> Result<Self> {
        let pos = position(self.vars, var)?;
        let terms = self.terms().filter_map(|(i, j, c)| {
            let e = if pos == 0 { i } else { j };
            (e > 0).then(|| {
                let c = c * Rational::from_integer(BigInt::from(e));
                if pos == 0 {
                    (i - 1, j, c)
                } else {
                    (i, j - 1, c)
                }
            })
        });
        Ok(Self::from_terms(self.vars, terms))
    }

    /// Coefficients as a polynomial in `var`: entry `k` is the coefficient of
    /// `var^k`, a polynomial in the other variable.
    pub fn coeffs_in(&self, var: Var) -> Result<Vec<UniPoly>> {
        let pos = position(self.vars, var)?;
        let other = self.other_var(var)?;
        let Some((du, dv)) = self.bidegree() else {
            return Ok(Vec::new());
        };
        let out = if pos == 0 {
            (0..=du)
                .map(|i| UniPoly::new(other, self.coeffs[i].clone()))
                .collect()
        } else {
            (0..=dv)
                .map(|j| UniPoly::new(other, (0..=du).map(|i| self.coeffs[i][j].clone()).collect()))
                .collect()
        };
        Ok(out)
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(vars: (Var, Var), var: Var, coeffs: &[UniPoly]) -> Result<Self> {
        let pos = position(vars, var)?;
        let other = if pos == 0 { vars.1 } else { vars.0 };
        let mut terms = Vec::new();
        for (k, p) in coeffs.iter().enumerate() {
            if !p.is_constant() && p.var() != other {
                return Err(Error::VariableMismatch {
                    expected: other,
                    found: p.var(),
                });
            }
            for (l, c) in p.coeffs().iter().enumerate() {
                terms.push(if pos == 0 {
                    (k, l, c.clone())
                } else {
                    (l, k, c.clone())
                });
            }
        }
        Ok(Self::from_terms(vars, terms))
    }

    /// Substitutes `var = x`, leaving a polynomial in the other variable.
    pub fn eval_at(&self, var: Var, x: &Rational) -> Result<UniPoly> {
        let other = self.other_var(var)?;
        let acc = self
            .coeffs_in(var)?
            .iter()
            .rev()
            .fold(UniPoly::zero(other), |acc, c| &acc.scale(x) + c);
        Ok(acc)
    }

    /// `self = c * g` with `g` integral, of integer content 1, and with positive
    /// coefficient on its lexicographically largest monomial.
    pub fn content_and_primitive(&self) -> Result<(Rational, BiPoly)> {
        let (i, j) = self.leading_monomial().ok_or(Error::ZeroPolynomial)?;
        let all: Vec<Rational> = self.terms().map(|(_, _, c)| c.clone()).collect();
        let mut c = rational_content(&all);
        if self.coeffs[i][j].is_negative() {
            c = -c;
        }
        Ok((c.clone(), self.scale(&c.recip())))
    }

    /// Exact quotient `self / divisor`, or `None` when `divisor` does not
    /// divide `self` in Q[u, v].
    pub fn div_exact(&self, divisor: &BiPoly) -> Option<BiPoly> {
        self.check(divisor);
        let (di, dj) = divisor.leading_monomial()?;
        let lead = divisor.coeffs[di][dj].clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((i, j)) = rem.leading_monomial() {
            if i < di || j < dj {
                return None;
            }
            let c = &rem.coeffs[i][j] / &lead;
            let (qi, qj) = (i - di, j - dj);
            let shifted = Self::from_terms(
                self.vars,
                divisor.terms().map(|(a, b, x)| (a + qi, b + qj, x * &c)),
            );
            rem = &rem - &shifted;
            quot.push((qi, qj, c));
        }
        Some(Self::from_terms(self.vars, quot))
    }

    /// Coefficients in `var` as rational functions of the other variable.
    pub fn rational_coeffs_in(&self, var: Var) -> Result<Vec<RatFunc>> {
        Ok(self
            .coeffs_in(var)?
            .into_iter()
            .map(RatFunc::from_poly)
            .collect())
    }

    /// Builds `sum coeffs[k] var^k` after multiplying through by the lcm of
    /// the coefficient denominators. The result is not content-normalized.
    pub fn from_rational_coeffs_in(vars: (Var, Var), var: Var, coeffs: &[RatFunc]) -> Result<Self> {
        let other = if position(vars, var)? == 0 {
            vars.1
        } else {
            vars.0
        };
        let mut l = UniPoly::one(other);
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            let d = c.den().clone().with_var(other);
            let g = l.gcd(&d)?;
            l = (&l * &d).divrem(&g)?.0;
        }
        let polys = coeffs
            .iter()
            .map(|c| {
                let (num, den) = (
                    c.num().clone().with_var(other),
                    c.den().clone().with_var(other),
                );
                let (q, r) = (&num * &l).divrem(&den)?;
                debug_assert!(r.is_zero());
                Ok(q)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs_in(vars, var, &polys)
    }

    /// Canonical `[i, j, "num/den"]` triples in ascending lexicographic order.
    pub fn to_canonical(&self) -> CanonicalPoly {
        CanonicalPoly {
            vars: [self.vars.0.to_string(), self.vars.1.to_string()],
            terms: self
                .terms()
                .map(|(i, j, c)| CanonicalTerm(i, j, rational_to_string(c)))
                .collect(),
        }
    }

    pub fn from_canonical(c: &CanonicalPoly) -> Result<Self> {
        let vars = (c.vars[0].parse()?, c.vars[1].parse()?);
        if vars.0 == vars.1 {
            return Err(Error::Invalid("repeated variable".into()));
        }
        let terms = c
            .terms
            .iter()
            .map(|CanonicalTerm(i, j, s)| Ok((*i, *j, parse_rational(s)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(vars, terms))
    }
}

fn position(vars: (Var, Var), var: Var) -> Result<usize> {
    if var == vars.0 {
        Ok(0)
    } else if var == vars.1 {
        Ok(1)
    } else {
        Err(Error::UnknownVariable {
            var,
            first: vars.0,
            second: vars.1,
        })
    }
}

/// Text form of a [`BiPoly`] used in JSON output and golden files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalPoly {
    pub vars: [String; 2],
    pub terms: Vec<CanonicalTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalTerm(pub usize, pub usize, pub String);

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        self.check(rhs);
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let cols = self
            .coeffs
            .first()
            .map_or(0, Vec::len)
            .max(rhs.coeffs.first().map_or(0, Vec::len));
        let coeffs = (0..rows)
            .map(|i| {
                (0..cols)
                    .map(|j| self.coeff(i, j) + rhs.coeff(i, j))
                    .collect()
            })
            .collect();
        BiPoly::new(self.vars, coeffs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        self.check(rhs);
        let (Some((a1, b1)), Some((a2, b2))) = (self.bidegree(), rhs.bidegree()) else {
            return BiPoly::zero(self.vars);
        };
        let mut out = vec![vec![Rational::zero(); b1 + b2 + 1]; a1 + a2 + 1];
        for (i, j, x) in self.terms() {
            for (k, l, y) in rhs.terms() {
                out[i + k][j + l] += x * y;
            }
        }
        BiPoly::new(self.vars, out)
    }
}

forward_owned!(BiPoly, Add::add, Sub::sub, Mul::mul);

impl fmt::Display for BiPoly {
    /// Terms in descending lexicographic order, e.g. `256*t^2*A^4 - ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        terms.reverse();
        let (u, v) = self.vars;
        write_terms(
            f,
            terms.into_iter().map(|(i, j, c)| {
                let mono = [power_string(u, i), power_string(v, j)]
                    .into_iter()
                    .filter(|s| !s.is_empty())
                    .collect::<Vec<_>>()
                    .join("*");
                (c.clone(), mono)
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    const TA: (Var, Var) = (Var::T, Var::A);
    const YT: (Var, Var) = (Var::Y, Var::T);

    #[test]
    fn content_examples() {
        let p = BiPoly::from_int_terms(TA, &[(2, 0, 4), (1, 1, 2)]);
        let (c, g) = p.content_and_primitive().unwrap();
        assert_eq!(c, rat(2));
        assert_eq!(g, BiPoly::from_int_terms(TA, &[(2, 0, 2), (1, 1, 1)]));

        let p = BiPoly::from_int_terms(TA, &[(1, 0, -3)]);
        let (c, g) = p.content_and_primitive().unwrap();
        assert_eq!(c, rat(-3));
        assert_eq!(g, BiPoly::from_int_terms(TA, &[(1, 0, 1)]));

        assert_eq!(
            BiPoly::zero(TA).content_and_primitive(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn differentiate_p1() {
        let p1 = BiPoly::from_int_terms(
            YT,
            &[(4, 0, 1), (3, 0, -1), (2, 0, -1), (1, 0, 1), (0, 1, -1)],
        );
        let d = p1.differentiate(Var::Y).unwrap();
        assert_eq!(
            d,
            BiPoly::from_int_terms(YT, &[(3, 0, 4), (2, 0, -3), (1, 0, -2), (0, 0, 1)])
        );
        assert!(matches!(
            p1.differentiate(Var::A),
            Err(Error::UnknownVariable { .. })
        ));
    }

    #[test]
    fn trimming() {
        let p = BiPoly::new(
            TA,
            vec![vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(0)]],
        );
        assert_eq!(p.bidegree(), Some((0, 1)));
        assert!(BiPoly::new(TA, vec![vec![rat(0)]]).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = BiPoly::from_int_terms(TA, &[(1, 0, 1), (0, 1, -1)]);
        let b = BiPoly::from_int_terms(TA, &[(2, 1, 3), (0, 0, 7)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(b.div_exact(&BiPoly::from_int_terms(TA, &[(1, 0, 1)])), None);
    }

    #[test]
    fn coefficient_views_roundtrip() {
        let p = BiPoly::from_int_terms(TA, &[(2, 4, 256), (1, 4, 107), (0, 4, -32), (2, 0, 1)]);
        for v in [Var::T, Var::A] {
            let cs = p.coeffs_in(v).unwrap();
            assert_eq!(BiPoly::from_coeffs_in(TA, v, &cs).unwrap(), p);
        }
        assert_eq!(p.coeffs_in(Var::A).unwrap().len(), 5);
        assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn display_and_canonical() {
        let p = BiPoly::from_int_terms(TA, &[(0, 1, 1), (0, 0, -1)]);
        assert_eq!(p.to_string(), "A - 1");
        let c = p.to_canonical();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"vars":["t","A"],"terms":[[0,0,"-1/1"],[0,1,"1/1"]]}"#
        );
        assert_eq!(BiPoly::from_canonical(&c).unwrap(), p);
    }
}
