//! From a rational `f(x)` to the algebraic equation of its diagonal
//! generating function `A(t) = sum ([x^n] f^n) t^n`.
//!
//! With `y = t f(y)`, Lagrange–Bürmann inversion gives
//! `A = 1 / (1 - t f'(y)) = 1 / (1 - y f'(y)/f(y))`, a rational function of
//! `y` alone. The two relations
//!
//! * `P1(y, t) = y den(y) - t num(y)`, and
//! * `P2(y, A) = A D(y) - N(y)` where `A = N(y)/D(y)` in lowest terms,
//!
//! share the branch `(y(t), A(t))`; `Res_y(P1, P2)` eliminates `y`.

use serde::{Deserialize, Serialize};

use crate::exactpoly::field;
use crate::exactpoly::{resultant, BiPoly, CanonicalPoly, RatFunc, Rational, UniPoly, Var};
use crate::oracle::SequenceOracle;
use crate::series::{self, TruncSeries};
use crate::{Error, Result};

use num_traits::{Signed, Zero};

const YT: (Var, Var) = (Var::Y, Var::T);
const YA: (Var, Var) = (Var::Y, Var::A);
const TA: (Var, Var) = (Var::T, Var::A);

/// The pair `P1(y, t) = 0`, `P2(y, A) = 0` describing `A(t)` parametrically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricSystem {
    pub p1: BiPoly,
    pub p2: BiPoly,
    pub f: RatFunc,
}

impl ParametricSystem {
    /// `N(y)` in `A = N(y) / D(y)`.
    pub fn numerator(&self) -> UniPoly {
        let cs = self.p2.coeffs_in(Var::A).expect("P2 is over (y, A)");
        -&cs[0]
    }

    /// `D(y)` in `A = N(y) / D(y)`.
    pub fn denominator(&self) -> UniPoly {
        let cs = self.p2.coeffs_in(Var::A).expect("P2 is over (y, A)");
        cs.get(1).cloned().unwrap_or_else(|| UniPoly::zero(Var::Y))
    }
}

/// `P(t, A) = 0`, normalized: squarefree in `A`, free of factors in `t` alone,
/// integer content 1, positive coefficient on the lexicographically largest
/// monomial (`t`-degree first).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicEquation {
    p: BiPoly,
}

impl AlgebraicEquation {
    /// Normalizes an arbitrary nonzero polynomial in `t` and `A` (either
    /// variable order) to the form described on the type.
    pub fn new(p: BiPoly) -> Result<Self> {
        let p = p.reorder(TA)?;
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(AlgebraicEquation {
            p: normalize_eliminant(&p)?,
        })
    }

    pub fn poly(&self) -> &BiPoly {
        &self.p
    }

    pub fn deg_a(&self) -> usize {
        self.p.bidegree().map_or(0, |(_, a)| a)
    }

    pub fn deg_t(&self) -> usize {
        self.p.bidegree().map_or(0, |(t, _)| t)
    }

    /// Coefficient of `A^j` as a polynomial in `t`.
    pub fn coeff_of_a(&self, j: usize) -> UniPoly {
        self.p
            .coeffs_in(Var::A)
            .expect("equation is over (t, A)")
            .get(j)
            .cloned()
            .unwrap_or_else(|| UniPoly::zero(Var::T))
    }

    pub fn to_canonical(&self) -> CanonicalPoly {
        self.p.to_canonical()
    }

    /// `gcd_A(P, dP/dA)` over Q(t) is 1.
    pub fn is_squarefree(&self) -> bool {
        is_squarefree_in_a(&self.p)
    }
}

impl std::fmt::Display for AlgebraicEquation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.p.fmt(f)
    }
}

fn is_squarefree_in_a(p: &BiPoly) -> bool {
    let cs = p.rational_coeffs_in(Var::A).expect("(t, A) polynomial");
    let dp = p
        .differentiate(Var::A)
        .and_then(|d| d.rational_coeffs_in(Var::A))
        .expect("(t, A) polynomial");
    field::gcd(&cs, &dp).len() <= 1
}

/// Squarefree part in `A` over Q(t), then removal of the content in Q[t],
/// then integer content and sign.
fn normalize_eliminant(p: &BiPoly) -> Result<BiPoly> {
    let mut p = p.clone();
    if p.degree_in(Var::A)?.unwrap_or(0) > 0 {
        let cs = p.rational_coeffs_in(Var::A)?;
        let dp = p.differentiate(Var::A)?.rational_coeffs_in(Var::A)?;
        let g = field::gcd(&cs, &dp);
        if g.len() > 1 {
            let (q, _) = field::divrem(&cs, &g);
            p = BiPoly::from_rational_coeffs_in(TA, Var::A, &q)?;
        }
    }
    let cs = p.coeffs_in(Var::A)?;
    let mut content = UniPoly::zero(Var::T);
    for c in cs.iter().filter(|c| !c.is_zero()) {
        content = content.gcd(c)?;
    }
    if !content.is_constant() {
        let reduced = cs
            .iter()
            .map(|c| Ok(c.divrem(&content)?.0))
            .collect::<Result<Vec<_>>>()?;
        p = BiPoly::from_coeffs_in(TA, Var::A, &reduced)?;
    }
    Ok(p.content_and_primitive()?.1)
}

/// Builds `(P1, P2)` for `f` with `f(0) != 0`.
pub fn parametric_system(f: &RatFunc) -> Result<ParametricSystem> {
    if f.den().coeff(0).is_zero() {
        return Err(Error::PoleAtOrigin);
    }
    if f.num().coeff(0).is_zero() {
        return Err(Error::ReversionNeedsNonzeroConstant);
    }
    let num = f.num().clone().with_var(Var::Y);
    let den = f.den().clone().with_var(Var::Y);

    // P1 = y den(y) - t num(y)
    let p1 = BiPoly::from_terms(
        YT,
        den.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (k + 1, 0, c.clone()))
            .chain(num.coeffs().iter().enumerate().map(|(k, c)| (k, 1, -c))),
    );
    let p1 = p1.content_and_primitive()?.1;

    // A = 1 / (1 - y f'/f) = L / (L - M), L = num den, M = y (num' den - num den')
    let l = &num * &den;
    let y = UniPoly::identity(Var::Y);
    let m = &y * &(&(&num.derivative() * &den) - &(&num * &den.derivative()));
    let d = &l - &m;
    let g = l.gcd(&d)?;
    let (n_red, _) = l.divrem(&g)?;
    let (d_red, _) = d.divrem(&g)?;
    let p2 = BiPoly::from_terms(
        YA,
        d_red
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| (k, 1, c.clone()))
            .chain(n_red.coeffs().iter().enumerate().map(|(k, c)| (k, 0, -c))),
    );
    // Sign: D(0) > 0, so A = N/D reads with a positive constant denominator.
    let (mut c, _) = p2.content_and_primitive()?;
    if (p2.coeff(0, 1) / &c).is_negative() {
        c = -c;
    }
    let p2 = p2.scale(&c.recip());
    Ok(ParametricSystem {
        p1,
        p2,
        f: f.clone(),
    })
}

/// `Res_y(P1, P2)` as a polynomial in `(t, A)`, without normalization.
pub fn raw_eliminant(sys: &ParametricSystem) -> Result<BiPoly> {
    let r = resultant(&sys.p1, &sys.p2, Var::Y)?;
    let r = r
        .into_bipoly()
        .ok_or_else(|| Error::Invalid("P1 and P2 must not share their second variable".into()))?;
    if r.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    Ok(r)
}

/// Eliminates `y`: the normalized squarefree part of `Res_y(P1, P2)`.
pub fn eliminate(sys: &ParametricSystem) -> Result<AlgebraicEquation> {
    AlgebraicEquation::new(raw_eliminant(sys)?)
}

/// Outcome of a coefficient-by-coefficient series comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    /// Highest order compared.
    pub order: usize,
    /// First order with a nonzero residual, and that residual.
    pub first_failure: Option<(usize, String)>,
}

impl SeriesReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }

    fn from_residual(order: usize, residual: &TruncSeries) -> Self {
        let first_failure = residual
            .valuation()
            .filter(|&k| k <= order)
            .map(|k| (k, crate::exactpoly::rational_to_string(residual.coeff(k))));
        SeriesReport {
            order,
            first_failure,
        }
    }
}

/// The series `sum_{n <= order} a(n) t^n`.
pub fn oracle_series(a: &SequenceOracle, order: usize) -> TruncSeries {
    TruncSeries::new(a.values(order), order)
}

/// Substitutes `A_N(t) = sum_{n <= N} a(n) t^n` into `P` and checks that
/// every coefficient through `t^N` vanishes.
pub fn verify_algebraic(eq: &AlgebraicEquation, a: &SequenceOracle, order: usize) -> SeriesReport {
    let s = oracle_series(a, order);
    let residual = series::substitute(eq.poly(), Var::A, &s).expect("equation is over (t, A)");
    SeriesReport::from_residual(order, &residual)
}

/// Reverts `y = t f(y)`, evaluates `numerator(y) / denominator(y)` and compares
/// it with the oracle through `order`. Returns the computed series alongside
/// the report.
pub fn parametric_series_check(
    f: &RatFunc,
    numerator: &UniPoly,
    denominator: &UniPoly,
    a: &SequenceOracle,
    order: usize,
) -> Result<(SeriesReport, TruncSeries)> {
    for p in [numerator, denominator] {
        if !p.is_constant() && p.var() != Var::Y {
            return Err(Error::VariableMismatch {
                expected: Var::Y,
                found: p.var(),
            });
        }
    }
    if denominator.coeff(0).is_zero() {
        return Err(Error::SeriesNotInvertible);
    }
    let y = series::revert(f, order)?;
    let value = &y.compose_poly(numerator) * &y.compose_poly(denominator).inverse()?;
    let residual = &value - &oracle_series(a, order);
    Ok((SeriesReport::from_residual(order, &residual), value))
}

/// The exactly-known leading coefficients of `P` must agree on `A = 1` at
/// `t = 0`: returns `P(0, A)`.
pub fn constant_slice(eq: &AlgebraicEquation) -> UniPoly {
    eq.poly()
        .eval_at(Var::T, &Rational::zero())
        .expect("equation is over (t, A)")
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

    #[test]
    fn constant_f() {
        let sys = parametric_system(&rf(&[1], &[1])).unwrap();
        assert_eq!(sys.p1, BiPoly::from_int_terms(YT, &[(1, 0, 1), (0, 1, -1)]));
        assert_eq!(sys.p2, BiPoly::from_int_terms(YA, &[(0, 1, 1), (0, 0, -1)]));
        let eq = eliminate(&sys).unwrap();
        assert_eq!(eq.to_string(), "A - 1");
    }

    #[test]
    fn geometric_f() {
        let sys = parametric_system(&rf(&[1], &[1, -1])).unwrap();
        assert_eq!(
            sys.p1,
            BiPoly::from_int_terms(YT, &[(2, 0, 1), (1, 0, -1), (0, 1, 1)])
        );
        // (1 - 2A) y + (A - 1)
        assert_eq!(
            sys.p2,
            BiPoly::from_int_terms(YA, &[(1, 0, 1), (1, 1, -2), (0, 1, 1), (0, 0, -1)])
        );
        assert_eq!(sys.numerator(), UniPoly::from_ints(Var::Y, &[1, -1]));
        assert_eq!(sys.denominator(), UniPoly::from_ints(Var::Y, &[1, -2]));
        let eq = eliminate(&sys).unwrap();
        assert_eq!(eq.deg_a(), 2);
        let binom = SequenceOracle::new("C(2n-1,n)", |n| {
            rat([1, 1, 3, 10, 35, 126, 462, 1716, 6435][n.min(8)] as i64)
        });
        assert!(verify_algebraic(&eq, &binom, 8).passed());
    }

    #[test]
    fn pole_and_zero_constant_rejected() {
        assert_eq!(
            parametric_system(&rf(&[0, 1], &[1])),
            Err(Error::ReversionNeedsNonzeroConstant)
        );
        assert_eq!(
            parametric_system(&rf(&[1], &[0, 1])),
            Err(Error::PoleAtOrigin)
        );
    }

    #[test]
    fn normalization_strips_t_content_and_square_factors() {
        // t^3 (A - 1)^2 (A + t)  ->  (A - 1)(A + t)
        let a_minus_1 = BiPoly::from_int_terms(TA, &[(0, 1, 1), (0, 0, -1)]);
        let a_plus_t = BiPoly::from_int_terms(TA, &[(0, 1, 1), (1, 0, 1)]);
        let t3 = BiPoly::from_int_terms(TA, &[(3, 0, -6)]);
        let p = &(&t3 * &(&a_minus_1 * &a_minus_1)) * &a_plus_t;
        let eq = AlgebraicEquation::new(p).unwrap();
        assert_eq!(eq.poly(), &(&a_minus_1 * &a_plus_t));
        assert!(eq.is_squarefree());
    }

    #[test]
    fn parametric_check_constant_ratio() {
        let f = rf(&[1], &[1, -1]);
        let d = UniPoly::from_ints(Var::Y, &[1, -2]);
        let one_then_zero = SequenceOracle::new("delta", |n| rat((n == 0) as i64));
        let (r, s) = parametric_series_check(&f, &d, &d, &one_then_zero, 6).unwrap();
        assert!(r.passed());
        assert_eq!(s, TruncSeries::one(6));
        let ones = SequenceOracle::new("ones", |_| rat(1));
        let (r, _) = parametric_series_check(&f, &d, &d, &ones, 6).unwrap();
        assert_eq!(r.first_failure.map(|x| x.0), Some(1));
        let bad = UniPoly::from_ints(Var::Y, &[0, 1]);
        assert_eq!(
            parametric_series_check(&f, &d, &bad, &ones, 3).map(|_| ()),
            Err(Error::SeriesNotInvertible)
        );
    }
}
