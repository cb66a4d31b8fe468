use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ode::{integer_strings, normalize_polys_by, parse_integer_poly, DiffOperator};
use crate::exactpoly::{rational_to_string, Rational, UniPoly, Var};
use crate::oracle::SequenceOracle;
use crate::{Error, Result};

/// Direction of the index shifts in a recurrence file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `sum c_i(n) a(n - i) = 0`
    Backward,
    /// `sum c_i(n) a(n + i) = 0`
    Forward,
}

/// `sum_{i=0..=r} c_i(n) a(n - i) = 0` for all `n >= offset`.
///
/// Coefficients are integer polynomials in `n` of collective content 1, with
/// the first nonzero coefficient having positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftOperator {
    coeffs: Vec<UniPoly>,
    offset: usize,
}

impl ShiftOperator {
    pub fn new(coeffs: Vec<UniPoly>, offset: usize) -> Result<Self> {
        if coeffs.iter().all(UniPoly::is_zero) {
            return Err(Error::ZeroOperator);
        }
        for c in &coeffs {
            if !c.is_constant() && c.var() != Var::N {
                return Err(Error::VariableMismatch {
                    expected: Var::N,
                    found: c.var(),
                });
            }
        }
        let coeffs: Vec<UniPoly> = coeffs.into_iter().map(|c| c.with_var(Var::N)).collect();
        Ok(ShiftOperator {
            coeffs: normalize_polys_by(coeffs, false),
            offset,
        })
    }

    /// From `sum c_i(n) a(n + i) = 0, n >= offset`.
    pub fn from_forward(coeffs: Vec<UniPoly>, offset: usize) -> Result<Self> {
        let r = coeffs.len().saturating_sub(1);
        let backward = coeffs
            .iter()
            .rev()
            .map(|c| shift_poly(&c.clone().with_var(Var::N), -(r as i64)))
            .collect();
        Self::new(backward, offset + r)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// `c_0, ..., c_r`.
    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// `sum c_i(n) a(n - i)`; requires `n >= order`.
    pub fn residual(&self, n: usize, a: &SequenceOracle) -> Rational {
        let nb = BigInt::from(n);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Rational::zero(), |acc, (i, c)| {
                acc + c.eval_integer(&nb) * a.get(n - i)
            })
    }

    pub fn leading_vanishes_at(&self, n: usize) -> bool {
        self.coeffs[0].eval_integer(&BigInt::from(n)).is_zero()
    }

    pub fn to_json(&self) -> ShiftOperatorJson {
        ShiftOperatorJson {
            convention: Convention::Backward,
            offset: self.offset,
            coeffs: self.coeffs.iter().map(integer_strings).collect(),
        }
    }

    pub fn from_json(j: &ShiftOperatorJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| parse_integer_poly(Var::N, c))
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::ZeroOperator);
        }
        match j.convention {
            Convention::Backward => Self::new(coeffs, j.offset),
            Convention::Forward => Self::from_forward(coeffs, j.offset),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: ShiftOperatorJson =
            serde_json::from_str(s).map_err(|e| Error::Invalid(format!("recurrence file: {e}")))?;
        Self::from_json(&j)
    }
}

impl fmt::Display for ShiftOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})*a(n)")?,
                _ => write!(f, "({c})*a(n-{i})")?,
            }
        }
        write!(f, " = 0, n >= {}", self.offset)
    }
}

/// Recurrence file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftOperatorJson {
    pub convention: Convention,
    pub offset: usize,
    pub coeffs: Vec<Vec<serde_json::Value>>,
}

/// `p(n + h)`.
fn shift_poly(p: &UniPoly, h: i64) -> UniPoly {
    let lin = UniPoly::from_ints(p.var(), &[h, 1]);
    p.coeffs()
        .iter()
        .rev()
        .fold(UniPoly::zero(p.var()), |acc, c| {
            &(&acc * &lin) + &UniPoly::constant(p.var(), c.clone())
        })
}

/// Coefficient extraction: `t^a (d/dt)^b` sends `sum a(m) t^m` to a series
/// whose `t^n` coefficient is `(n-a+b)(n-a+b-1)...(n-a+1) a(n-a+b)`. The
/// terms are collected by shift and rewritten in backward form with offset
/// equal to the order, so every index is non-negative.
pub fn ode_to_recurrence(op: &DiffOperator) -> Result<ShiftOperator> {
    use std::collections::BTreeMap;
    let mut by_shift: BTreeMap<i64, UniPoly> = BTreeMap::new();
    for (b, p) in op.coeffs().iter().enumerate() {
        for (a, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = b as i64 - a as i64;
            // (n + s)(n + s - 1)...(n + s - b + 1)
            let ff = (0..b as i64).fold(UniPoly::one(Var::N), |acc, k| {
                &acc * &UniPoly::from_ints(Var::N, &[s - k, 1])
            });
            let term = ff.scale(c);
            let e = by_shift.entry(s).or_insert_with(|| UniPoly::zero(Var::N));
            *e = &*e + &term;
        }
    }
    by_shift.retain(|_, p| !p.is_zero());
    let (&s_min, _) = by_shift.first_key_value().ok_or(Error::ZeroOperator)?;
    let (&s_max, _) = by_shift.last_key_value().ok_or(Error::ZeroOperator)?;
    let r = (s_max - s_min) as usize;
    let coeffs = (0..=r)
        .map(|i| {
            by_shift
                .get(&(s_max - i as i64))
                .map(|q| shift_poly(q, -s_max))
                .unwrap_or_else(|| UniPoly::zero(Var::N))
        })
        .collect();
    let rec = ShiftOperator::new(coeffs, r)?;
    debug_assert!(rec.order() <= op.recurrence_order_bound());
    Ok(rec)
}

/// Outcome of [`check_recurrence`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceReport {
    pub n_from: usize,
    pub n_to: usize,
    /// Number of `n` with a nonzero residual.
    pub failures: usize,
    /// First `n` with a nonzero residual, and the residual.
    pub first_failure: Option<(usize, String)>,
    /// Every `n` in range where `c_0(n) = 0`.
    pub degenerate: Vec<usize>,
}

impl RecurrenceReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn collect(
        n_from: usize,
        n_to: usize,
        rows: impl IntoIterator<Item = (usize, Rational, bool)>,
    ) -> Self {
        let mut report = RecurrenceReport {
            n_from,
            n_to,
            failures: 0,
            first_failure: None,
            degenerate: Vec::new(),
        };
        for (n, residual, degenerate) in rows {
            if degenerate {
                report.degenerate.push(n);
            }
            if !residual.is_zero() {
                report.failures += 1;
                if report.first_failure.is_none() {
                    report.first_failure = Some((n, rational_to_string(&residual)));
                }
            }
        }
        report
    }
}

fn check_range(rec: &ShiftOperator, n_from: usize, n_to: usize) -> Result<()> {
    let min = rec.offset.max(rec.order());
    if n_from < min {
        return Err(Error::Invalid(format!(
            "range must start at or after max(offset, order) = {min}"
        )));
    }
    if n_to < n_from {
        return Err(Error::Invalid(format!("empty range {n_from}..{n_to}")));
    }
    Ok(())
}

/// Exactly evaluates the recurrence against `a` for every `n` in
/// `n_from..=n_to`.
pub fn check_recurrence(
    rec: &ShiftOperator,
    a: &SequenceOracle,
    n_from: usize,
    n_to: usize,
) -> Result<RecurrenceReport> {
    check_range(rec, n_from, n_to)?;
    let rows = (n_from..=n_to).map(|n| (n, rec.residual(n, a), rec.leading_vanishes_at(n)));
    Ok(RecurrenceReport::collect(n_from, n_to, rows))
}

/// Same report as [`check_recurrence`], evaluating the indices in parallel.
/// The oracle is filled serially first.
pub fn check_recurrence_par(
    rec: &ShiftOperator,
    a: &SequenceOracle,
    n_from: usize,
    n_to: usize,
) -> Result<RecurrenceReport> {
    check_range(rec, n_from, n_to)?;
    a.precompute(n_to);
    let rows: Vec<_> = (n_from..=n_to)
        .into_par_iter()
        .map(|n| (n, rec.residual(n, a), rec.leading_vanishes_at(n)))
        .collect();
    Ok(RecurrenceReport::collect(n_from, n_to, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn t(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::T, c)
    }

    fn n(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::N, c)
    }

    #[test]
    fn geometric_ode_gives_constant_sequence() {
        // (1 - t) A' - A
        let op = DiffOperator::new(vec![t(&[-1]), t(&[1, -1])]).unwrap();
        let rec = ode_to_recurrence(&op).unwrap();
        // n a(n) - n a(n-1) = 0, i.e. (n+1) a(n+1) - (n+1) a(n) shifted
        assert_eq!(rec.coeffs(), &[n(&[0, 1]), n(&[0, -1])]);
        assert_eq!(rec.offset(), 1);
    }

    #[test]
    fn central_binomial_ode() {
        // (1 - 4t) A' - 2A
        let op = DiffOperator::new(vec![t(&[-2]), t(&[1, -4])]).unwrap();
        let rec = ode_to_recurrence(&op).unwrap();
        assert_eq!(rec.coeffs(), &[n(&[0, 1]), n(&[2, -4])]);
        let mut a = vec![rat(1)];
        for k in 1..5 {
            let c0 = rec.coeffs()[0].eval(&rat(k));
            let c1 = rec.coeffs()[1].eval(&rat(k));
            let next = -(c1 * &a[k as usize - 1]) / c0;
            a.push(next);
        }
        assert_eq!(a, [1, 2, 6, 20, 70].map(rat));
    }

    #[test]
    fn forward_file_converts_to_backward() {
        // (n+1) a(n+1) - (4n+2) a(n) = 0 for n >= 0
        let j = r#"{"convention":"forward","offset":0,"coeffs":[[-2,-4],["1","1"]]}"#;
        let rec = ShiftOperator::from_json_str(j).unwrap();
        assert_eq!(rec.coeffs(), &[n(&[0, 1]), n(&[2, -4])]);
        assert_eq!(rec.offset(), 1);
        let back = serde_json::to_string(&rec.to_json()).unwrap();
        assert_eq!(
            back,
            r#"{"convention":"backward","offset":1,"coeffs":[["0","1"],["2","-4"]]}"#
        );
        assert_eq!(ShiftOperator::from_json_str(&back).unwrap(), rec);
    }

    #[test]
    fn malformed_files() {
        assert!(ShiftOperator::from_json_str(
            r#"{"convention":"sideways","offset":0,"coeffs":[[1]]}"#
        )
        .is_err());
        assert!(ShiftOperator::from_json_str(
            r#"{"convention":"backward","offset":0,"coeffs":[]}"#
        )
        .is_err());
        assert!(ShiftOperator::from_json_str(
            r#"{"convention":"backward","offset":0,"coeffs":[[1.5]]}"#
        )
        .is_err());
        assert_eq!(
            ShiftOperator::from_json_str(
                r#"{"convention":"backward","offset":0,"coeffs":[[0],[]]}"#
            ),
            Err(Error::ZeroOperator)
        );
    }

    #[test]
    fn checker_reports_degenerate_points_and_failures() {
        // (n - 5) a(n) - (n - 5) a(n-1): constant sequence, degenerate at n = 5
        let rec = ShiftOperator::new(vec![n(&[-5, 1]), n(&[5, -1])], 1).unwrap();
        let ones = SequenceOracle::new("ones", |_| rat(1));
        let r = check_recurrence(&rec, &ones, 1, 20).unwrap();
        assert!(r.passed());
        assert_eq!(r.degenerate, vec![5]);
        let ramp = SequenceOracle::new("ramp", |k| rat(k as i64));
        let r = check_recurrence(&rec, &ramp, 1, 20).unwrap();
        assert_eq!(r.first_failure.as_ref().map(|f| f.0), Some(1));
        assert_eq!(r.failures, 19);
        assert_eq!(check_recurrence_par(&rec, &ramp, 1, 20).unwrap(), r);
        assert!(check_recurrence(&rec, &ones, 0, 3).is_err());
        assert!(check_recurrence(&rec, &ones, 5, 3).is_err());
    }

    #[test]
    fn zero_operator_rejected() {
        assert_eq!(
            DiffOperator::new(vec![t(&[]), t(&[])]),
            Err(Error::ZeroOperator)
        );
        assert_eq!(
            ShiftOperator::new(vec![n(&[])], 0),
            Err(Error::ZeroOperator)
        );
    }
}
