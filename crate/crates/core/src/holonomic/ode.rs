use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::quotient::{AlgebraicElement, QuotientRing};
use crate::burmann::AlgebraicEquation;
use crate::exactpoly::{RatFunc, Rational, UniPoly, Var};
use crate::series::TruncSeries;
use crate::{Error, Result};

/// `sum_{i=0..=d} p_i(t) (d/dt)^i` with integer polynomial coefficients of
/// collective content 1 and `p_d` having positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffOperator {
    coeffs: Vec<UniPoly>,
}

impl DiffOperator {
    /// Normalizes `coeffs` (content and sign); trailing zero coefficients are
    /// dropped.
    pub fn new(mut coeffs: Vec<UniPoly>) -> Result<Self> {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroOperator);
        }
        for c in &mut coeffs {
            if c.var() != Var::T {
                if c.is_constant() {
                    *c = c.clone().with_var(Var::T);
                } else {
                    return Err(Error::VariableMismatch {
                        expected: Var::T,
                        found: c.var(),
                    });
                }
            }
        }
        let coeffs = normalize_polys(coeffs);
        Ok(DiffOperator { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `p_0, ..., p_d`.
    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Applies the operator to a truncated series; the result is exact
    /// through order `N - d`. `None` when `N < d`.
    pub fn apply(&self, s: &TruncSeries) -> Option<TruncSeries> {
        let out_order = s.order().checked_sub(self.order())?;
        let mut deriv = s.clone();
        let mut acc = TruncSeries::zero(out_order);
        for (i, p) in self.coeffs.iter().enumerate() {
            if i > 0 {
                deriv = deriv.derivative()?;
            }
            let term = &TruncSeries::from_poly(p, out_order) * &deriv.truncate(out_order);
            acc = &acc + &term;
        }
        Some(acc)
    }

    /// `max_i (deg p_i - i) + d`, the bound on the order of the induced
    /// recurrence.
    pub fn recurrence_order_bound(&self) -> usize {
        let d = self.order() as i64;
        let m = self
            .coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.degree().map(|k| k as i64 - i as i64))
            .max()
            .unwrap_or(0);
        (m + d).max(0) as usize
    }

    pub fn to_json(&self) -> DiffOperatorJson {
        DiffOperatorJson {
            var: "t".into(),
            order: self.order(),
            coeffs: self.coeffs.iter().map(integer_strings).collect(),
        }
    }

    pub fn from_json(j: &DiffOperatorJson) -> Result<Self> {
        if j.var != "t" {
            return Err(Error::Invalid(format!(
                "expected var \"t\", found {:?}",
                j.var
            )));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| parse_integer_poly(Var::T, c))
            .collect::<Result<Vec<_>>>()?;
        let op = Self::new(coeffs)?;
        if op.order() != j.order {
            return Err(Error::Invalid(format!(
                "declared order {} but {} coefficients",
                j.order,
                j.coeffs.len()
            )));
        }
        Ok(op)
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, p) in self.coeffs.iter().enumerate().rev() {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({p})*A")?,
                1 => write!(f, "({p})*A'")?,
                _ => write!(f, "({p})*A^({i})")?,
            }
        }
        Ok(())
    }
}

/// JSON form: integer coefficient lists (decimal strings) in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffOperatorJson {
    pub var: String,
    pub order: usize,
    pub coeffs: Vec<Vec<serde_json::Value>>,
}

pub(crate) fn integer_strings(p: &UniPoly) -> Vec<serde_json::Value> {
    p.integer_coeffs()
        .expect("normalized operators have integer coefficients")
        .into_iter()
        .map(|c| serde_json::Value::String(c.to_string()))
        .collect()
}

/// Accepts JSON integers or decimal strings.
pub(crate) fn parse_integer_poly(var: Var, cs: &[serde_json::Value]) -> Result<UniPoly> {
    let ints = cs
        .iter()
        .map(|v| match v {
            serde_json::Value::String(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Invalid(format!("not an integer: {s:?}"))),
            serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => {
                Ok(n.to_string().parse().unwrap())
            }
            other => Err(Error::Invalid(format!("not an integer: {other}"))),
        })
        .collect::<Result<Vec<BigInt>>>()?;
    Ok(UniPoly::from_bigints(var, ints))
}

/// Scales a family of polynomials to integer coefficients of collective
/// content 1; the sign makes the leading coefficient of the last nonzero
/// member positive.
pub(crate) fn normalize_polys(polys: Vec<UniPoly>) -> Vec<UniPoly> {
    normalize_polys_by(polys, true)
}

/// As [`normalize_polys`]; `last` selects whether the sign is fixed by the
/// last or the first nonzero member.
pub(crate) fn normalize_polys_by(polys: Vec<UniPoly>, last: bool) -> Vec<UniPoly> {
    let all: Vec<Rational> = polys
        .iter()
        .flat_map(|p| p.coeffs().iter().cloned())
        .collect();
    let mut c = crate::exactpoly::rational_content(&all);
    let mut nonzero = polys.iter().filter(|p| !p.is_zero());
    let pick = if last {
        nonzero.next_back()
    } else {
        nonzero.next()
    };
    if pick.is_some_and(|p| p.leading_coeff().is_negative()) {
        c = -c;
    }
    let inv = c.recip();
    polys.into_iter().map(|p| p.scale(&inv)).collect()
}

/// Kernel vector of the columns, if they are linearly dependent over Q(t).
fn dependence(columns: &[Vec<RatFunc>]) -> Option<Vec<RatFunc>> {
    let cols = columns.len();
    let rows = columns.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<RatFunc>> = (0..rows)
        .map(|r| (0..cols).map(|c| columns[c][r].clone()).collect())
        .collect();
    let mut pivots = Vec::new();
    for (row, col) in (0..cols).enumerate() {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            // free column: express it through the pivot columns
            let mut x = vec![RatFunc::zero_in(Var::T); cols];
            x[col] = RatFunc::one_in(Var::T);
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -&m[r][col];
            }
            return Some(x);
        };
        m.swap(row, p);
        let inv = m[row][col].recip().expect("nonzero pivot");
        for v in &mut m[row][col..] {
            *v = &*v * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, line) in m.iter_mut().enumerate() {
            if r != row && !line[col].is_zero() {
                let factor = line[col].clone();
                for (v, p) in line[col..].iter_mut().zip(&pivot_row[col..]) {
                    *v = &*v - &(p * &factor);
                }
            }
        }
        pivots.push(col);
    }
    None
}

/// Derives a linear ODE for the algebraic function defined by `eq`: the first
/// `r` for which `A, A', ..., A^(r)` are dependent over Q(t) in
/// Q(t)[A]/(P). The order is at most `deg_A P`.
pub fn derive_ode(eq: &AlgebraicEquation) -> Result<DiffOperator> {
    let ring = QuotientRing::new(eq.clone())?;
    derive_ode_in(&ring).map(|(op, _)| op)
}

/// As [`derive_ode`], also returning the derivative elements `A..A^(r)`.
pub fn derive_ode_in(
    ring: &std::sync::Arc<QuotientRing>,
) -> Result<(DiffOperator, Vec<AlgebraicElement>)> {
    let mut elems = vec![ring.generator()];
    loop {
        let cols: Vec<Vec<RatFunc>> = elems.iter().map(|e| e.coords().to_vec()).collect();
        if let Some(x) = dependence(&cols) {
            let r = x
                .iter()
                .rposition(|c| !c.is_zero())
                .expect("nonzero kernel vector");
            let lead = x[r].clone();
            let x: Vec<RatFunc> = x[..=r]
                .iter()
                .map(|c| c.checked_div(&lead))
                .collect::<Result<_>>()?;
            let mut l = UniPoly::one(Var::T);
            for c in &x {
                let d = c.den().clone().with_var(Var::T);
                let g = l.gcd(&d)?;
                l = (&l * &d).divrem(&g)?.0;
            }
            let polys = x
                .iter()
                .map(|c| {
                    let num = c.num().clone().with_var(Var::T);
                    Ok((&num * &l).divrem(&c.den().clone().with_var(Var::T))?.0)
                })
                .collect::<Result<Vec<_>>>()?;
            elems.truncate(r + 1);
            return Ok((DiffOperator::new(polys)?, elems));
        }
        debug_assert!(
            elems.len() <= ring.degree(),
            "d + 1 vectors in dimension d are dependent"
        );
        let next = elems.last().unwrap().derivative()?;
        elems.push(next);
    }
}
