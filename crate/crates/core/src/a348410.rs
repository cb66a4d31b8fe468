//! OEIS A348410: `a(n) = [x^n] ((1-x)(1-x^2))^(-n)`.
//!
//! Two independent exact oracles (the diagonal coefficient and a single-index
//! binomial sum), the literal polynomial objects of the Lagrange–Bürmann
//! derivation, and Kotesovec's order-2 recurrence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::burmann::{AlgebraicEquation, ParametricSystem};
use crate::exactpoly::{BiPoly, RatFunc, Rational, UniPoly, Var};
use crate::holonomic::ShiftOperator;
use crate::oracle::SequenceOracle;
use crate::series;

/// `a(0..=10)` as listed in the OEIS entry.
pub const FIRST_VALUES: [u64; 11] = [1, 1, 5, 19, 85, 376, 1715, 7890, 36693, 171820, 809380];

/// `f(x) = 1 / ((1-x)(1-x^2)) = 1 / ((1-x)^2 (1+x))`.
pub fn generating_f() -> RatFunc {
    RatFunc::new(
        UniPoly::one(Var::X),
        UniPoly::from_ints(Var::X, &[1, -1, -1, 1]),
    )
    .expect("nonzero denominator")
}

/// `C(m, j)` for any integer `m` and `j >= 0`: `C(m, 0) = 1`, otherwise
/// `m (m-1) ... (m-j+1) / j!`.
pub fn binomial(m: &BigInt, j: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= m - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// `sum_{k=0}^{floor(n/2)} C(2n-2k-1, n-2k) C(n+k-1, k)`.
///
/// Consecutive terms are related by
/// `T(k+1) = T(k) * j (j-1) (n+k) / (m (m-1) (k+1))` with `m = 2n-2k-1` and
/// `j = n-2k`, which keeps the whole sum at `O(n)` big-integer steps.
pub fn a_binomial(n: u64) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let nb = BigInt::from(n);
    let mut term = binomial(&(BigInt::from(2) * &nb - 1), n);
    let mut sum = term.clone();
    for k in 0..n / 2 {
        let m = BigInt::from(2 * n - 2 * k - 1);
        let j = BigInt::from(n - 2 * k);
        let num = &j * (&j - 1u32) * (&nb + BigInt::from(k));
        let den = &m * (&m - 1u32) * BigInt::from(k + 1);
        term *= num;
        let (q, r) = term.div_rem(&den);
        debug_assert!(r.is_zero());
        term = q;
        sum += &term;
    }
    sum
}

/// The binomial sum term by term, each binomial from scratch.
pub fn a_binomial_direct(n: u64) -> BigInt {
    let n = n as i64;
    (0..=n / 2)
        .map(|k| {
            binomial(&BigInt::from(2 * n - 2 * k - 1), (n - 2 * k) as u64)
                * binomial(&BigInt::from(n + k - 1), k as u64)
        })
        .sum()
}

/// `[x^n] f(x)^n` by series expansion and exponentiation.
pub fn a_diagonal(n: u64) -> BigInt {
    series::diagonal_coeff(&generating_f(), n as usize)
        .expect("f has no pole at 0")
        .to_integer()
}

pub fn binomial_oracle() -> SequenceOracle {
    SequenceOracle::new("A348410 binomial sum", |n| {
        Rational::from_integer(a_binomial(n as u64))
    })
}

pub fn diagonal_oracle() -> SequenceOracle {
    SequenceOracle::new("A348410 diagonal [x^n] f^n", |n| {
        Rational::from_integer(a_diagonal(n as u64))
    })
}

/// Kotesovec's recurrence, backward form, offset 3:
///
/// ```text
/// 16 (n-1) n (2n-1) (51n^2-162n+127) a(n)
///   - (n-1) (5457n^4-22791n^3+32144n^2-17536n+3072) a(n-1)
///   - 8 (2n-3) (4n-7) (4n-5) (51n^2-60n+16) a(n-2) = 0
/// ```
pub fn kotesovec_operator() -> ShiftOperator {
    let p = |c: &[i64]| UniPoly::from_ints(Var::N, c);
    let prod = |fs: &[UniPoly]| fs.iter().fold(UniPoly::one(Var::N), |acc, f| &acc * f);
    let c0 = prod(&[
        p(&[16]),
        p(&[-1, 1]),
        p(&[0, 1]),
        p(&[-1, 2]),
        p(&[127, -162, 51]),
    ]);
    let c1 = prod(&[
        p(&[-1]),
        p(&[-1, 1]),
        p(&[3072, -17536, 32144, -22791, 5457]),
    ]);
    let c2 = prod(&[
        p(&[-8]),
        p(&[-3, 2]),
        p(&[-7, 4]),
        p(&[-5, 4]),
        p(&[16, -60, 51]),
    ]);
    ShiftOperator::new(vec![c0, c1, c2], 3).expect("nonzero operator")
}

/// The literal `P1`, `P2` and `P(t, A)`, written out independently of the
/// elimination pipeline.
pub fn reference_objects() -> (ParametricSystem, AlgebraicEquation) {
    let p1 = BiPoly::from_int_terms(
        (Var::Y, Var::T),
        &[(4, 0, 1), (3, 0, -1), (2, 0, -1), (1, 0, 1), (0, 1, -1)],
    );
    // (1 - 4A) y^2 - A y + (A - 1)
    let p2 = BiPoly::from_int_terms(
        (Var::Y, Var::A),
        &[(2, 0, 1), (2, 1, -4), (1, 1, -1), (0, 1, 1), (0, 0, -1)],
    );
    let p = algebraic_poly();
    let sys = ParametricSystem {
        p1,
        p2,
        f: generating_f(),
    };
    (sys, AlgebraicEquation::new(p).expect("nonzero"))
}

/// `(256t^2 + 107t - 32)(A^4 - A^3) + (96t^2 + 36t)A^2 - (16t^2 + 4t)A + t^2`.
pub fn algebraic_poly() -> BiPoly {
    let lead = [(2, 256), (1, 107), (0, -32)];
    let mut terms = Vec::new();
    for (i, c) in lead {
        terms.push((i, 4, c));
        terms.push((i, 3, -c));
    }
    terms.extend([(2, 2, 96), (1, 2, 36), (2, 1, -16), (1, 1, -4), (2, 0, 1)]);
    BiPoly::from_int_terms((Var::T, Var::A), &terms)
}
