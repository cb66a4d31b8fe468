//! Dense polynomial algorithms over an exact field, shared by [`UniPoly`]
//! (coefficients in Q) and polynomials in `A` with coefficients in Q(t).
//!
//! Polynomials are coefficient vectors indexed by exponent with no trailing
//! zeros; the zero polynomial is the empty vector.
//!
//! [`UniPoly`]: super::UniPoly

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rational;

pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

pub fn trim<F: Field>(mut v: Vec<F>) -> Vec<F> {
    while v.last().is_some_and(Field::is_zero) {
        v.pop();
    }
    v
}

pub fn degree<F: Field>(a: &[F]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.add(y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => F::zero(),
        })
        .collect();
    trim(out)
}

pub fn neg<F: Field>(a: &[F]) -> Vec<F> {
    a.iter().map(Field::neg).collect()
}

pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    add(a, &neg(b))
}

pub fn scale<F: Field>(a: &[F], c: &F) -> Vec<F> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x.mul(c)).collect()
}

pub fn mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(out)
}

/// Euclidean division `a = q b + r` with `deg r < deg b`. Panics if `b` is zero.
pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let lead_inv = b
        .last()
        .and_then(Field::inv)
        .expect("polynomial division by zero");
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![F::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r[r.len() - 1].mul(&lead_inv);
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = r[k + j].sub(&c.mul(bj));
        }
        q[k] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic<F: Field>(a: &[F]) -> Vec<F> {
    match a.last().and_then(Field::inv) {
        Some(inv) => scale(a, &inv),
        None => Vec::new(),
    }
}

/// Monic gcd; `gcd(0, 0)` is the zero polynomial.
pub fn gcd<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// Returns `(g, s, t)` with `s a + t b = g`, `g` the monic gcd.
pub fn ext_gcd<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>, Vec<F>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![F::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![F::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match r0.last().and_then(Field::inv) {
        Some(inv) => (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv)),
        None => (r0, s0, t0),
    }
}

/// Horner evaluation.
pub fn eval<F: Field>(a: &[F], x: &F) -> F {
    a.iter().rev().fold(F::zero(), |acc, c| acc.mul(x).add(c))
}
