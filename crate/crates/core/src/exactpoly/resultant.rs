//! Resultants of bivariate polynomials with respect to one variable.
//!
//! Two independent routes: the Sylvester determinant evaluated by
//! fraction-free (Bareiss) elimination, and Collins' subresultant polynomial
//! remainder sequence. Both work over the polynomial ring in the remaining
//! variables, so every division they perform is exact.

use num_traits::One;

use super::{BiPoly, Rational, UniPoly, Var};
use crate::{Error, Result};

/// Result of eliminating one variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eliminant {
    /// Both inputs shared their remaining variable.
    Uni(UniPoly),
    /// The inputs had different remaining variables `(u, v)`, in the order
    /// (first input's, second input's).
    Bi(BiPoly),
}

impl Eliminant {
    pub fn into_bipoly(self) -> Option<BiPoly> {
        match self {
            Eliminant::Bi(p) => Some(p),
            Eliminant::Uni(_) => None,
        }
    }

    pub fn into_unipoly(self) -> Option<UniPoly> {
        match self {
            Eliminant::Uni(p) => Some(p),
            Eliminant::Bi(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Eliminant::Uni(p) => p.is_zero(),
            Eliminant::Bi(p) => p.is_zero(),
        }
    }
}

/// Polynomials in the eliminated variable whose coefficients live in a common
/// bivariate ring.
struct Lifted {
    f: Vec<BiPoly>,
    g: Vec<BiPoly>,
    ring: (Var, Var),
    single: Option<Var>,
}

fn lift(f: &BiPoly, g: &BiPoly, var: Var) -> Result<Lifted> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ResultantOfZero);
    }
    let (of, og) = (f.other_var(var)?, g.other_var(var)?);
    let (ring, single) = if of != og {
        ((of, og), None)
    } else {
        let spare = Var::ALL
            .into_iter()
            .find(|&v| v != of && v != var)
            .expect("closed variable set has at least three tags");
        ((of, spare), Some(of))
    };
    let embed = |p: &BiPoly, other: Var| -> Result<Vec<BiPoly>> {
        p.coeffs_in(var)?
            .iter()
            .map(|c| {
                let along = if ring.0 == other { ring.1 } else { ring.0 };
                BiPoly::from_coeffs_in(ring, along, std::slice::from_ref(c))
            })
            .collect()
    };
    let fl = embed(f, of)?;
    let gl = embed(g, og)?;
    if fl.len() <= 1 && gl.len() <= 1 {
        return Err(Error::ConstantInVariable(var));
    }
    Ok(Lifted {
        f: fl,
        g: gl,
        ring,
        single,
    })
}

fn finish(l: &Lifted, r: BiPoly) -> Eliminant {
    match l.single {
        None => Eliminant::Bi(r),
        Some(v) => Eliminant::Uni(
            r.coeffs_in(l.ring.1)
                .expect("ring variable")
                .into_iter()
                .next()
                .unwrap_or_else(|| UniPoly::zero(v)),
        ),
    }
}

/// `Res_var(f, g)`: the determinant of the Sylvester matrix of `f` and `g`
/// viewed as polynomials in `var`. No normalization is applied.
pub fn resultant(f: &BiPoly, g: &BiPoly, var: Var) -> Result<Eliminant> {
    let l = lift(f, g, var)?;
    let m = l.f.len() - 1;
    let n = l.g.len() - 1;
    let size = m + n;
    let zero = BiPoly::zero(l.ring);
    let mut mat = vec![vec![zero.clone(); size]; size];
    // Rows hold coefficients from the highest power down.
    for r in 0..n {
        for (k, c) in l.f.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in l.g.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    Ok(finish(&l, bareiss_det(mat, l.ring)))
}

/// Determinant by fraction-free Gaussian elimination.
pub(crate) fn bareiss_det(mut mat: Vec<Vec<BiPoly>>, ring: (Var, Var)) -> BiPoly {
    let n = mat.len();
    if n == 0 {
        return BiPoly::constant(ring, Rational::one());
    }
    let mut negate = false;
    let mut prev = BiPoly::constant(ring, Rational::one());
    for k in 0..n {
        if mat[k][k].is_zero() {
            match (k + 1..n).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    negate = !negate;
                }
                None => return BiPoly::zero(ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            mat[i][k] = BiPoly::zero(ring);
        }
        prev = mat[k][k].clone();
    }
    let det = mat[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// `Res_var(f, g)` by the subresultant PRS; agrees with [`resultant`].
pub fn resultant_subresultant(f: &BiPoly, g: &BiPoly, var: Var) -> Result<Eliminant> {
    let l = lift(f, g, var)?;
    let r = subresultant(l.f.clone(), l.g.clone(), l.ring);
    Ok(finish(&l, r))
}

fn deg(p: &[BiPoly]) -> usize {
    p.len() - 1
}

fn lc(p: &[BiPoly]) -> &BiPoly {
    p.last().expect("nonzero polynomial")
}

fn trim(mut p: Vec<BiPoly>) -> Vec<BiPoly> {
    while p.last().is_some_and(BiPoly::is_zero) {
        p.pop();
    }
    p
}

fn pow(b: &BiPoly, e: usize) -> BiPoly {
    (0..e).fold(BiPoly::constant(b.vars(), Rational::one()), |acc, _| {
        &acc * b
    })
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &[BiPoly], b: &[BiPoly]) -> Vec<BiPoly> {
    let db = deg(b);
    let lb = lc(b).clone();
    let mut r = a.to_vec();
    let mut steps = 0;
    let delta = deg(a) - db;
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        r = r.iter().map(|c| c * &lb).collect();
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = &r[k + j] - &(&lr * bj);
        }
        r = trim(r);
        steps += 1;
    }
    let factor = pow(&lb, delta + 1 - steps);
    trim(r.iter().map(|c| c * &factor).collect())
}

fn subresultant(mut a: Vec<BiPoly>, mut b: Vec<BiPoly>, ring: (Var, Var)) -> BiPoly {
    let one = BiPoly::constant(ring, Rational::one());
    let mut sign_negative = false;
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign_negative = true;
        }
    }
    if deg(&b) == 0 {
        let r = pow(lc(&b), deg(&a));
        return if sign_negative { -&r } else { r };
    }
    let mut g = one.clone();
    let mut h = one;
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign_negative = !sign_negative;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return BiPoly::zero(ring);
        }
        a = b;
        let divisor = &g * &pow(&h, delta);
        b = r
            .iter()
            .map(|c| {
                c.div_exact(&divisor)
                    .expect("subresultant division is exact")
            })
            .collect();
        g = lc(&a).clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            pow(&g, delta)
                .div_exact(&pow(&h, delta - 1))
                .expect("subresultant division is exact")
        };
        if deg(&b) == 0 {
            let da = deg(&a);
            let r = if da == 0 {
                one_of(ring)
            } else {
                pow(lc(&b), da)
                    .div_exact(&pow(&h, da - 1))
                    .expect("subresultant division is exact")
            };
            return if sign_negative { -&r } else { r };
        }
    }
}

fn one_of(ring: (Var, Var)) -> BiPoly {
    BiPoly::constant(ring, Rational::one())
}
