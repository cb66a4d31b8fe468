use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::burmann::AlgebraicEquation;
use crate::exactpoly::field;
use crate::exactpoly::{RatFunc, UniPoly, Var};
use crate::series::TruncSeries;
use crate::{Error, Result};

/// Q(t)[A] / (P) for a squarefree `P(t, A)` of positive degree in `A`.
pub struct QuotientRing {
    equation: AlgebraicEquation,
    /// `P` made monic in `A`.
    modulus: Vec<RatFunc>,
    a_prime: OnceLock<Result<Vec<RatFunc>>>,
}

impl QuotientRing {
    pub fn new(equation: AlgebraicEquation) -> Result<Arc<Self>> {
        if equation.deg_a() == 0 {
            return Err(Error::Invalid("modulus has degree 0 in A".into()));
        }
        if !equation.is_squarefree() {
            return Err(Error::Invalid("modulus is not squarefree in A".into()));
        }
        let cs = equation
            .poly()
            .rational_coeffs_in(Var::A)
            .expect("equation is over (t, A)");
        Ok(Arc::new(QuotientRing {
            modulus: field::monic(&cs),
            equation,
            a_prime: OnceLock::new(),
        }))
    }

    pub fn equation(&self) -> &AlgebraicEquation {
        &self.equation
    }

    /// `d = deg_A P`, the dimension over Q(t).
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, poly: &[RatFunc]) -> Vec<RatFunc> {
        let (_, mut r) = field::divrem(poly, &self.modulus);
        r.resize(self.degree(), RatFunc::zero_in(Var::T));
        r
    }

    /// Class of `sum coeffs[j] A^j`.
    pub fn element(self: &Arc<Self>, coeffs: &[RatFunc]) -> AlgebraicElement {
        let coeffs: Vec<RatFunc> = coeffs.iter().map(|c| c.clone().with_var(Var::T)).collect();
        AlgebraicElement {
            coords: self.reduce(&field::trim(coeffs)),
            ring: Arc::clone(self),
        }
    }

    pub fn constant(self: &Arc<Self>, c: RatFunc) -> AlgebraicElement {
        self.element(&[c])
    }

    pub fn one(self: &Arc<Self>) -> AlgebraicElement {
        self.constant(RatFunc::one_in(Var::T))
    }

    /// The class of `A` itself.
    pub fn generator(self: &Arc<Self>) -> AlgebraicElement {
        self.element(&[RatFunc::zero_in(Var::T), RatFunc::one_in(Var::T)])
    }

    /// `dA/dt = -P_t / P_A`, computed once per ring.
    pub fn a_derivative(self: &Arc<Self>) -> Result<AlgebraicElement> {
        let coords = self
            .a_prime
            .get_or_init(|| {
                let p = self.equation.poly();
                let pt = self.element(&p.differentiate(Var::T)?.rational_coeffs_in(Var::A)?);
                let pa = self.element(&p.differentiate(Var::A)?.rational_coeffs_in(Var::A)?);
                Ok(pt.neg().mul(&pa.inverse()?)?.coords)
            })
            .clone()?;
        Ok(AlgebraicElement {
            coords,
            ring: Arc::clone(self),
        })
    }
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(t)[A]/({})", self.equation)
    }
}

/// `sum coords[j] A^j` in Q(t)[A]/(P), `j < d`.
#[derive(Clone)]
pub struct AlgebraicElement {
    coords: Vec<RatFunc>,
    ring: Arc<QuotientRing>,
}

impl AlgebraicElement {
    pub fn coords(&self) -> &[RatFunc] {
        &self.coords
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RatFunc::is_zero)
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.equation == other.ring.equation {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    fn lift(&self) -> Vec<RatFunc> {
        field::trim(self.coords.clone())
    }

    fn with_coords(&self, coords: Vec<RatFunc>) -> Self {
        AlgebraicElement {
            coords: self.ring.reduce(&field::trim(coords)),
            ring: Arc::clone(&self.ring),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with_coords(field::add(&self.coords, &other.coords)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with_coords(field::sub(&self.coords, &other.coords)))
    }

    pub fn neg(&self) -> Self {
        self.with_coords(field::neg(&self.coords))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let c = c.clone().with_var(Var::T);
        self.with_coords(field::scale(&self.coords, &c))
    }

    /// Product reduced modulo `P`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.with_coords(field::mul(&self.lift(), &other.lift())))
    }

    /// Inverse by the extended Euclidean algorithm in Q(t)[A].
    pub fn inverse(&self) -> Result<Self> {
        let u = self.lift();
        if u.is_empty() {
            return Err(Error::ZeroDivisor);
        }
        let (g, s, _) = field::ext_gcd(&u, &self.ring.modulus);
        if g.len() != 1 {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.with_coords(s))
    }

    /// `du/dA`, the formal derivative in `A` of the coordinate polynomial.
    pub fn partial_a(&self) -> Self {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c.scale_int(j as i64))
            .collect();
        self.with_coords(coords)
    }

    /// `d/dt` along `P(t, A(t)) = 0`: coordinate-wise derivative plus
    /// `(du/dA) * A'`.
    pub fn derivative(&self) -> Result<Self> {
        let direct = self.with_coords(self.coords.iter().map(RatFunc::derivative).collect());
        let chain = self.partial_a().mul(&self.ring.a_derivative()?)?;
        direct.add(&chain)
    }

    /// Evaluates `L(t) * (value - u(t, a))` where `L` clears the coordinate
    /// denominators, so poles of the coordinates at `t = 0` are harmless. The
    /// element equals the series `value` along the branch `a` iff this
    /// vanishes.
    pub fn residual_against(&self, value: &TruncSeries, a: &TruncSeries) -> TruncSeries {
        let n = value.order().min(a.order());
        let mut l = UniPoly::one(Var::T);
        for c in &self.coords {
            let d = c.den().clone().with_var(Var::T);
            let g = l.gcd(&d).expect("nonzero");
            l = (&l * &d).divrem(&g).expect("nonzero").0;
        }
        let mut acc = TruncSeries::zero(n);
        for c in self.coords.iter().rev() {
            let scaled = (&c.num().clone().with_var(Var::T) * &l)
                .divrem(&c.den().clone().with_var(Var::T))
                .expect("nonzero")
                .0;
            acc = &(&acc * a) + &TruncSeries::from_poly(&scaled, n);
        }
        &(&TruncSeries::from_poly(&l, n) * value) - &acc
    }
}

impl PartialEq for AlgebraicElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other).is_ok() && self.coords == other.coords
    }
}

impl fmt::Debug for AlgebraicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]*A")?,
                _ => write!(f, "[{c}]*A^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl RatFunc {
    pub(crate) fn scale_int(&self, k: i64) -> RatFunc {
        self * &RatFunc::constant(self.var(), crate::exactpoly::rat(k))
    }
}
