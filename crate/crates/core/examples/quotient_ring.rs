//! Arithmetic in Q(t)[A]/(P) for P = A^2 + 4t - 1, whose root is sqrt(1-4t),
//! cross-checked against the power series.

use algdiag::burmann::AlgebraicEquation;
use algdiag::exactpoly::{RatFunc, UniPoly, Var};
use algdiag::holonomic::{self, QuotientRing};
use algdiag::{BiPoly, TruncSeries};

fn main() -> algdiag::Result<()> {
    let p = BiPoly::from_int_terms((Var::T, Var::A), &[(0, 2, 1), (1, 0, 4), (0, 0, -1)]);
    let ring = QuotientRing::new(AlgebraicEquation::new(p)?)?;
    let a = ring.generator();

    println!("A*A     = {}", a.mul(&a)?);
    println!("1/A     = {}", a.inverse()?);
    println!("dA/dt   = {}", a.derivative()?);
    let (ode, chain) = holonomic::derive_ode_in(&ring)?;
    println!("ODE     : {ode}");
    println!(
        "chain   : {}",
        chain
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    // sqrt(1-4t) = 1 - 2t - 2t^2 - 4t^3 - ...
    let n = 12;
    let one_minus_4t = TruncSeries::from_poly(&UniPoly::from_ints(Var::T, &[1, -4]), n);
    let root = sqrt_series(&one_minus_4t);
    let d = a.derivative()?;
    let value = root.derivative().unwrap();
    let residual = d.residual_against(&value, &root.truncate(n - 1));
    println!("A' identity on the series: {}", residual.is_zero());
    println!(
        "1/(1-4t) as element: {}",
        ring.constant(RatFunc::from_poly(UniPoly::from_ints(Var::T, &[1, -4])).recip()?)
    );
    Ok(())
}

fn sqrt_series(s: &TruncSeries) -> TruncSeries {
    // Newton iteration r <- (r + s/r) / 2 doubles the precision each pass.
    let half = algdiag::Rational::new(1.into(), 2.into());
    let mut r = TruncSeries::one(s.order());
    for _ in 0..6 {
        r = (&r + &(s * &r.inverse().unwrap())).scale(&half);
    }
    r
}
