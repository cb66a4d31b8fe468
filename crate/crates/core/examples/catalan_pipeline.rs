//! The whole pipeline on f(x) = 1/(1-x), where [x^n] f^n = C(2n-1, n):
//! quadratic equation, first-order ODE, first-order recurrence.

use algdiag::cli::parse_ratfunc;
use algdiag::oracle::SequenceOracle;
use algdiag::{a348410, burmann, holonomic, Rational};
use num_bigint::BigInt;

fn main() -> algdiag::Result<()> {
    let f = parse_ratfunc("1/(1-x)")?;
    let sys = burmann::parametric_system(&f)?;
    println!("P1 = {}\nP2 = {}", sys.p1, sys.p2);

    let eq = burmann::eliminate(&sys)?;
    println!("P(t, A) = {eq}");
    let op = holonomic::derive_ode(&eq)?;
    println!("ODE: {op}");
    let rec = holonomic::ode_to_recurrence(&op)?;
    println!("recurrence: {rec}");

    let closed = SequenceOracle::new("C(2n-1, n)", |n| {
        Rational::from_integer(a348410::binomial(&BigInt::from(2 * n as i64 - 1), n as u64))
    });
    let from = rec.offset().max(rec.order());
    let report = holonomic::check_recurrence(&rec, &closed, from, 50)?;
    println!(
        "holds against C(2n-1, n) for n = {from}..=50: {}",
        report.passed()
    );
    println!(
        "algebraic check through t^50: {}",
        burmann::verify_algebraic(&eq, &closed, 50).passed()
    );
    Ok(())
}
