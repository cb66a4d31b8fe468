//! Substitutes the truncated generating function into P(t, A) and into the
//! parametric closed form, then shows a single corrupted term being caught.

use std::sync::Arc;

use algdiag::burmann;
use algdiag::{a348410, Rational};

fn main() -> algdiag::Result<()> {
    let order = 30;
    let f = a348410::generating_f();
    let sys = burmann::parametric_system(&f)?;
    let eq = burmann::eliminate(&sys)?;
    let oracle = Arc::new(a348410::binomial_oracle());

    let alg = burmann::verify_algebraic(&eq, &oracle, order);
    println!(
        "P(t, A_{order}) = 0 mod t^{}: {}",
        order + 1,
        verdict(alg.passed())
    );

    let (num, den) = (sys.numerator(), sys.denominator());
    println!("A = ({num}) / ({den}) at y = y(t)");
    let (param, a) = burmann::parametric_series_check(&f, &num, &den, &oracle, order)?;
    println!(
        "parametric form through t^{order}: {}",
        verdict(param.passed())
    );
    println!("A(t) = {}", a.truncate(8));

    let bad = oracle.perturbed(5, Rational::from_integer(377.into()));
    let report = burmann::verify_algebraic(&eq, &bad, 10);
    let (k, residual) = report.first_failure.expect("perturbation must be detected");
    println!("with a(5) = 377: first nonzero coefficient at t^{k} ({residual})");
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}
