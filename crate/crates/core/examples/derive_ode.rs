//! Derives the minimal linear ODE satisfied by an algebraic function from its
//! equation by linear algebra over Q(t), then checks it on the series.
//!
//!     cargo run --release --example derive_ode

use std::time::Instant;

use algdiag::{a348410, burmann, holonomic, series};

fn main() -> algdiag::Result<()> {
    let f = a348410::generating_f();
    let eq = burmann::eliminate(&burmann::parametric_system(&f)?)?;

    let start = Instant::now();
    let op = holonomic::derive_ode(&eq)?;
    println!(
        "order {} operator found in {:.2?}",
        op.order(),
        start.elapsed()
    );
    for (i, p) in op.coeffs().iter().enumerate() {
        println!("  p{i}(t) = {p}");
    }

    let a = series::diagonal_series(&f, 40)?;
    let applied = op.apply(&a).expect("series longer than the operator order");
    println!(
        "L(A) = 0 mod t^{}: {}",
        applied.order() + 1,
        applied.is_zero()
    );
    println!("recurrence order bound: {}", op.recurrence_order_bound());
    Ok(())
}
