//! Coefficients [x^n] f(x)^n computed three ways: direct powering, the
//! Lagrange form of the diagonal series, and the single-index binomial sum.
//!
//!     cargo run --example diagonal_values -- 20

use algdiag::a348410;
use algdiag::series;

fn main() -> algdiag::Result<()> {
    let n_to: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(15);
    let f = a348410::generating_f();
    let lagrange = series::diagonal_series(&f, n_to)?;

    println!("{:>3}  {:>24}  {:>24}", "n", "[x^n] f^n", "binomial sum");
    for n in 0..=n_to {
        let direct = series::diagonal_coeff(&f, n)?;
        let binomial = a348410::a_binomial(n as u64);
        assert_eq!(&direct, lagrange.coeff(n));
        assert_eq!(direct, binomial.clone().into());
        println!("{n:>3}  {:>24}  {binomial:>24}", direct.to_string());
    }
    Ok(())
}
