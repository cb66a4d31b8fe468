//! Checks the bundled order-2 recurrence against the binomial-sum oracle,
//! serially and on all cores, and confirms the leading coefficient never
//! vanishes on the range.
//!
//!     cargo run --release --example kotesovec_check -- 1000

use std::time::Instant;

use algdiag::a348410;
use algdiag::holonomic::{check_recurrence, check_recurrence_par, ShiftOperator};

const BUNDLED: &str = include_str!("../data/kotesovec.json");

fn main() -> algdiag::Result<()> {
    let to: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(300);
    let rec = ShiftOperator::from_json_str(BUNDLED)?;
    assert_eq!(rec, a348410::kotesovec_operator());
    println!("{rec}");

    let oracle = a348410::binomial_oracle();
    let start = Instant::now();
    let serial = check_recurrence(&rec, &oracle, 3, to)?;
    println!(
        "serial   3..={to}: passed = {} ({:.2?})",
        serial.passed(),
        start.elapsed()
    );

    let start = Instant::now();
    let parallel = check_recurrence_par(&rec, &oracle, 3, to)?;
    println!(
        "parallel 3..={to}: passed = {} ({:.2?})",
        parallel.passed(),
        start.elapsed()
    );
    assert_eq!(serial, parallel);
    println!("leading coefficient vanishes at: {:?}", serial.degenerate);
    Ok(())
}
