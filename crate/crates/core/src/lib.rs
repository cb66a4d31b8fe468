//! Exact algebraic and holonomic equations for diagonal generating functions.
//!
//! For a rational power series `f(x)` with `f(0) != 0`, the sequence
//! `a(n) = [x^n] f(x)^n` has an algebraic generating function
//! `A(t) = sum a(n) t^n`. This crate computes, entirely in exact rational
//! arithmetic:
//!
//! * the parametric system tying `A` to the compositional inverse `y(t)` of
//!   `y = t f(y)` ([`burmann::parametric_system`]),
//! * the algebraic equation `P(t, A) = 0` obtained by resultant elimination
//!   ([`burmann::eliminate`]),
//! * an annihilating linear ODE obtained by quotient-ring reduction modulo `P`
//!   ([`holonomic::derive_ode`]) and the P-recursive recurrence it induces
//!   ([`holonomic::ode_to_recurrence`]),
//! * exact checkers for algebraic equations and recurrences against sequence
//!   oracles ([`burmann::verify_algebraic`], [`holonomic::check_recurrence`]).
//!
//! The [`a348410`] module wires these together for OEIS A348410, where
//! `f(x) = 1/((1-x)(1-x^2))`.

pub mod a348410;
pub mod burmann;
pub mod cli;
mod error;
pub mod exactpoly;
pub mod holonomic;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
pub use exactpoly::{BiPoly, RatFunc, Rational, UniPoly, Var};
pub use oracle::SequenceOracle;
pub use series::TruncSeries;
