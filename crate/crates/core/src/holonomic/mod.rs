//! Algebraic-to-holonomic machinery.
//!
//! An algebraic `A(t)` with minimal polynomial `P(t, A)` of degree `d` in `A`
//! lives in the field Q(t)[A]/(P), a `d`-dimensional Q(t)-vector space. All
//! derivatives `A, A', A'', ...` are elements of it ([`AlgebraicElement`]),
//! so `d + 1` of them are linearly dependent; the first dependence is a linear
//! ODE ([`DiffOperator`]), and extracting coefficients of `t^n` from it gives
//! a P-recursive recurrence ([`ShiftOperator`]).

mod ode;
mod quotient;
mod recurrence;

pub use ode::{derive_ode, derive_ode_in, DiffOperator, DiffOperatorJson};
pub use quotient::{AlgebraicElement, QuotientRing};
pub use recurrence::{
    check_recurrence, check_recurrence_par, ode_to_recurrence, Convention, RecurrenceReport,
    ShiftOperator, ShiftOperatorJson,
};
