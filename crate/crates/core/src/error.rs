use crate::exactpoly::Var;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero polynomial has no resultant")]
    ResultantOfZero,
    #[error("both polynomials have degree 0 in {0}")]
    ConstantInVariable(Var),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("variable {var} does not occur in polynomial over ({first}, {second})")]
    UnknownVariable { var: Var, first: Var, second: Var },
    #[error("variable mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: Var, found: Var },
    #[error("unknown variable tag {0:?}")]
    UnknownTag(String),
    #[error("gcd of two zero polynomials")]
    GcdOfZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series not invertible")]
    SeriesNotInvertible,
    #[error("pole at origin")]
    PoleAtOrigin,
    #[error("reversion requires f(0) ≠ 0")]
    ReversionNeedsNonzeroConstant,
    #[error("degenerate system")]
    DegenerateSystem,
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("zero operator")]
    ZeroOperator,
    #[error("elements belong to different quotient rings")]
    ModulusMismatch,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}
