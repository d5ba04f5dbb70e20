//! Library error types.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("carrier size {0} out of supported range 1..={max}", max = crate::subset::MAX_CARRIER)]
    CarrierSize(usize),
    #[error("zero and one coincide; use FiniteMultiring::trivial for the one-element ring")]
    ZeroEqualsOne,
    #[error("table cell ({0},{1}) is empty")]
    EmptyCell(usize, usize),
    #[error("multiplication is declared strict but cell ({0},{1}) is not a singleton")]
    NonStrictCell(usize, usize),
    #[error("element index {0} out of carrier 0..{1}")]
    BadElement(usize, usize),
    #[error("expected {expected} display names, got {got}")]
    BadNameCount { expected: usize, got: usize },
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("modulus {0} must be at least 2")]
    BadModulus(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("unknown operation symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol `{symbol}` expects {expected} arguments, got {got}")]
    ArityMismatch { symbol: String, expected: usize, got: usize },
    #[error("variable x{0} is unbound")]
    UnboundVariable(u32),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuotientError {
    #[error("the identity must belong to the selected subset")]
    MissingIdentity,
    #[error("the selected subset is not closed under inverses (witness element {0})")]
    NotInverseClosed(usize),
    #[error("inversion does not descend to the quotient (classes of {0} and {1} collide)")]
    InverseNotWellDefined(usize, usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DivisionError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("element {0} has no multiplicative inverse; the coefficient structure is not a field")]
    NoInverse(usize),
    #[error("coefficient multiplication must be strict for Euclidean division")]
    NonStrictMul,
    #[error("no quotient/remainder witness within the degree bounds (deg q <= {qmax}, deg r < {rbound})")]
    NoWitness { qmax: usize, rbound: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EliminationError {
    #[error("disjunctive normal form exceeded the clause cap of {0}")]
    ClauseCapExceeded(usize),
    #[error("variable index {0} exceeds the supported maximum {max}", max = crate::term::MAX_VARS - 1)]
    VariableRange(u32),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntervalError {
    #[error("interval sets must be nonempty")]
    Empty,
    #[error("interval endpoints must satisfy lo <= hi")]
    Inverted,
    #[error("interval endpoints must be nonnegative")]
    Negative,
}
