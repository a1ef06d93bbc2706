use crate::exactcore::ArithError;

/// Errors raised by series, generator, determinant and oracle code.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("coefficient ({i}, {j}) lies outside the retained orders {orders:?}")]
    Truncation { i: usize, j: usize, orders: (usize, usize) },
    #[error("{what} needs order {needed} but only {have} is available")]
    InsufficientOrder { what: &'static str, needed: usize, have: usize },
    #[error("denominator is not invertible at the origin")]
    DenominatorVanishes,
    #[error("substitution map does not fix the origin")]
    NonzeroConstant,
    #[error("square root needs constant term 1")]
    SqrtConstantTerm,
    #[error("exponent {exponent} of variable {var} leaves the window {window:?}")]
    WindowOverflow { var: usize, exponent: i64, window: (i64, i64) },
    #[error("negative power of the formal variable at u^{row} in column v^{column}")]
    NegativePowerLeak { column: usize, row: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported truncation k={k} for {model} at n={n}")]
    UnsupportedTruncation { model: &'static str, n: usize, k: usize },
    #[error("{model} oracle supports n ≤ {max}, got n={n}")]
    OracleBound { model: &'static str, n: usize, max: usize },
    #[error("boundary specification rejected: {0}")]
    Boundary(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
