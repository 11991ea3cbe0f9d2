//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum CoreError {
    #[error("constant polynomial is not allowed here")]
    ConstantInput,
    #[error("polynomial is not in normal form: {0}")]
    NotNormalForm(String),
    #[error("zero polynomial is not allowed here")]
    ZeroInput,
    #[error("resultant needs positive degree in {0} for at least one argument")]
    ResultantDegenerate(String),
    #[error("divisor must satisfy 0 < deg h = deg_y h")]
    FiberHypothesis,
    #[error("lambda = {0} is not a critical value at infinity")]
    NotCriticalValue(String),
    #[error("internal identity check failed: {0}")]
    InternalCheck(String),
    #[error("series truncation budget exhausted: {0}")]
    TruncationBudget(String),
    #[error("elimination degenerated: {0}")]
    EliminationDegenerate(String),
    #[error("curve has {got} components but the polynomial has {want} variables")]
    DimensionMismatch { want: usize, got: usize },
    #[error("witness curve is not valid for this fiber")]
    InvalidWitness,
    #[error("unsupported input: {0}")]
    Unsupported(String),
}
