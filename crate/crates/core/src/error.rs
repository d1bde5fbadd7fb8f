use thiserror::Error;

/// Errors shared across the workbench.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("bad permutation {perm:?} for arity {arity}")]
    BadPermutation { perm: Vec<usize>, arity: usize },
    #[error("index {index:?} out of range for space of dimension {dim}")]
    IndexOutOfRange { index: Vec<usize>, dim: usize },
    #[error("space must have positive dimension")]
    EmptySpace,
    #[error("basis labels must be distinct and match the dimension")]
    BadLabels,
    #[error("unit law fails at basis index {0}")]
    UnitLaw(usize),
    #[error("missing unit element")]
    MissingUnit,
    #[error("not quasitriangular: the Yang-Baxter residual is nonzero")]
    NotQuasitriangular,
    #[error("bimodule axioms fail; cannot proceed")]
    BadBimodule,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("enumeration budget exceeded: {candidates} candidates > budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("the basis split does not decompose this algebra: {0}")]
    NotSplit(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("wrong orientation: expected {expected}, got {got}")]
    WrongOrientation { expected: &'static str, got: &'static str },
}
