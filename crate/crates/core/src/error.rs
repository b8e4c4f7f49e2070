use crate::coeff::CoeffError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("zero element has no leading term")]
    ZeroElement,
    #[error("order is not admissible: {0}")]
    BadOrder(String),
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("grading is not positive")]
    NonPositiveGrading,
    #[error("specialization failed after {} draws (seeds {seeds:?})", seeds.len())]
    SpecializationExhausted { seeds: Vec<u64> },
    #[error("module is not holonomic at the graded level (dimension {dim}, expected {expected})")]
    NotHolonomic { dim: usize, expected: usize },
    #[error("bifiltration is not nice")]
    NotNice,
    #[error("invalid matrix: {0}")]
    BadMatrix(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("{msg} at line {line}, column {col}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
