use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclotomic order must be at least 3, got {0}")]
    InvalidOrder(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid algebra specification: {0}")]
    InvalidSpec(String),
    #[error("rewriting did not terminate: {0}")]
    NonTerminating(String),
    #[error("product is not associative: {0}")]
    NonAssociative(String),
    #[error("relation `{relation}` fails: {detail}")]
    RelationFailure { relation: String, detail: String },
    #[error("module outside the projective class subcategory: {0}")]
    OutsideSubcategory(String),
    #[error("simple module search failed: {0}")]
    Calibration(String),
    #[error("fusion mismatch at {a} ⊗ {b}: closed form {closed}, computed {computed}")]
    FusionMismatch { a: String, b: String, closed: String, computed: String },
    #[error("no fusion rule covers {0}")]
    UncoveredCase(String),
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("{0}")]
    Check(String),
    /// Bad command-line usage: unknown target, missing or conflicting options.
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
