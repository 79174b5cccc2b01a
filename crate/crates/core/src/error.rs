use thiserror::Error;

/// Errors produced by the library.
///
/// The variants are grouped so the CLI can map them onto exit codes:
/// input and precondition problems, resource guards, and internal
/// contradictions that would falsify a proven lemma.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("not a simplex: {0}")]
    NotASimplex(String),

    #[error("input is not a flag complex: {0}")]
    NotFlag(String),

    #[error("input is not a flag 2-sphere: {0}")]
    NotSphere(String),

    #[error("complex is not pure: {0}")]
    NonPure(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: i64, found: i64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not convex: {0}")]
    NotConvex(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("lemma violation: {0}")]
    LemmaViolation(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for the internal-contradiction class of failures.
    pub fn is_lemma_violation(&self) -> bool {
        matches!(self, Error::LemmaViolation(_))
    }
}
