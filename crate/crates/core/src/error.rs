use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Rings must have a nonzero identity, so the zero ring is never built.
    #[error("the zero ring is not allowed (size {0})")]
    ZeroRing(u64),

    #[error("ring of size {size} exceeds the size limit {limit}")]
    TooLarge { size: u64, limit: usize },

    #[error("ideal is not proper: {0}")]
    NotProper(String),

    #[error("ideal is not prime: {0}")]
    NotPrime(String),

    #[error("operands belong to different rings: `{0}` and `{1}`")]
    RingMismatch(String, String),

    #[error("module order {order} is incompatible with ring `{ring}`: {reason}")]
    ModuleOrder {
        order: u64,
        ring: String,
        reason: String,
    },

    #[error("homogeneous ideal condition IE \u{2286} V fails for I = {0}")]
    NotHomogeneous(String),

    #[error("element literal `{literal}` is not an element of `{ring}`: {reason}")]
    BadElement {
        literal: String,
        ring: String,
        reason: String,
    },

    #[error("set is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ring `{ring}` is not a {expected}")]
    WrongConstruction { ring: String, expected: &'static str },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Semantic(String),

    #[error("implication violated: {premise} holds but {conclusion} does not")]
    DiagramViolation {
        premise: &'static str,
        conclusion: &'static str,
    },
}

impl Error {
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Syntax { .. })
    }
}
