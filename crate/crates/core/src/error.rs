use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AdelicError {
    #[error("pole: {0}")]
    Pole(String),
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("character is not primitive: {0}")]
    NotPrimitive(String),
    #[error("unsupported field/character combination: {0}")]
    UnsupportedField(String),
    #[error("invalid field spec: {0}")]
    InvalidFieldSpec(String),
    #[error("no analytic oracle for {0}")]
    OracleUnavailable(String),
    #[error("local ranks differ: {0}")]
    RankMismatch(String),
    #[error("invalid truncation schedule: {0}")]
    InvalidSchedule(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl AdelicError {
    /// Stable diagnostic name, printed by the CLI on failure.
    pub fn name(&self) -> &'static str {
        match self {
            AdelicError::Pole(_) => "PoleError",
            AdelicError::Domain(_) => "DomainError",
            AdelicError::NotPrimitive(_) => "NotPrimitiveError",
            AdelicError::UnsupportedField(_) => "UnsupportedFieldError",
            AdelicError::InvalidFieldSpec(_) => "InvalidFieldSpec",
            AdelicError::OracleUnavailable(_) => "OracleUnavailable",
            AdelicError::RankMismatch(_) => "RankMismatchError",
            AdelicError::InvalidSchedule(_) => "InvalidSchedule",
            AdelicError::Parse(_) => "ParseError",
        }
    }

    /// True for errors caused by malformed input text rather than mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(self, AdelicError::Parse(_) | AdelicError::InvalidFieldSpec(_) | AdelicError::InvalidSchedule(_))
    }
}

pub type Result<T> = std::result::Result<T, AdelicError>;
