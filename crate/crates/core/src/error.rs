use crate::exactnum::ExactError;

/// Failures of the analytic engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A label or key violates one of its structural invariants.
    #[error("malformed key: {0}")]
    MalformedKey(String),
    /// The requested coupling channel does not occur for this source irrep.
    #[error("channel absent: {0}")]
    ChannelAbsent(String),
    /// A tabulated closed form produced a negative radicand or a zero
    /// denominator after the selection-rule guard passed.
    #[error("formula domain error: {0}")]
    FormulaDomain(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub type Result<T> = std::result::Result<T, Error>;
