use thiserror::Error;

/// Errors shared by every layer of the crate.
///
/// Variant names are stable: the CLI propagates them verbatim, so they double
/// as the machine-readable error vocabulary of reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("UndefinedGcd")]
    UndefinedGcd,
    #[error("ZeroModulus")]
    ZeroModulus,
    #[error("NotDivisible")]
    NotDivisible,
    #[error("ZeroMultiplier")]
    ZeroMultiplier,
    #[error("NotAProjection")]
    NotAProjection,
    #[error("NotDivisorClosed: {0}")]
    NotDivisorClosed(String),
    #[error("IsIdentity")]
    IsIdentity,
    #[error("FieldDegenerate")]
    FieldDegenerate,
    #[error("NoWitnessAtDepth: {0}")]
    NoWitnessAtDepth(String),
    #[error("NotInDomain")]
    NotInDomain,
    #[error("InsufficientPrecision")]
    InsufficientPrecision,
    #[error("EmptyTarget")]
    EmptyTarget,
    /// Text could not be parsed; `pos` is a byte offset into the input.
    #[error("ParseError at byte {pos}: {msg} in {input:?}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },
}

impl Error {
    pub fn parse(input: &str, pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_owned(),
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
