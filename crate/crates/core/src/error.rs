use thiserror::Error;

/// Errors raised by the evaluation routines.
///
/// Variant names double as the error names the CLI reports on stderr.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NonzeroInnerConstant: inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("OrderExceeded: coefficient {index} requested from a series of order {order}")]
    OrderExceeded { index: usize, order: usize },
    #[error("NonTerminating: {0}")]
    NonTerminating(String),
    #[error("NonTerminatingExact: {0}")]
    NonTerminatingExact(String),
    #[error("LowerParamPole: lower parameter {param} vanishes at term {index}")]
    LowerParamPole { param: String, index: usize },
    #[error("NoConvergence: {0}")]
    NoConvergence(String),
    #[error("DomainError: {0}")]
    Domain(String),
    #[error("NonRationalPower: {0}")]
    NonRationalPower(String),
    #[error("UnsupportedM: closed forms exist only for m in {{1,2,3}}, got {0}")]
    UnsupportedM(usize),
    #[error("EndpointSingularity: {0}")]
    EndpointSingularity(String),
    #[error("PoleOnPath: {0}")]
    PoleOnPath(String),
    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonzeroInnerConstant => "NonzeroInnerConstant",
            Error::OrderExceeded { .. } => "OrderExceeded",
            Error::NonTerminating(_) => "NonTerminating",
            Error::NonTerminatingExact(_) => "NonTerminatingExact",
            Error::LowerParamPole { .. } => "LowerParamPole",
            Error::NoConvergence(_) => "NoConvergence",
            Error::Domain(_) => "DomainError",
            Error::NonRationalPower(_) => "NonRationalPower",
            Error::UnsupportedM(_) => "UnsupportedM",
            Error::EndpointSingularity(_) => "EndpointSingularity",
            Error::PoleOnPath(_) => "PoleOnPath",
            Error::Parse(_) => "ParseError",
        }
    }

    /// Coarse classification used for process exit codes.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NoConvergence(_) => ErrorKind::NonConvergence,
            Error::Parse(_) => ErrorKind::Parse,
            _ => ErrorKind::Domain,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Domain,
    NonConvergence,
    Parse,
}

pub type Result<T> = std::result::Result<T, Error>;
