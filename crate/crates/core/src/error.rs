use thiserror::Error;

/// Errors raised by the ideal arithmetic, the homological engines and the
/// synthesizer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("rings share some but not all variables: {0}")]
    SharedVariables(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("exponent overflow (limit {limit})")]
    Overflow { limit: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("resource budget exceeded: {resource} needs {requested}, limit {limit}")]
    Budget {
        resource: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("budget exceeded at power n = {n}: {source}")]
    AtPower { n: u32, source: Box<Error> },

    #[error("hypothesis check failed: {0}")]
    Hypothesis(String),

    #[error("verification mismatch at n = {n}: expected depth {expected}, computed {computed}")]
    VerificationMismatch {
        n: u32,
        expected: u32,
        computed: u32,
    },

    #[error("certificate replay mismatch: {0}")]
    ReplayMismatch(String),

    #[error("internal invariant breached: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::VerificationMismatch { .. }
            | Error::ReplayMismatch(_)
            | Error::Hypothesis(_) => 1,
            Error::Parse { .. } => 2,
            Error::Budget { .. } => 3,
            Error::AtPower { source, .. } => source.exit_code(),
            Error::Invariant(_) => 4,
            _ => 2,
        }
    }

    pub(crate) fn at_power(self, n: u32) -> Error {
        match self {
            e @ Error::AtPower { .. } => e,
            e => Error::AtPower {
                n,
                source: Box::new(e),
            },
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
