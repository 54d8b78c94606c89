use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("size cap exceeded: {what} = {value} > {cap} (pass an override to lift the cap)")]
    SizeCap { what: &'static str, value: usize, cap: usize },

    #[error("cache line {line}: {message}")]
    Cache { line: usize, message: String },

    #[error("root isolation failed: {0}")]
    RootIsolation(String),

    #[error("degenerate distribution: variance is zero")]
    DegenerateVariance,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
