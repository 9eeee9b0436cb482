use thiserror::Error;

/// Errors raised by the library. The CLI maps `InvalidInput` to exit code 2
/// and every other variant to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("index out of range: {what} = {value}, expected {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("continued fraction depth {depth} is too shallow for order {order}")]
    InsufficientDepth { depth: usize, order: usize },

    #[error("denominator constant term must be 1, got {0}")]
    NonUnitDenominator(String),

    #[error("no closed form for pattern set {0}; use brute force or the recurrence")]
    UnsupportedPatternSet(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        Err(Error::OutOfRange {
            what,
            value: value as i64,
            lo: lo as i64,
            hi: hi as i64,
        })
    } else {
        Ok(())
    }
}
