use thiserror::Error;

/// Errors raised by the calendar, codec, tally and series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} {value} out of range [{min}, {max}]")]
    Range {
        what: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("{total} tokens do not split evenly into {bodies} bodies: {remainder} left over")]
    NotDivisible {
        total: u64,
        bodies: u64,
        remainder: u64,
    },

    #[error("month {index} has {length} days; expected 29 or 30")]
    InvalidMonth { index: usize, length: u32 },

    #[error("pile {0} is empty")]
    EmptyPile(String),

    #[error("unknown pile {0}")]
    UnknownPile(usize),

    #[error("name table line {line}: {message}")]
    NameTable { line: usize, message: String },

    #[error("unknown name {name:?} for component {component}")]
    UnknownName { component: &'static str, name: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn range(what: &'static str, value: u64, min: u64, max: u64) -> Self {
        Error::Range {
            what,
            value,
            min,
            max,
        }
    }
}
