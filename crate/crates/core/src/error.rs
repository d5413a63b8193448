use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rational with zero denominator")]
    ZeroDenominator,

    #[error("division by zero in {context}")]
    DivisionByZero { context: String },

    #[error("pole at index {index} in {context}")]
    Pole { context: String, index: i64 },

    #[error("negative index {value} in {context}")]
    NegativeIndex { context: String, value: i64 },

    #[error("series does not terminate: {context}")]
    NotTerminating { context: String },

    #[error("domain violation: requires {constraint}")]
    Domain { constraint: String },

    #[error("no such record or family: {id}")]
    NotFound { id: String },

    #[error("cannot parse rational from {input:?}")]
    Parse { input: String },

    #[error("reflection property fails at n = {n}, k = {k}")]
    Reflection { n: u32, k: u32 },

    #[error("invalid weight: {reason}")]
    InvalidWeight { reason: String },

    #[error("probe points must be strictly increasing and at least 1")]
    ProbePoints,
}

impl Error {
    /// Prefix the location of a division or pole with the expression it came from.
    pub fn within(self, outer: &str) -> Self {
        match self {
            Error::DivisionByZero { context } => Error::DivisionByZero {
                context: join(outer, &context),
            },
            Error::Pole { context, index } => Error::Pole {
                context: join(outer, &context),
                index,
            },
            other => other,
        }
    }
}

fn join(outer: &str, inner: &str) -> String {
    if inner.is_empty() {
        String::from(outer)
    } else {
        alloc::format!("{outer}: {inner}")
    }
}
