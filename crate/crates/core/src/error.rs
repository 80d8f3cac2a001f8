use thiserror::Error;

/// Errors produced by the group library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("point {point} is outside the domain of degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    /// A computation would exceed one of the configured budgets. Callers that
    /// produce reports turn this into a skipped record.
    #[error("{what} budget exceeded: needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    /// The input violates a mathematical precondition (e.g. a non-normal
    /// kernel, or a p-power subgroup requested for a non-p-group).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

pub(crate) fn check_budget(what: &'static str, needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded {
            what,
            needed,
            budget,
        })
    } else {
        Ok(())
    }
}
