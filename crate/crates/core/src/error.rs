use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("construction failed: {0}")]
    ConstructionFailure(FailureStats),

    /// An internal consistency check failed. Seeing one of these means a bug
    /// (or a counterexample to a proven bound).
    #[error("logic error: {0}")]
    Logic(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn limit(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }

    pub(crate) fn logic(msg: impl Into<String>) -> Self {
        Error::Logic(msg.into())
    }
}

/// Attempt statistics carried by a failed randomized construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct FailureStats {
    pub what: String,
    pub attempts: usize,
    /// Number of attempts rejected per criterion.
    pub rejections: BTreeMap<String, usize>,
}

impl FailureStats {
    pub fn new(what: impl Into<String>) -> Self {
        FailureStats { what: what.into(), ..Default::default() }
    }

    pub fn reject(&mut self, criterion: &str) {
        *self.rejections.entry(criterion.to_string()).or_default() += 1;
    }

    /// The criterion responsible for the most rejections.
    pub fn dominant(&self) -> Option<&str> {
        self.rejections
            .iter()
            .max_by(|a, b| a.1.cmp(b.1).then_with(|| b.0.cmp(a.0)))
            .map(|(k, _)| k.as_str())
    }
}

impl fmt::Display for FailureStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} after {} attempts", self.what, self.attempts)?;
        for (k, v) in &self.rejections {
            write!(f, "; {k}={v}")?;
        }
        Ok(())
    }
}
