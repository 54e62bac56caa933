use thiserror::Error;

use crate::geometry::{Line, Point};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a line needs two distinct points, got {0} twice")]
    IdenticalPoints(Box<Point>),

    #[error("lines are identical: {0}")]
    IdenticalLines(Box<Line>),

    #[error("duplicate point {0}")]
    DuplicatePoint(Box<Point>),

    #[error("duplicate line y = {m}x + {c}")]
    DuplicateLine { m: String, c: String },

    #[error("{what}: {actual} exceeds the limit of {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("point {0} is not an integer point of the shared grid")]
    OffGrid(Box<Point>),

    #[error("catalog has no entry for order type {0}")]
    CatalogMiss(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("infeasible: {0}")]
    Infeasible(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn cap(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::CapExceeded {
            what,
            limit,
            actual,
        }
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
