use thiserror::Error;

use crate::solver::PartialSolve;

/// Everything that can go wrong in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),

    #[error("{0} and {1} are already adjacent")]
    AlreadyAnEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {0} occurs more than once")]
    RepeatedVertex(usize),

    #[error("sequence is not legal: step {step} footprints nothing")]
    IllegalSequence { step: usize },

    #[error("sequence is not dominating: vertex {vertex} is undominated")]
    NotDominating { vertex: usize },

    #[error("graph has {n} vertices, limit is {max}")]
    TooLarge { n: usize, max: usize },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("interval {vertex} has left endpoint {left} > right endpoint {right}")]
    InvalidInterval {
        vertex: usize,
        left: String,
        right: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("state budget exhausted after {} states (best length found: {})", .0.stats.explored_states, .0.best_length)]
    BudgetExhausted(Box<PartialSolve>),

    #[error("bound violated: {0}")]
    BoundViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 1 for bad input, 2 for a solver abort, 3 for a broken invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExhausted(_) => 2,
            Error::BoundViolation(_) => 3,
            _ => 1,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
