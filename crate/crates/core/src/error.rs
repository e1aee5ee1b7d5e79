use thiserror::Error;

/// Errors produced by graph construction, parsing, and the exact searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge ({0},{0}) not allowed in a simple graph")]
    LoopEdge(usize),

    #[error("duplicate edge ({0},{1})")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph order {order} exceeds supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("invalid family parameter: {0}")]
    InvalidFamilyParam(String),

    #[error("parse error at line {line}, byte {byte}: {message}")]
    Parse {
        line: usize,
        byte: usize,
        message: String,
    },

    #[error("enumeration cap exceeded: order {n} > cap {cap}")]
    EnumerationCapExceeded { n: usize, cap: usize },

    #[error("search budget exceeded: {counter} limit {limit}")]
    SearchBudgetExceeded { counter: &'static str, limit: u64 },

    #[error("increase by {k} is infeasible: gamma + {k} would exceed the graph order")]
    InfeasibleIncrease { k: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("pattern absent: {0}")]
    PatternAbsent(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, byte: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            byte,
            message: message.into(),
        }
    }
}
