use thiserror::Error;

use crate::comm::Role;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0} is not allowed in an undirected graph")]
    SelfLoop(usize),

    #[error("edge sets overlap on {{{0}, {1}}} but the partition was declared disjoint")]
    OverlappingPartition(usize, usize),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("edge {{{0}, {1}}} has both endpoints on the same side of the bipartition")]
    NotBipartiteSides(usize, usize),

    #[error("matching edges share vertex {0}")]
    MatchingConflict(usize),

    #[error("graph too large for this operation: {n} vertices (limit {limit})")]
    TooLarge { n: usize, limit: usize },

    #[error("integer overflow during exact determinant evaluation")]
    Overflow,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("protocol violation by {role:?}: {msg}")]
    Protocol { role: Role, msg: String },

    #[error("parties disagree on the output")]
    Disagreement,

    #[error("exhaustive enumeration infeasible: input space is 2^{bits}")]
    Infeasible { bits: u32 },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn protocol(role: Role, msg: impl Into<String>) -> Self {
        Error::Protocol {
            role,
            msg: msg.into(),
        }
    }
}
