//! Classical protocols as party state machines over [`crate::comm`].
//!
//! Shared conventions: ties are broken lowest index first; vertex ids are
//! `⌈log₂ n⌉`-bit big-endian fields; anything both parties can compute from
//! the transcript so far is never sent.

pub mod bipartite;
pub mod connectivity;
pub mod euler;
pub mod matching_hk;
pub mod spanning_forest;
pub mod triangle;

use std::fmt;
use std::str::FromStr;

pub use bipartite::Bipartiteness;
pub use connectivity::Connectivity;
pub use euler::EulerTrivial;
pub use matching_hk::{HkOutput, MatchingHk};
pub use spanning_forest::SpanningForest;
pub use triangle::TriangleProtocol;

use crate::comm::{self, ProtocolOutcome};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgePartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProtocolId {
    Connectivity,
    SpanningForest,
    Bipartite,
    MatchingHk,
    EulerTrivial,
    Triangle,
}

impl ProtocolId {
    pub const ALL: [ProtocolId; 6] = [
        ProtocolId::Connectivity,
        ProtocolId::SpanningForest,
        ProtocolId::Bipartite,
        ProtocolId::MatchingHk,
        ProtocolId::EulerTrivial,
        ProtocolId::Triangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProtocolId::Connectivity => "connectivity",
            ProtocolId::SpanningForest => "spanning-forest",
            ProtocolId::Bipartite => "bipartite",
            ProtocolId::MatchingHk => "matching-hk",
            ProtocolId::EulerTrivial => "euler-trivial",
            ProtocolId::Triangle => "triangle",
        }
    }
}

impl fmt::Display for ProtocolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProtocolId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProtocolId::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown protocol {s:?}")))
    }
}

/// Protocol output in a protocol-independent form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Bool(bool),
    Count(usize),
    Forest(Vec<Edge>),
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Answer::Bool(b) => write!(f, "{b}"),
            Answer::Count(c) => write!(f, "{c}"),
            Answer::Forest(edges) => write!(f, "forest[{}]", edges.len()),
        }
    }
}

/// Runs the protocol named by `id`. `left` is the declared left side and is
/// required for `matching-hk` only.
pub fn run_protocol(
    id: ProtocolId,
    inst: &EdgePartition,
    seed: u64,
    left: Option<&[usize]>,
) -> Result<ProtocolOutcome<Answer>> {
    Ok(match id {
        ProtocolId::Connectivity => comm::run(&Connectivity, inst, seed)?.map(Answer::Bool),
        ProtocolId::SpanningForest => comm::run(&SpanningForest, inst, seed)?.map(Answer::Forest),
        ProtocolId::Bipartite => comm::run(&Bipartiteness, inst, seed)?.map(Answer::Bool),
        ProtocolId::MatchingHk => {
            let left = left.ok_or_else(|| {
                Error::InvalidParameter("matching-hk needs a declared left vertex set".into())
            })?;
            comm::run(&MatchingHk::new(left.to_vec()), inst, seed)?.map(|o| Answer::Count(o.size))
        }
        ProtocolId::EulerTrivial => comm::run(&EulerTrivial, inst, seed)?.map(Answer::Bool),
        ProtocolId::Triangle => comm::run(&TriangleProtocol, inst, seed)?.map(Answer::Bool),
    })
}
