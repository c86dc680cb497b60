//! Gadget constructions that encode parity, inner product and related Boolean
//! functions as graph properties, with verifiers that check every
//! construction against the centralized oracles.
//!
//! Role labels are 1-based (`t_1`, `k^tt_2`, ...); vertex ids are 0-based and
//! follow the fixed formulas documented on each builder.

mod connectivity;
mod determinant;
mod euler;
mod matching;
mod verify;

use std::fmt;
use std::str::FromStr;

pub use connectivity::{
    build_ip_connectivity, build_parity_connectivity, parity_connectivity_graph,
};
pub use determinant::{
    build_det_instance, build_parity_determinant, parity_determinant_graph, RightArcs,
    DET_GADGET_MAX,
};
pub use euler::{build_or_ip_euler_comm, build_or_ip_euler_query};
pub use matching::{build_ip_matching, MatchVariant};
pub use verify::{verify_reduction, VerifyMode, VerifyReport, EXHAUSTIVE_LIMIT_BITS};

use crate::bits::{BitMatrix, BitVector};
use crate::error::{Error, Result};
use crate::graph::{ArcPartition, DiGraph, Edge, EdgePartition, Graph, Owner};
use crate::io;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    ParityConn,
    IpConn,
    IpMatch,
    ParityDet,
    DetIp,
    OrIpEuler,
    OrIpEulerComm,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 7] = [
        ReductionKind::ParityConn,
        ReductionKind::IpConn,
        ReductionKind::IpMatch,
        ReductionKind::ParityDet,
        ReductionKind::DetIp,
        ReductionKind::OrIpEuler,
        ReductionKind::OrIpEulerComm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::ParityConn => "parity-conn",
            ReductionKind::IpConn => "ip-conn",
            ReductionKind::IpMatch => "ip-match",
            ReductionKind::ParityDet => "parity-det",
            ReductionKind::DetIp => "det-ip",
            ReductionKind::OrIpEuler => "or-ip-euler",
            ReductionKind::OrIpEulerComm => "or-ip-euler-comm",
        }
    }

    /// Total input bits at size `n`.
    pub fn input_bits(self, n: usize) -> usize {
        match self {
            ReductionKind::ParityConn => n,
            ReductionKind::IpConn | ReductionKind::IpMatch => 2 * n,
            ReductionKind::ParityDet | ReductionKind::OrIpEuler => n * n,
            ReductionKind::DetIp | ReductionKind::OrIpEulerComm => 2 * n * n,
        }
    }

    /// Names and lengths of the inputs, in the order `build` expects them.
    pub fn input_names(self) -> &'static [&'static str] {
        match self {
            ReductionKind::ParityConn | ReductionKind::ParityDet | ReductionKind::OrIpEuler => {
                &["z"]
            }
            _ => &["x", "y"],
        }
    }

    fn is_matrix_input(self) -> bool {
        matches!(
            self,
            ReductionKind::ParityDet
                | ReductionKind::OrIpEuler
                | ReductionKind::DetIp
                | ReductionKind::OrIpEulerComm
        )
    }

    /// Length of each individual input at size `n`.
    pub fn input_len(self, n: usize) -> usize {
        if self.is_matrix_input() {
            n * n
        } else {
            n
        }
    }

    /// Builds the instance from raw inputs (vectors, or row-major flattened
    /// matrices), one per name in [`Self::input_names`].
    pub fn build(
        self,
        n: usize,
        inputs: &[BitVector],
        variant: MatchVariant,
    ) -> Result<GadgetInstance> {
        let names = self.input_names();
        if inputs.len() != names.len() {
            return Err(Error::InvalidParameter(format!(
                "{} takes {} input(s), got {}",
                self.name(),
                names.len(),
                inputs.len()
            )));
        }
        let want = self.input_len(n);
        for v in inputs {
            if v.len() != want {
                return Err(Error::LengthMismatch {
                    left: v.len(),
                    right: want,
                });
            }
        }
        let mat = |v: &BitVector| BitMatrix::from_flat(n, v.clone());
        match self {
            ReductionKind::ParityConn => build_parity_connectivity(&inputs[0]),
            ReductionKind::IpConn => build_ip_connectivity(&inputs[0], &inputs[1]),
            ReductionKind::IpMatch => build_ip_matching(&inputs[0], &inputs[1], variant),
            ReductionKind::ParityDet => build_parity_determinant(&mat(&inputs[0])?),
            ReductionKind::DetIp => {
                build_det_instance(&mat(&inputs[0])?, &mat(&inputs[1])?, RightArcs::IntoSink)
            }
            ReductionKind::OrIpEuler => build_or_ip_euler_query(&mat(&inputs[0])?),
            ReductionKind::OrIpEulerComm => {
                build_or_ip_euler_comm(&mat(&inputs[0])?, &mat(&inputs[1])?)
            }
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReductionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown reduction {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetGraph {
    Single(Graph),
    Split(EdgePartition),
    Directed(DiGraph),
    SplitDirected(ArcPartition),
}

impl GadgetGraph {
    pub fn n_vertices(&self) -> usize {
        match self {
            GadgetGraph::Single(g) => g.n_vertices(),
            GadgetGraph::Split(p) => p.n_vertices(),
            GadgetGraph::Directed(d) => d.n_vertices(),
            GadgetGraph::SplitDirected(p) => p.n_vertices(),
        }
    }

    pub fn undirected_union(&self) -> Option<Graph> {
        match self {
            GadgetGraph::Single(g) => Some(g.clone()),
            GadgetGraph::Split(p) => Some(p.union()),
            _ => None,
        }
    }

    pub fn directed_union(&self) -> Option<DiGraph> {
        match self {
            GadgetGraph::Directed(d) => Some(d.clone()),
            GadgetGraph::SplitDirected(p) => p.union().ok(),
            _ => None,
        }
    }

    /// Edges (or arcs) of the union.
    pub fn edge_count(&self) -> usize {
        match self {
            GadgetGraph::Single(g) => g.edge_count(),
            GadgetGraph::Split(p) => p.union().edge_count(),
            GadgetGraph::Directed(d) => d.arc_count(),
            GadgetGraph::SplitDirected(p) => p.owned_arcs().len(),
        }
    }
}

/// The property value a gadget is built to encode.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Connected(bool),
    PerfectMatching(bool),
    Determinant(i128),
    Eulerian(bool),
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Connected(b) => write!(f, "connected={b}"),
            Expected::PerfectMatching(b) => write!(f, "perfect_matching={b}"),
            Expected::Determinant(d) => write!(f, "det={d}"),
            Expected::Eulerian(b) => write!(f, "eulerian={b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub kind: ReductionKind,
    pub n: usize,
    pub graph: GadgetGraph,
    /// Label of every vertex, indexed by vertex id.
    pub roles: Vec<String>,
    /// Named inputs as hex (position 1 = least significant bit).
    pub inputs: Vec<(String, String)>,
    pub expected: Expected,
}

impl GadgetInstance {
    /// Canonical text serialization in the matching graph file format.
    pub fn to_text(&self) -> String {
        match &self.graph {
            GadgetGraph::Single(g) => io::write_graph(g),
            GadgetGraph::Split(p) => io::write_partition(p),
            GadgetGraph::Directed(d) => io::write_digraph(d),
            GadgetGraph::SplitDirected(p) => io::write_arc_partition(p),
        }
    }

    pub fn to_dot(&self) -> String {
        let roles = Some(self.roles.as_slice());
        match &self.graph {
            GadgetGraph::Single(g) => io::graph_to_dot(g, roles),
            GadgetGraph::Split(p) => io::partition_to_dot(p, roles),
            GadgetGraph::Directed(d) => io::digraph_to_dot(d, roles),
            GadgetGraph::SplitDirected(p) => io::arc_partition_to_dot(p, roles),
        }
    }
}

/// Collects owned edges by vertex id.
#[derive(Default)]
struct EdgeSink {
    edges: Vec<(Edge, Owner)>,
}

impl EdgeSink {
    fn add(&mut self, owner: Owner, a: usize, b: usize) {
        self.edges.push((Edge::new(a, b), owner));
    }

    fn alice(&mut self, a: usize, b: usize) {
        self.add(Owner::Alice, a, b);
    }

    fn bob(&mut self, a: usize, b: usize) {
        self.add(Owner::Bob, a, b);
    }

    fn partition(self, n: usize, disjoint: bool) -> Result<EdgePartition> {
        EdgePartition::from_owned_edges(n, self.edges, disjoint)
    }
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_roundtrip() {
        for k in ReductionKind::ALL {
            assert_eq!(k.name().parse::<ReductionKind>().unwrap(), k);
        }
    }

    #[test]
    fn build_checks_arity() {
        let z = BitVector::zeros(3);
        assert!(ReductionKind::IpConn
            .build(3, std::slice::from_ref(&z), MatchVariant::Overlap)
            .is_err());
        assert!(ReductionKind::IpConn
            .build(3, &[z.clone(), BitVector::zeros(4)], MatchVariant::Overlap)
            .is_err());
        let inst = ReductionKind::IpConn
            .build(3, &[z.clone(), z], MatchVariant::Overlap)
            .unwrap();
        assert_eq!(inst.graph.n_vertices(), 30);
    }
}
