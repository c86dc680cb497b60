//! Graph data model: simple undirected graphs, digraphs with self-loops,
//! two-party edge partitions and matchings.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Unordered vertex pair, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Panics on a self-loop; use [`Edge::try_new`] for untrusted input.
    pub fn new(a: usize, b: usize) -> Self {
        Self::try_new(a, b).expect("self-loop")
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn other(self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Canonical index of `{u, v}` (u < v) in the upper-triangular enumeration
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
pub fn pair_index(n: usize, e: Edge) -> usize {
    let (u, v) = e.endpoints();
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Returns false if the edge was already present.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        check_vertex(a, self.n)?;
        check_vertex(b, self.n)?;
        Ok(self.edges.insert(Edge::try_new(a, b)?))
    }

    pub fn insert(&mut self, e: Edge) -> Result<bool> {
        self.add_edge(e.u, e.v)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&Edge::new(a, b))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    /// Sorted neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        adjacency(self.n, self.edges.iter())
    }

    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(Graph {
            n: self.n,
            edges: self.edges.union(&other.edges).copied().collect(),
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges)
    }
}

pub(crate) fn adjacency<'a, I: Iterator<Item = &'a Edge>>(n: usize, edges: I) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// Directed graph on `n` vertices; self-loops allowed, no parallel arcs.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiGraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl DiGraph {
    pub fn new(n: usize) -> Self {
        DiGraph {
            n,
            arcs: BTreeSet::new(),
        }
    }

    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Result<Self> {
        let mut d = DiGraph::new(n);
        for (a, b) in arcs {
            d.add_arc(a, b)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, from: usize, to: usize) -> Result<bool> {
        check_vertex(from, self.n)?;
        check_vertex(to, self.n)?;
        Ok(self.arcs.insert((from, to)))
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.arcs.contains(&(from, to))
    }

    pub fn union(&self, other: &DiGraph) -> Result<DiGraph> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(DiGraph {
            n: self.n,
            arcs: self.arcs.union(&other.arcs).copied().collect(),
        })
    }
}

impl fmt::Debug for DiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiGraph(n={}, {:?})", self.n, self.arcs)
    }
}

/// Which party holds an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Owner {
    Alice,
    Bob,
    Both,
}

impl Owner {
    pub fn tag(self) -> &'static str {
        match self {
            Owner::Alice => "A",
            Owner::Bob => "B",
            Owner::Both => "AB",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Owner> {
        match tag {
            "A" => Some(Owner::Alice),
            "B" => Some(Owner::Bob),
            "AB" => Some(Owner::Both),
            _ => None,
        }
    }
}

/// A graph's edges split between Alice (`E_A`) and Bob (`E_B`). The sets may
/// overlap unless the partition is declared disjoint.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgePartition {
    n: usize,
    alice: Graph,
    bob: Graph,
    disjoint: bool,
}

impl EdgePartition {
    pub fn new(alice: Graph, bob: Graph, disjoint: bool) -> Result<Self> {
        if alice.n != bob.n {
            return Err(Error::LengthMismatch {
                left: alice.n,
                right: bob.n,
            });
        }
        if disjoint {
            if let Some(e) = alice.edges.intersection(&bob.edges).next() {
                return Err(Error::OverlappingPartition(e.u, e.v));
            }
        }
        Ok(EdgePartition {
            n: alice.n,
            alice,
            bob,
            disjoint,
        })
    }

    pub fn from_owned_edges<I: IntoIterator<Item = (Edge, Owner)>>(
        n: usize,
        edges: I,
        disjoint: bool,
    ) -> Result<Self> {
        let mut alice = Graph::new(n);
        let mut bob = Graph::new(n);
        for (e, owner) in edges {
            if owner != Owner::Bob {
                alice.insert(e)?;
            }
            if owner != Owner::Alice {
                bob.insert(e)?;
            }
        }
        Self::new(alice, bob, disjoint)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn alice(&self) -> &Graph {
        &self.alice
    }

    pub fn bob(&self) -> &Graph {
        &self.bob
    }

    pub fn is_declared_disjoint(&self) -> bool {
        self.disjoint
    }

    pub fn overlap_count(&self) -> usize {
        self.alice.edges.intersection(&self.bob.edges).count()
    }

    pub fn union(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.alice.edges.union(&self.bob.edges).copied().collect(),
        }
    }

    /// Every edge of the union with its owner, in canonical order.
    pub fn owned_edges(&self) -> Vec<(Edge, Owner)> {
        self.union()
            .edges()
            .map(|e| {
                let owner = match (self.alice.edges.contains(&e), self.bob.edges.contains(&e)) {
                    (true, true) => Owner::Both,
                    (true, false) => Owner::Alice,
                    _ => Owner::Bob,
                };
                (e, owner)
            })
            .collect()
    }
}

impl fmt::Debug for EdgePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "EdgePartition(n={}, A={:?}, B={:?})",
            self.n, self.alice.edges, self.bob.edges
        )
    }
}

/// Directed analogue of [`EdgePartition`]; arc sets may overlap.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArcPartition {
    pub alice: DiGraph,
    pub bob: DiGraph,
}

impl ArcPartition {
    pub fn union(&self) -> Result<DiGraph> {
        self.alice.union(&self.bob)
    }

    pub fn n_vertices(&self) -> usize {
        self.alice.n_vertices()
    }

    pub fn owned_arcs(&self) -> Vec<((usize, usize), Owner)> {
        let all: BTreeSet<_> = self.alice.arcs.union(&self.bob.arcs).copied().collect();
        all.into_iter()
            .map(|a| {
                let owner = match (self.alice.arcs.contains(&a), self.bob.arcs.contains(&a)) {
                    (true, true) => Owner::Both,
                    (true, false) => Owner::Alice,
                    _ => Owner::Bob,
                };
                (a, owner)
            })
            .collect()
    }
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: BTreeSet<Edge>,
}

impl Matching {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Result<Self> {
        let mut m = Matching::new();
        let mut seen = BTreeSet::new();
        for e in edges {
            for w in [e.u, e.v] {
                if !seen.insert(w) {
                    return Err(Error::MatchingConflict(w));
                }
            }
            m.edges.insert(e);
        }
        Ok(m)
    }

    /// Builds from a mate array (`mate[v] = Some(w)` iff `{v,w}` matched).
    pub fn from_mates(mate: &[Option<usize>]) -> Result<Self> {
        Self::from_edges(
            mate.iter()
                .enumerate()
                .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| Edge::new(v, w))),
        )
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for e in &self.edges {
            mate[e.u] = Some(e.v);
            mate[e.v] = Some(e.u);
        }
        mate
    }

    /// True iff every edge of the matching is an edge of `g`.
    pub fn is_subgraph_of(&self, g: &Graph) -> bool {
        self.edges.iter().all(|e| g.edge_set().contains(e))
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching{:?}", self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_normalizes() {
        assert_eq!(Edge::new(3, 1).endpoints(), (1, 3));
        assert_eq!(Edge::try_new(2, 2), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn graph_rejects_bad_endpoints() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        let mut g = Graph::new(3);
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn pair_index_is_dense() {
        let n = 7;
        let mut idx = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                idx.push(pair_index(n, Edge::new(u, v)));
            }
        }
        assert_eq!(idx, (0..pair_count(n)).collect::<Vec<_>>());
    }

    #[test]
    fn disjoint_partition_checked() {
        let a = Graph::from_edges(3, [(0, 1)]).unwrap();
        let b = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            EdgePartition::new(a.clone(), b.clone(), true),
            Err(Error::OverlappingPartition(0, 1))
        );
        let p = EdgePartition::new(a, b, false).unwrap();
        assert_eq!(p.overlap_count(), 1);
        assert_eq!(p.union().edge_count(), 2);
        assert_eq!(
            p.owned_edges(),
            vec![
                (Edge::new(0, 1), Owner::Both),
                (Edge::new(1, 2), Owner::Bob)
            ]
        );
    }

    #[test]
    fn matching_rejects_shared_vertex() {
        assert_eq!(
            Matching::from_edges([Edge::new(0, 1), Edge::new(1, 2)]),
            Err(Error::MatchingConflict(1))
        );
        let m = Matching::from_edges([Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert_eq!(m.mates(4), vec![Some(1), Some(0), Some(3), Some(2)]);
        assert_eq!(Matching::from_mates(&m.mates(4)).unwrap(), m);
    }
}
