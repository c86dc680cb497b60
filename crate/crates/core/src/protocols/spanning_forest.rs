//! Distributed breadth-first search. For each level Alice lists the vertices
//! she discovers from the current level as `(vertex, parent)` pairs, then Bob
//! lists the ones she missed. Each list ends with a single `1` bit so that an
//! empty list is still a message. A new component starts at the lowest
//! unvisited vertex, which both parties know, so seeding is free.
//!
//! Cost: `2⌈log₂ n⌉` bits per non-root vertex plus one bit per list.

use crate::comm::{ceil_log2, BitReader, Bits, Message, Party, PartyView, Protocol, Role, Turn};
use crate::error::{Error, Result};
use crate::graph::Edge;

#[derive(Clone, Copy, Debug, Default)]
pub struct SpanningForest;

impl Protocol for SpanningForest {
    type Output = Vec<Edge>;
    type Party = ForestParty;

    fn party(&self, view: PartyView) -> ForestParty {
        let n = view.n_vertices;
        let adj = view.edges.adjacency();
        ForestParty {
            role: view.role,
            adj,
            bfs: SharedBfs::new(n),
        }
    }
}

/// BFS state both parties hold identically.
struct SharedBfs {
    n: usize,
    width: usize,
    visited: Vec<bool>,
    n_visited: usize,
    level: Vec<usize>,
    on_level: Vec<bool>,
    next: Vec<usize>,
    lists: u8,
    forest: Vec<Edge>,
}

impl SharedBfs {
    fn new(n: usize) -> Self {
        let mut s = SharedBfs {
            n,
            width: ceil_log2(n),
            visited: vec![false; n],
            n_visited: 0,
            level: Vec::new(),
            on_level: vec![false; n],
            next: Vec::new(),
            lists: 0,
            forest: Vec::new(),
        };
        s.seed();
        s
    }

    fn done(&self) -> bool {
        self.n_visited == self.n
    }

    fn seed(&mut self) {
        if let Some(v) = (0..self.n).find(|&v| !self.visited[v]) {
            self.visit(v);
            self.set_level(vec![v]);
        }
    }

    fn visit(&mut self, v: usize) {
        self.visited[v] = true;
        self.n_visited += 1;
    }

    fn set_level(&mut self, level: Vec<usize>) {
        for &v in &self.level {
            self.on_level[v] = false;
        }
        for &v in &level {
            self.on_level[v] = true;
        }
        self.level = level;
    }

    /// Pairs this party would announce for the current level.
    fn discover(&self, adj: &[Vec<usize>]) -> Vec<(usize, usize)> {
        let mut claimed = vec![false; self.n];
        let mut out = Vec::new();
        for &u in &self.level {
            for &w in &adj[u] {
                if !self.visited[w] && !claimed[w] {
                    claimed[w] = true;
                    out.push((w, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn encode(&self, pairs: &[(usize, usize)]) -> Bits {
        let mut b = Bits::new();
        for &(v, p) in pairs {
            b.push_uint(v, self.width);
            b.push_uint(p, self.width);
        }
        b.push_bit(true);
        b
    }

    fn decode(&self, mut r: BitReader<'_>) -> Result<Vec<(usize, usize)>> {
        let sender = r.sender();
        let pair_bits = 2 * self.width;
        let body = r
            .remaining()
            .checked_sub(1)
            .ok_or_else(|| Error::protocol(sender, "empty list"))?;
        if (pair_bits == 0 && body != 0) || (pair_bits > 0 && body % pair_bits != 0) {
            return Err(Error::protocol(sender, "malformed discovery list"));
        }
        let count = body.checked_div(pair_bits).unwrap_or(0);
        let mut pairs = Vec::with_capacity(count);
        for _ in 0..count {
            let v = r.read_vertex(self.width, self.n)?;
            let p = r.read_vertex(self.width, self.n)?;
            pairs.push((v, p));
        }
        if !r.read_bit()? {
            return Err(Error::protocol(sender, "missing list terminator"));
        }
        r.finish()?;
        Ok(pairs)
    }

    fn apply(&mut self, sender: Role, pairs: &[(usize, usize)]) -> Result<()> {
        for &(v, p) in pairs {
            if self.visited[v] || !self.on_level[p] {
                return Err(Error::protocol(sender, format!("bad discovery ({v}, {p})")));
            }
            self.visit(v);
            self.next.push(v);
            self.forest.push(Edge::try_new(v, p)?);
        }
        self.lists += 1;
        if self.done() {
            return Ok(());
        }
        if self.lists == 2 {
            self.lists = 0;
            let mut next = std::mem::take(&mut self.next);
            next.sort_unstable();
            if next.is_empty() {
                self.set_level(Vec::new());
                self.seed();
            } else {
                self.set_level(next);
            }
        }
        Ok(())
    }

    fn output(&self) -> Vec<Edge> {
        let mut f = self.forest.clone();
        f.sort_unstable();
        f
    }
}

pub struct ForestParty {
    role: Role,
    adj: Vec<Vec<usize>>,
    bfs: SharedBfs,
}

impl Party for ForestParty {
    type Output = Vec<Edge>;

    fn turn(&mut self, inbox: &[Message]) -> Result<Turn> {
        for msg in inbox {
            let pairs = self.bfs.decode(msg.payload.reader(msg.sender))?;
            self.bfs.apply(msg.sender, &pairs)?;
        }
        if self.bfs.done() {
            return Ok(Turn::Halt);
        }
        let lister = if self.bfs.lists == 0 {
            Role::Alice
        } else {
            Role::Bob
        };
        if lister != self.role {
            return Err(Error::protocol(self.role, "out of turn"));
        }
        let pairs = self.bfs.discover(&self.adj);
        let payload = self.bfs.encode(&pairs);
        self.bfs.apply(self.role, &pairs)?;
        Ok(Turn::Send(payload))
    }

    fn output(&self) -> Option<Vec<Edge>> {
        self.bfs.done().then(|| self.bfs.output())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::connected_components;
    use crate::comm::{run, split_edges, SplitMode};
    use crate::graph::Graph;
    use crate::random::{gnp, rng_from_seed};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn path_all_alice() {
        let g = path(9);
        let inst = split_edges(&g, &SplitMode::AllAlice, 0).unwrap();
        let out = run(&SpanningForest, &inst, 0).unwrap();
        assert_eq!(out.output, g.edges().collect::<Vec<_>>());
        // Bob's messages are bare terminators
        assert!(out
            .transcript
            .messages()
            .iter()
            .filter(|m| m.sender == Role::Bob)
            .all(|m| m.payload.len() == 1));
    }

    #[test]
    fn path_interleaved() {
        let g = path(10);
        let inst = split_edges(&g, &SplitMode::Interleave, 0).unwrap();
        let out = run(&SpanningForest, &inst, 0).unwrap();
        assert_eq!(out.output, g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn forest_matches_components() {
        let mut rng = rng_from_seed(3);
        for seed in 0..100 {
            let g = gnp(12, 0.3, &mut rng);
            let inst = split_edges(&g, &SplitMode::Random, seed).unwrap();
            let out = run(&SpanningForest, &inst, seed).unwrap();
            let forest = Graph::from_edges(12, out.output.iter().map(|e| e.endpoints())).unwrap();
            assert!(out.output.iter().all(|e| g.has_edge(e.u(), e.v())));
            let (a, b) = (connected_components(&forest), connected_components(&g));
            assert_eq!(a.labels(), b.labels());
            assert_eq!(out.output.len(), 12 - b.count());
        }
    }

    #[test]
    fn isolated_vertices() {
        let inst = split_edges(&Graph::new(5), &SplitMode::AllAlice, 0).unwrap();
        let out = run(&SpanningForest, &inst, 0).unwrap();
        assert!(out.output.is_empty());
        // two bare terminators per singleton level; the last seed finishes the search
        assert_eq!(out.bits(), 2 * 4);
    }
}
