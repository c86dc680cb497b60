//! Centralized graph oracles. Every protocol and reduction is checked against
//! these.

pub mod linalg;
pub mod lovasz;
pub mod matching;

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::union_find::UnionFind;

/// Partition of the vertex set into connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    labels: Vec<usize>,
}

impl Components {
    /// Components of the graph with vertex labels given by union-find roots.
    pub fn from_union_find(uf: &mut UnionFind) -> Self {
        Components {
            labels: uf.labels(),
        }
    }

    /// Minimum vertex of the component containing `v`.
    pub fn representative(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn count(&self) -> usize {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(v, &r)| v == r)
            .count()
    }

    /// Blocks sorted by their minimum vertex, each block ascending.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut index = vec![usize::MAX; self.labels.len()];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &r) in self.labels.iter().enumerate() {
            if index[r] == usize::MAX {
                index[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[index[r]].push(v);
        }
        blocks
    }
}

pub fn connected_components(g: &Graph) -> Components {
    let mut uf = UnionFind::new(g.n_vertices());
    for e in g.edges() {
        uf.union(e.u(), e.v());
    }
    Components::from_union_find(&mut uf)
}

/// A graph with no vertices is treated as disconnected.
pub fn is_connected(g: &Graph) -> bool {
    g.n_vertices() >= 1 && connected_components(g).count() == 1
}

/// Every vertex has even degree, at least one edge exists, and all edges lie
/// in a single component. Isolated vertices are ignored.
pub fn is_eulerian(g: &Graph) -> bool {
    if g.edge_count() == 0 {
        return false;
    }
    if g.degrees().iter().any(|d| d % 2 == 1) {
        return false;
    }
    edges_in_one_component(g)
}

fn edges_in_one_component(g: &Graph) -> bool {
    let comps = connected_components(g);
    let mut edge_roots = g.edges().map(|e| comps.representative(e.u()));
    match edge_roots.next() {
        None => true,
        Some(first) => edge_roots.all(|r| r == first),
    }
}

/// Hierholzer's algorithm: a closed walk using every edge exactly once, as a
/// vertex sequence whose first and last entries coincide. `None` if the graph
/// has no Eulerian circuit (including the edgeless case).
pub fn euler_circuit(g: &Graph) -> Option<Vec<usize>> {
    if g.edge_count() == 0 || g.degrees().iter().any(|d| d % 2 == 1) {
        return None;
    }
    let n = g.n_vertices();
    let edges: Vec<_> = g.edges().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (id, e) in edges.iter().enumerate() {
        incident[e.u()].push(id);
        incident[e.v()].push(id);
    }
    let mut used = vec![false; edges.len()];
    let mut cursor = vec![0usize; n];
    let start = edges[0].u();
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        while cursor[v] < incident[v].len() && used[incident[v][cursor[v]]] {
            cursor[v] += 1;
        }
        if cursor[v] == incident[v].len() {
            circuit.push(v);
            stack.pop();
        } else {
            let id = incident[v][cursor[v]];
            used[id] = true;
            stack.push(edges[id].other(v));
        }
    }
    if circuit.len() != edges.len() + 1 {
        // some edge sits in another component
        return None;
    }
    circuit.reverse();
    Some(circuit)
}

/// BFS 2-coloring; `Some(side)` with `side[v] = true` for the second color.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.n_vertices();
    let adj = g.adjacency();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for seed in 0..n {
        if color[seed].is_some() {
            continue;
        }
        color[seed] = Some(false);
        queue.push_back(seed);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &w in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap()).collect())
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// Brute-force scan over edges and common neighbors.
pub fn has_triangle(g: &Graph) -> bool {
    let adj = g.adjacency();
    g.edges().any(|e| {
        let (a, b) = (&adj[e.u()], &adj[e.v()]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
            }
        }
        false
    })
}
