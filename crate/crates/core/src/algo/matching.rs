//! Maximum matching oracles.
//!
//! [`hopcroft_karp_max_matching`] is the centralized reference for the
//! distributed protocol: each phase builds BFS layers from the free left
//! vertices, collects the free right vertices of the first layer that has any,
//! and runs a layered DFS from them back to layer 0. Vertex-disjoint augmenting
//! paths found in one sweep are applied together at the end of the phase.
//!
//! [`has_perfect_matching_exact`] works on arbitrary (non-bipartite) graphs by
//! branch and bound and is used to verify the matching gadgets.

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching};

/// Side of each vertex, `true` = left (X).
pub fn side_map(n: usize, left: &[usize]) -> Result<Vec<bool>> {
    let mut side = vec![false; n];
    for &v in left {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        side[v] = true;
    }
    Ok(side)
}

pub(crate) fn check_bipartition(g: &Graph, side: &[bool]) -> Result<()> {
    match g.edges().find(|e| side[e.u()] == side[e.v()]) {
        Some(e) => Err(Error::NotBipartiteSides(e.u(), e.v())),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopcroftKarp {
    pub matching: Matching,
    /// Number of BFS layerings performed, including the final one that found
    /// no augmenting path.
    pub phases: usize,
}

pub fn hopcroft_karp_max_matching(g: &Graph, left: &[usize]) -> Result<HopcroftKarp> {
    let n = g.n_vertices();
    let side = side_map(n, left)?;
    check_bipartition(g, &side)?;
    let adj = g.adjacency();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut phases = 0;

    loop {
        phases += 1;
        let Some((layer, free_ends)) = bfs_layers(&adj, &side, &mate) else {
            break;
        };
        let mut used = vec![false; n];
        let mut paths = Vec::new();
        for &root in &free_ends {
            let mut path = vec![root];
            used[root] = true;
            if layered_dfs(root, &adj, &layer, &mate, &mut used, &mut path) {
                paths.push(path);
            }
        }
        debug_assert!(!paths.is_empty());
        for path in paths {
            // path = y_k, x_k, y_{k-1}, x_{k-1}, ..., x_0; re-pair as (y, x)
            for pair in path.chunks(2) {
                mate[pair[0]] = Some(pair[1]);
                mate[pair[1]] = Some(pair[0]);
            }
        }
    }

    Ok(HopcroftKarp {
        matching: Matching::from_mates(&mate)?,
        phases,
    })
}

/// Layer index per vertex and the set `F` of free right vertices in the last
/// layer; `None` when no augmenting path exists.
fn bfs_layers(
    adj: &[Vec<usize>],
    side: &[bool],
    mate: &[Option<usize>],
) -> Option<(Vec<Option<usize>>, Vec<usize>)> {
    let n = adj.len();
    let mut layer = vec![None; n];
    let mut frontier: Vec<usize> = (0..n).filter(|&v| side[v] && mate[v].is_none()).collect();
    for &x in &frontier {
        layer[x] = Some(0);
    }
    let mut depth = 0;
    while !frontier.is_empty() {
        let mut next_y = Vec::new();
        for &x in &frontier {
            for &y in &adj[x] {
                if layer[y].is_none() && mate[x] != Some(y) {
                    layer[y] = Some(depth + 1);
                    next_y.push(y);
                }
            }
        }
        next_y.sort_unstable();
        if next_y.is_empty() {
            return None;
        }
        let free: Vec<usize> = next_y
            .iter()
            .copied()
            .filter(|&y| mate[y].is_none())
            .collect();
        if !free.is_empty() {
            return Some((layer, free));
        }
        frontier = next_y
            .iter()
            .map(|&y| mate[y].expect("non-free right vertex"))
            .collect();
        for &x in &frontier {
            layer[x] = Some(depth + 2);
        }
        depth += 2;
    }
    None
}

fn layered_dfs(
    y: usize,
    adj: &[Vec<usize>],
    layer: &[Option<usize>],
    mate: &[Option<usize>],
    used: &mut [bool],
    path: &mut Vec<usize>,
) -> bool {
    let ly = layer[y].expect("layered vertex");
    for &x in &adj[y] {
        if used[x] || layer[x] != Some(ly - 1) {
            continue;
        }
        used[x] = true;
        path.push(x);
        if ly == 1 {
            return true;
        }
        let y2 = mate[x].expect("inner left vertex is matched");
        if !used[y2] {
            used[y2] = true;
            path.push(y2);
            if layered_dfs(y2, adj, layer, mate, used, path) {
                return true;
            }
            path.pop();
        }
        path.pop();
    }
    false
}

pub const EXACT_MATCHING_LIMIT: usize = 64;

/// Exact perfect-matching test for general graphs with at most
/// [`EXACT_MATCHING_LIMIT`] vertices. Branches on a minimum-degree vertex and
/// prunes any state with an odd component.
pub fn has_perfect_matching_exact(g: &Graph) -> Result<bool> {
    let n = g.n_vertices();
    if n > EXACT_MATCHING_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: EXACT_MATCHING_LIMIT,
        });
    }
    if n % 2 == 1 {
        return Ok(false);
    }
    let mut adj = vec![0u64; n];
    for e in g.edges() {
        adj[e.u()] |= 1 << e.v();
        adj[e.v()] |= 1 << e.u();
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(search(&adj, all))
}

fn search(adj: &[u64], remaining: u64) -> bool {
    if remaining == 0 {
        return true;
    }
    if has_odd_component(adj, remaining) {
        return false;
    }
    let mut best = usize::MAX;
    let mut best_deg = u32::MAX;
    let mut rest = remaining;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & remaining).count_ones();
        if d < best_deg {
            best_deg = d;
            best = v;
            if d <= 1 {
                break;
            }
        }
    }
    if best_deg == 0 {
        return false;
    }
    let v = best;
    let mut nbrs = adj[v] & remaining;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if search(adj, remaining & !(1 << v) & !(1 << w)) {
            return true;
        }
    }
    false
}

fn has_odd_component(adj: &[u64], remaining: u64) -> bool {
    let mut unseen = remaining;
    while unseen != 0 {
        let start = unseen & unseen.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & remaining & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        if comp.count_ones() % 2 == 1 {
            return true;
        }
        unseen &= !comp;
    }
    false
}
