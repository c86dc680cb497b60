//! Seeded randomness and random graph families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, EdgePartition, Graph, Owner};

pub type SimRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SimRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Per-case seed derived from a base seed and an index (splitmix64 mix), so
/// that sampled runs are reproducible regardless of evaluation order.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        ^ index
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(0x632B_E59B_D9B4_E019);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random bipartite `G(a, b, p)`: left side `0..a`, right side `a..a+b`.
pub fn bipartite_gnp<R: Rng + ?Sized>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in 0..b {
            if rng.gen_bool(p) {
                g.add_edge(u, a + v).unwrap();
            }
        }
    }
    g
}

/// Union of `k` random closed walks over distinct vertices (each a cycle of
/// length >= 3), reduced mod 2 on edges. Every degree is even; the result may
/// be disconnected or empty.
pub fn random_even_graph<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Graph {
    let mut parity = std::collections::BTreeSet::new();
    if n < 3 {
        return Graph::new(n);
    }
    for _ in 0..k {
        let len = rng.gen_range(3..=n);
        let mut verts: Vec<usize> = (0..n).collect();
        for i in 0..len {
            let j = rng.gen_range(i..n);
            verts.swap(i, j);
        }
        for i in 0..len {
            let e = Edge::new(verts[i], verts[(i + 1) % len]);
            if !parity.remove(&e) {
                parity.insert(e);
            }
        }
    }
    let mut g = Graph::new(n);
    for e in parity {
        g.insert(e).unwrap();
    }
    g
}

/// Each edge goes to Alice, Bob or both with probability `overlap` for both
/// and the remainder split evenly.
pub fn random_overlapping_split<R: Rng + ?Sized>(
    g: &Graph,
    overlap: f64,
    rng: &mut R,
) -> EdgePartition {
    let owned = g.edges().map(|e| {
        let owner = if rng.gen_bool(overlap) {
            Owner::Both
        } else if rng.gen_bool(0.5) {
            Owner::Alice
        } else {
            Owner::Bob
        };
        (e, owner)
    });
    EdgePartition::from_owned_edges(g.n_vertices(), owned.collect::<Vec<_>>(), false)
        .expect("valid edges")
}
