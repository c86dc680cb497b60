use super::{require, EdgeSink, Expected, GadgetGraph, GadgetInstance, ReductionKind};
use crate::bits::{inner_product, BitVector};
use crate::error::Result;
use crate::graph::Graph;

/// Two rows of `n` vertices joined cyclically: straight where `z_i = 0`,
/// crossed where `z_i = 1`. One `2n`-cycle iff `|z|` is odd, otherwise two
/// `n`-cycles. Vertex ids: `t_i = i − 1`, `b_i = n + i − 1`.
pub fn parity_connectivity_graph(z: &BitVector) -> Result<Graph> {
    let n = z.len();
    require(n >= 3, "parity-conn needs n >= 3")?;
    let t = |i: usize| i % n;
    let b = |i: usize| n + i % n;
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        if z.get(i) {
            g.add_edge(t(i), b(i + 1))?;
            g.add_edge(b(i), t(i + 1))?;
        } else {
            g.add_edge(t(i), t(i + 1))?;
            g.add_edge(b(i), b(i + 1))?;
        }
    }
    Ok(g)
}

pub fn build_parity_connectivity(z: &BitVector) -> Result<GadgetInstance> {
    let g = parity_connectivity_graph(z)?;
    let n = z.len();
    let roles = row_labels(n);
    Ok(GadgetInstance {
        kind: ReductionKind::ParityConn,
        n,
        graph: GadgetGraph::Single(g),
        roles,
        inputs: vec![("z".into(), z.to_hex())],
        expected: Expected::Connected(z.weight() % 2 == 1),
    })
}

fn row_labels(n: usize) -> Vec<String> {
    let mut roles: Vec<String> = (1..=n).map(|i| format!("t_{i}")).collect();
    roles.extend((1..=n).map(|i| format!("b_{i}")));
    roles
}

/// The parity graph with every position replaced by a two-party gadget: the
/// straight pair survives iff `x_i y_i = 0`, the crossed pair iff
/// `x_i y_i = 1`. Connected iff `IP(x, y) = 1`; `E_A` and `E_B` are disjoint.
///
/// Vertex ids (each block of `n`, offset `i − 1`): `t`, `b`, `k^tt`, `k^bb`,
/// `k^tb`, `k^bt`, `l^tt`, `l^bb`, `l^tb`, `l^bt`.
pub fn build_ip_connectivity(x: &BitVector, y: &BitVector) -> Result<GadgetInstance> {
    let n = x.len();
    require(n == y.len(), "x and y must have equal length")?;
    require(n >= 3, "ip-conn needs n >= 3")?;
    const BLOCKS: [&str; 10] = [
        "t", "b", "k^tt", "k^bb", "k^tb", "k^bt", "l^tt", "l^bb", "l^tb", "l^bt",
    ];
    let at = |block: usize, i: usize| block * n + i % n;
    let (t, b) = (0, 1);
    let (k_tt, k_bb, k_tb, k_bt) = (2, 3, 4, 5);
    let (l_tt, l_bb, l_tb, l_bt) = (6, 7, 8, 9);

    let mut s = EdgeSink::default();
    for i in 0..n {
        let (xi, yi) = (x.get(i), y.get(i));
        // straight gadgets: row -> row
        for (row, k, l) in [(t, k_tt, l_tt), (b, k_bb, l_bb)] {
            if !xi {
                s.alice(at(row, i), at(k, i));
            }
            if !yi {
                s.bob(at(row, i), at(l, i));
            }
            s.alice(at(k, i), at(row, i + 1));
            s.alice(at(l, i), at(row, i + 1));
        }
        // crossed gadgets: row -> other row
        for (from, to, k, l) in [(t, b, k_tb, l_tb), (b, t, k_bt, l_bt)] {
            if xi {
                s.alice(at(from, i), at(l, i));
            }
            s.alice(at(from, i), at(k, i));
            if yi {
                s.bob(at(l, i), at(to, i + 1));
            } else {
                s.bob(at(k, i), at(l, i));
            }
        }
    }
    let roles = BLOCKS
        .iter()
        .flat_map(|name| (1..=n).map(move |i| format!("{name}_{i}")))
        .collect();
    Ok(GadgetInstance {
        kind: ReductionKind::IpConn,
        n,
        graph: GadgetGraph::Split(s.partition(10 * n, true)?),
        roles,
        inputs: vec![("x".into(), x.to_hex()), ("y".into(), y.to_hex())],
        expected: Expected::Connected(inner_product(x, y)?),
    })
}
