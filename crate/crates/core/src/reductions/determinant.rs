use super::{require, Expected, GadgetGraph, GadgetInstance, ReductionKind};
use crate::bits::BitMatrix;
use crate::error::Result;
use crate::graph::{ArcPartition, DiGraph};

/// Largest matrix side accepted by the determinant builders.
pub const DET_GADGET_MAX: usize = 6;

/// Direction of the arcs between the right vertices and the sink `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RightArcs {
    /// `(r_i, t)`: every cycle cover through `s` closes, det = −(#ones).
    #[default]
    IntoSink,
    /// `(t, r_i)`: no cycle cover can use `s`, det is always 0.
    OutOfSink,
}

fn vertex_ids(
    n: usize,
) -> (
    usize,
    impl Fn(usize) -> usize,
    usize,
    impl Fn(usize) -> usize,
) {
    (0, |i: usize| 1 + i, n + 1, move |i: usize| n + 2 + i)
}

fn roles(n: usize) -> Vec<String> {
    let mut r = vec!["s".to_string()];
    r.extend((1..=n).map(|i| format!("l_{i}")));
    r.push("t".into());
    r.extend((1..=n).map(|i| format!("r_{i}")));
    r
}

/// Digraph on `s, l_1..l_n, t, r_1..r_n` (ids `0, 1..=n, n+1, n+2..=2n+1`)
/// whose adjacency determinant is `−|Z|`.
pub fn parity_determinant_graph(z: &BitMatrix) -> Result<DiGraph> {
    let n = z.dim();
    require(
        (1..=DET_GADGET_MAX).contains(&n),
        format!("matrix side must be 1..={DET_GADGET_MAX}"),
    )?;
    let (s, l, t, r) = vertex_ids(n);
    let mut d = DiGraph::new(2 * n + 2);
    d.add_arc(t, s)?;
    for i in 0..n {
        d.add_arc(s, l(i))?;
        d.add_arc(r(i), t)?;
        d.add_arc(l(i), l(i))?;
        d.add_arc(r(i), r(i))?;
        for j in 0..n {
            if z.get(i, j) {
                d.add_arc(l(i), r(j))?;
            }
        }
    }
    Ok(d)
}

pub fn build_parity_determinant(z: &BitMatrix) -> Result<GadgetInstance> {
    let n = z.dim();
    Ok(GadgetInstance {
        kind: ReductionKind::ParityDet,
        n,
        graph: GadgetGraph::Directed(parity_determinant_graph(z)?),
        roles: roles(n),
        inputs: vec![("z".into(), z.flat().to_hex())],
        expected: Expected::Determinant(-(z.weight() as i128)),
    })
}

/// Two-party version: Alice holds `(s, l_i)`, the left loops, `(t, s)` and
/// `(l_i, r_j)` wherever `X(i, j) = 0`; Bob holds the right arcs, the right
/// loops and `(l_i, r_j)` wherever `Y(i, j) = 0`. The union encodes the matrix
/// `¬(X ∧ Y)`, so with [`RightArcs::IntoSink`] det = −(n² − |X ∧ Y|).
pub fn build_det_instance(
    x: &BitMatrix,
    y: &BitMatrix,
    right: RightArcs,
) -> Result<GadgetInstance> {
    let n = x.dim();
    require(n == y.dim(), "X and Y must have the same shape")?;
    require(
        (1..=DET_GADGET_MAX).contains(&n),
        format!("matrix side must be 1..={DET_GADGET_MAX}"),
    )?;
    let (s, l, t, r) = vertex_ids(n);
    let mut alice = DiGraph::new(2 * n + 2);
    let mut bob = DiGraph::new(2 * n + 2);
    alice.add_arc(t, s)?;
    for i in 0..n {
        alice.add_arc(s, l(i))?;
        alice.add_arc(l(i), l(i))?;
        match right {
            RightArcs::IntoSink => bob.add_arc(r(i), t)?,
            RightArcs::OutOfSink => bob.add_arc(t, r(i))?,
        };
        bob.add_arc(r(i), r(i))?;
        for j in 0..n {
            if !x.get(i, j) {
                alice.add_arc(l(i), r(j))?;
            }
            if !y.get(i, j) {
                bob.add_arc(l(i), r(j))?;
            }
        }
    }
    let ones = x.and(y)?.weight() as i128;
    let expected = match right {
        RightArcs::IntoSink => -((n * n) as i128 - ones),
        RightArcs::OutOfSink => 0,
    };
    Ok(GadgetInstance {
        kind: ReductionKind::DetIp,
        n,
        graph: GadgetGraph::SplitDirected(ArcPartition { alice, bob }),
        roles: roles(n),
        inputs: vec![
            ("x".into(), x.flat().to_hex()),
            ("y".into(), y.flat().to_hex()),
        ],
        expected: Expected::Determinant(expected),
    })
}
