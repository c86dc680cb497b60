use super::{require, EdgeSink, Expected, GadgetGraph, GadgetInstance, ReductionKind};
use crate::bits::BitMatrix;
use crate::error::Result;
use crate::graph::EdgePartition;

/// Vertex ids: `l_0..l_{n+1}` = `0..=n+1`, `r_0..r_{n+1}` = `n+2..=2n+3`,
/// `m_1..m_n` = `2n+4..=3n+3`.
struct Layout {
    n: usize,
}

impl Layout {
    fn l(&self, i: usize) -> usize {
        i
    }

    fn r(&self, i: usize) -> usize {
        self.n + 2 + i
    }

    /// `j` is 1-based.
    fn m(&self, j: usize) -> usize {
        2 * self.n + 3 + j
    }

    fn roles(&self) -> Vec<String> {
        let n = self.n;
        let mut out: Vec<String> = (0..=n + 1).map(|i| format!("l_{i}")).collect();
        out.extend((0..=n + 1).map(|i| format!("r_{i}")));
        out.extend((1..=n).map(|j| format!("m_{j}")));
        out
    }

    /// Three paths tied together at both ends; every degree is even.
    fn fixed_edges(&self, sink: &mut EdgeSink) {
        let n = self.n;
        for i in 0..=n {
            sink.alice(self.l(i), self.l(i + 1));
            sink.alice(self.r(i), self.r(i + 1));
        }
        for j in 1..n {
            sink.alice(self.m(j), self.m(j + 1));
        }
        sink.alice(self.l(0), self.m(1));
        sink.alice(self.r(0), self.m(1));
        sink.alice(self.l(n + 1), self.m(n));
        sink.alice(self.r(n + 1), self.m(n));
        sink.alice(self.m(1), self.m(n));
    }
}

/// Eulerian iff every row of `z` has even weight. Row `i` adds
/// `{l_i, m_j}` and `{r_i, m_j}` for each `z(i, j) = 1`.
pub fn build_or_ip_euler_query(z: &BitMatrix) -> Result<GadgetInstance> {
    let n = z.dim();
    require(n >= 3, "or-ip-euler needs n >= 3")?;
    let lay = Layout { n };
    let mut sink = EdgeSink::default();
    lay.fixed_edges(&mut sink);
    for i in 1..=n {
        for j in 1..=n {
            if z.get(i - 1, j - 1) {
                sink.alice(lay.l(i), lay.m(j));
                sink.alice(lay.r(i), lay.m(j));
            }
        }
    }
    let p = sink.partition(3 * n + 4, false)?;
    let all_even = (0..n).all(|i| (0..n).filter(|&j| z.get(i, j)).count() % 2 == 0);
    Ok(GadgetInstance {
        kind: ReductionKind::OrIpEuler,
        n,
        graph: GadgetGraph::Single(p.alice().clone()),
        roles: lay.roles(),
        inputs: vec![("z".into(), z.flat().to_hex())],
        expected: Expected::Eulerian(all_even),
    })
}

/// Alice puts the pair for `(i, j)` in `E_A` when `x(i, j) = 0`, Bob puts it
/// in `E_B` when `y(i, j) = 0`; fixed edges belong to Alice. For even `n`,
/// `l_i` has odd degree iff `IP(x^i, y^i) = 1`.
pub fn build_or_ip_euler_comm(x: &BitMatrix, y: &BitMatrix) -> Result<GadgetInstance> {
    let n = x.dim();
    require(n == y.dim(), "x and y must have the same shape")?;
    require(
        n >= 4 && n.is_multiple_of(2),
        "or-ip-euler-comm needs even n >= 4",
    )?;
    let lay = Layout { n };
    let mut sink = EdgeSink::default();
    lay.fixed_edges(&mut sink);
    for i in 1..=n {
        for j in 1..=n {
            if !x.get(i - 1, j - 1) {
                sink.alice(lay.l(i), lay.m(j));
                sink.alice(lay.r(i), lay.m(j));
            }
            if !y.get(i - 1, j - 1) {
                sink.bob(lay.l(i), lay.m(j));
                sink.bob(lay.r(i), lay.m(j));
            }
        }
    }
    let p: EdgePartition = sink.partition(3 * n + 4, false)?;
    let both = x.and(y)?;
    let no_odd_ip = (0..n).all(|i| (0..n).filter(|&j| both.get(i, j)).count() % 2 == 0);
    Ok(GadgetInstance {
        kind: ReductionKind::OrIpEulerComm,
        n,
        graph: GadgetGraph::Split(p),
        roles: lay.roles(),
        inputs: vec![
            ("x".into(), x.flat().to_hex()),
            ("y".into(), y.flat().to_hex()),
        ],
        expected: Expected::Eulerian(no_odd_ip),
    })
}
