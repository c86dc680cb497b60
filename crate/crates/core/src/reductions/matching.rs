use super::{require, EdgeSink, Expected, GadgetGraph, GadgetInstance, ReductionKind};
use crate::bits::{inner_product, BitVector};
use crate::error::Result;

/// How the straight edges `{t_i, t_{i+1}}`, `{b_i, b_{i+1}}` are shared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatchVariant {
    /// Both parties may hold the same straight edge.
    #[default]
    Overlap,
    /// Each straight edge becomes a path through two fresh vertices `u, v`;
    /// `E_A` and `E_B` are disjoint.
    Disjoint,
}

impl MatchVariant {
    pub fn name(self) -> &'static str {
        match self {
            MatchVariant::Overlap => "overlap",
            MatchVariant::Disjoint => "disjoint",
        }
    }
}

impl std::str::FromStr for MatchVariant {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "overlap" => Ok(MatchVariant::Overlap),
            "disjoint" => Ok(MatchVariant::Disjoint),
            _ => Err(crate::error::Error::InvalidParameter(format!(
                "unknown variant {s:?}"
            ))),
        }
    }
}

/// Perfect matching exists iff `IP(x, y) = 1`, for odd `n`.
///
/// Vertex ids (blocks of `n`): `t`, `b`, `k^t`, `k^b`, `l^t`, `l^b`; the
/// disjoint variant appends `u^t`, `v^t`, `u^b`, `v^b`.
pub fn build_ip_matching(
    x: &BitVector,
    y: &BitVector,
    variant: MatchVariant,
) -> Result<GadgetInstance> {
    let n = x.len();
    require(n == y.len(), "x and y must have equal length")?;
    require(n >= 3 && n % 2 == 1, "ip-match needs odd n >= 3")?;
    let mut blocks = vec!["t", "b", "k^t", "k^b", "l^t", "l^b"];
    if variant == MatchVariant::Disjoint {
        blocks.extend(["u^t", "v^t", "u^b", "v^b"]);
    }
    let at = |block: usize, i: usize| block * n + i % n;
    let (t, b, k_t, k_b, l_t, l_b) = (0, 1, 2, 3, 4, 5);
    let (u_t, v_t, u_b, v_b) = (6, 7, 8, 9);

    let mut s = EdgeSink::default();
    for i in 0..n {
        let (xi, yi) = (x.get(i), y.get(i));
        s.alice(at(k_t, i), at(l_b, i));
        s.alice(at(k_b, i), at(l_t, i));
        if xi {
            s.alice(at(t, i), at(k_t, i));
            s.alice(at(b, i), at(k_b, i));
        }
        if yi {
            s.bob(at(t, i + 1), at(l_t, i));
            s.bob(at(b, i + 1), at(l_b, i));
        }
        match variant {
            MatchVariant::Overlap => {
                for row in [t, b] {
                    if !xi {
                        s.alice(at(row, i), at(row, i + 1));
                    }
                    if !yi {
                        s.bob(at(row, i), at(row, i + 1));
                    }
                }
            }
            MatchVariant::Disjoint => {
                for (row, u, v) in [(t, u_t, v_t), (b, u_b, v_b)] {
                    s.alice(at(u, i), at(v, i));
                    if !xi {
                        s.alice(at(row, i), at(u, i));
                        s.alice(at(v, i), at(row, i + 1));
                    }
                    if !yi {
                        s.bob(at(row, i), at(v, i));
                        s.bob(at(u, i), at(row, i + 1));
                    }
                }
            }
        }
    }
    let roles = blocks
        .iter()
        .flat_map(|name| (1..=n).map(move |i| format!("{name}_{i}")))
        .collect();
    let disjoint = variant == MatchVariant::Disjoint;
    Ok(GadgetInstance {
        kind: ReductionKind::IpMatch,
        n,
        graph: GadgetGraph::Split(s.partition(blocks.len() * n, disjoint)?),
        roles,
        inputs: vec![("x".into(), x.to_hex()), ("y".into(), y.to_hex())],
        expected: Expected::PerfectMatching(inner_product(x, y)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algo::matching::has_perfect_matching_exact;

    fn union_pm(inst: &GadgetInstance) -> bool {
        let GadgetGraph::Split(p) = &inst.graph else {
            unreachable!()
        };
        has_perfect_matching_exact(&p.union()).unwrap()
    }

    #[test]
    fn examples() {
        let zero = BitVector::zeros(3);
        let one = BitVector::from_bools(vec![true, false, false]);
        for variant in [MatchVariant::Overlap, MatchVariant::Disjoint] {
            assert!(!union_pm(
                &build_ip_matching(&zero, &zero, variant).unwrap()
            ));
            assert!(union_pm(&build_ip_matching(&one, &one, variant).unwrap()));
        }
        let inst = build_ip_matching(&zero, &zero, MatchVariant::Overlap).unwrap();
        let GadgetGraph::Split(p) = &inst.graph else {
            unreachable!()
        };
        assert_eq!(p.n_vertices(), 18);
        assert_eq!(p.overlap_count(), 6);
        assert_eq!(
            build_ip_matching(&zero, &zero, MatchVariant::Disjoint)
                .unwrap()
                .graph
                .n_vertices(),
            30
        );
    }

    #[test]
    fn rejects_even_n() {
        let z = BitVector::zeros(4);
        assert!(build_ip_matching(&z, &z, MatchVariant::Overlap).is_err());
    }
}
