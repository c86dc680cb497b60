//! Property tests over random graphs and edge splits.

use proptest::prelude::*;

use commgraph::algo::connected_components;
use commgraph::comm::Role;
use commgraph::io::{parse_graph, parse_partition, write_graph, write_partition};
use commgraph::protocols::{run_protocol, Answer, ProtocolId};
use commgraph::union_find::UnionFind;
use commgraph::{Edge, EdgePartition, Graph, Owner};

fn owner(code: u8) -> Owner {
    match code % 3 {
        0 => Owner::Alice,
        1 => Owner::Bob,
        _ => Owner::Both,
    }
}

/// A graph on up to 14 vertices with each edge tagged by its owner.
fn owned_graph() -> impl Strategy<Value = (usize, Vec<(Edge, Owner)>)> {
    (1usize..=14).prop_flat_map(|n| {
        let pairs = prop::collection::vec((0..n, 0..n, any::<u8>()), 0..3 * n);
        (Just(n), pairs).prop_map(|(n, raw)| {
            let mut seen = std::collections::BTreeSet::new();
            let owned = raw
                .into_iter()
                .filter(|&(a, b, _)| a != b)
                .map(|(a, b, o)| (Edge::new(a, b), owner(o)))
                .filter(|(e, _)| seen.insert(*e))
                .collect();
            (n, owned)
        })
    })
}

/// Bipartite graph with left side `0..a`, plus its owner tags.
fn owned_bipartite() -> impl Strategy<Value = (usize, usize, Vec<(Edge, Owner)>)> {
    (1usize..=7, 1usize..=7).prop_flat_map(|(a, b)| {
        let cells = prop::collection::vec(prop::option::of(any::<u8>()), a * b);
        (Just(a), Just(b), cells).prop_map(|(a, b, cells)| {
            let owned = cells
                .into_iter()
                .enumerate()
                .filter_map(|(i, c)| c.map(|o| (Edge::new(i / b, a + i % b), owner(o))))
                .collect();
            (a, b, owned)
        })
    })
}

fn partition(n: usize, owned: &[(Edge, Owner)]) -> EdgePartition {
    EdgePartition::from_owned_edges(n, owned.iter().copied(), false).unwrap()
}

fn left_for(protocol: ProtocolId, a: usize) -> Option<Vec<usize>> {
    (protocol == ProtocolId::MatchingHk).then(|| (0..a).collect())
}

fn instance(
    protocol: ProtocolId,
    g: &(usize, Vec<(Edge, Owner)>),
    bip: &(usize, usize, Vec<(Edge, Owner)>),
) -> (EdgePartition, Option<Vec<usize>>) {
    if protocol == ProtocolId::MatchingHk {
        (partition(bip.0 + bip.1, &bip.2), left_for(protocol, bip.0))
    } else {
        (partition(g.0, &g.1), None)
    }
}

fn any_protocol() -> impl Strategy<Value = ProtocolId> {
    prop::sample::select(ProtocolId::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph_text_roundtrips((n, owned) in owned_graph()) {
        let g = Graph::from_edges(n, owned.iter().map(|(e, _)| e.endpoints())).unwrap();
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn partition_text_roundtrips((n, owned) in owned_graph()) {
        let p = partition(n, &owned);
        let back = parse_partition(&write_partition(&p)).unwrap();
        prop_assert_eq!(back.alice(), p.alice());
        prop_assert_eq!(back.bob(), p.bob());
    }

    #[test]
    fn union_find_merge_matches_components((n, owned) in owned_graph()) {
        let p = partition(n, &owned);
        // Alice's components, then Bob's edges merged on top
        let alice = connected_components(p.alice());
        let mut uf = UnionFind::new(n);
        for v in 0..n {
            uf.union(v, alice.representative(v));
        }
        for e in p.bob().edges() {
            uf.union(e.u(), e.v());
        }
        let whole = connected_components(&p.union());
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(uf.find(u) == uf.find(v), whole.representative(u) == whole.representative(v));
            }
        }
    }

    #[test]
    fn output_ignores_how_edges_are_split(
        protocol in any_protocol(),
        g in owned_graph(),
        bip in owned_bipartite(),
        shift in any::<u8>(),
        seed in any::<u64>(),
    ) {
        let (inst, left) = instance(protocol, &g, &bip);
        let reshuffled: Vec<(Edge, Owner)> = inst
            .owned_edges()
            .into_iter()
            .enumerate()
            .map(|(i, (e, _))| (e, owner(shift.wrapping_add(i as u8))))
            .collect();
        let other = partition(inst.n_vertices(), &reshuffled);
        let a = run_protocol(protocol, &inst, seed, left.as_deref()).unwrap();
        let b = run_protocol(protocol, &other, seed, left.as_deref()).unwrap();
        match (&a.output, &b.output) {
            // any spanning forest will do; compare what it spans
            (Answer::Forest(fa), Answer::Forest(fb)) => {
                prop_assert_eq!(fa.len(), fb.len());
                let spans = |f: &[Edge]| {
                    let g = Graph::from_edges(inst.n_vertices(), f.iter().map(|e| e.endpoints())).unwrap();
                    connected_components(&g).labels().to_vec()
                };
                prop_assert_eq!(spans(fa), spans(fb));
            }
            _ => prop_assert_eq!(a.output, b.output),
        }
    }

    #[test]
    fn first_message_depends_only_on_alice(
        protocol in any_protocol(),
        g in owned_graph(),
        bip in owned_bipartite(),
        seed in any::<u64>(),
    ) {
        let (inst, left) = instance(protocol, &g, &bip);
        let n = inst.n_vertices();
        let bob_free = EdgePartition::new(inst.alice().clone(), Graph::new(n), false).unwrap();
        let a = run_protocol(protocol, &inst, seed, left.as_deref()).unwrap();
        let b = run_protocol(protocol, &bob_free, seed, left.as_deref()).unwrap();
        let first = |o: &commgraph::ProtocolOutcome<_>| o.transcript.messages().first().cloned();
        let (fa, fb) = (first(&a), first(&b));
        if let (Some(fa), Some(fb)) = (&fa, &fb) {
            prop_assert_eq!(fa.sender, Role::Alice);
            prop_assert_eq!(fa, fb);
        } else {
            // Alice halted at once, so she did so in both runs
            prop_assert_eq!(fa.is_none(), fb.is_none());
        }
    }

    #[test]
    fn runs_are_deterministic(protocol in any_protocol(), g in owned_graph(), bip in owned_bipartite(), seed in any::<u64>()) {
        let (inst, left) = instance(protocol, &g, &bip);
        let a = run_protocol(protocol, &inst, seed, left.as_deref()).unwrap();
        let b = run_protocol(protocol, &inst, seed, left.as_deref()).unwrap();
        prop_assert_eq!(a.transcript.dump(&a.output), b.transcript.dump(&b.output));
    }

    #[test]
    fn cost_is_payload_bits_and_rounds_are_sender_runs(
        protocol in any_protocol(),
        g in owned_graph(),
        bip in owned_bipartite(),
        seed in any::<u64>(),
    ) {
        let (inst, left) = instance(protocol, &g, &bip);
        let out = run_protocol(protocol, &inst, seed, left.as_deref()).unwrap();
        let msgs = out.transcript.messages();
        prop_assert!(msgs.iter().all(|m| !m.payload.is_empty()));
        prop_assert_eq!(out.bits(), msgs.iter().map(|m| m.payload.len()).sum::<usize>());
        let runs = msgs.iter().enumerate().filter(|(i, m)| *i == 0 || msgs[i - 1].sender != m.sender).count();
        prop_assert_eq!(out.rounds(), runs);
    }
}
