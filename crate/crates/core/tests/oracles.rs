//! Library algorithms against the naive reference implementations in
//! `common`.

mod common;

use rand::Rng;

use commgraph::algo::linalg::{
    bareiss_determinant, det_integer, det_integer_in, field_determinant,
};
use commgraph::algo::matching::{has_perfect_matching_exact, hopcroft_karp_max_matching};
use commgraph::algo::{
    connected_components, euler_circuit, has_triangle, is_bipartite, is_connected, is_eulerian,
    two_coloring,
};
use commgraph::protocols::{run_protocol, Answer, ProtocolId};
use commgraph::random::{
    bipartite_gnp, derive_seed, gnp, random_even_graph, random_overlapping_split, rng_from_seed,
};
use commgraph::{BigDetInt, DiGraph, Graph, Matrix, ModP};

fn edges_of(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().map(|e| e.endpoints()).collect()
}

#[test]
fn bareiss_matches_permutation_expansion() {
    let mut rng = rng_from_seed(1);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=5);
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(0..2)).collect())
            .collect();
        let want = common::permutation_det(&rows);
        let m = Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| v as i128).collect())
                .collect(),
        )
        .unwrap();
        assert_eq!(bareiss_determinant(&m).unwrap(), want, "{rows:?}");
    }
}

#[test]
fn determinant_routes_agree() {
    let mut rng = rng_from_seed(2);
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let arcs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.4))
            .collect();
        let d = DiGraph::from_arcs(n, arcs).unwrap();
        let small = det_integer(&d).unwrap();
        let big: BigDetInt = det_integer_in(&d).unwrap();
        assert_eq!(BigDetInt::from(small), big);

        let modp = Matrix::from_fn(n, |i, j| ModP::new(d.has_arc(i, j) as u64));
        let want = ModP::new(small.rem_euclid(ModP::MODULUS as i128) as u64);
        assert_eq!(field_determinant(&modp), want);
    }
}

#[test]
fn wide_entries_use_big_integers() {
    // Bareiss intermediates reach 2^160 here although the result is 2^120
    let m = Matrix::from_fn(3, |i, j| if i == j { 1i128 << 40 } else { 0 });
    assert!(matches!(
        bareiss_determinant(&m),
        Err(commgraph::Error::Overflow)
    ));
    let big = Matrix::from_fn(3, |i, j| {
        if i == j {
            BigDetInt::from(1u64 << 40)
        } else {
            BigDetInt::from(0)
        }
    });
    assert_eq!(
        bareiss_determinant(&big).unwrap(),
        BigDetInt::from(1u8) << 120
    );
}

#[test]
fn hopcroft_karp_matches_brute_force_exhaustively_at_3_plus_3() {
    let pairs: Vec<(usize, usize)> = (0..3)
        .flat_map(|u| (0..3).map(move |v| (u, 3 + v)))
        .collect();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|p| *p.1)
            .collect();
        let g = Graph::from_edges(6, edges.iter().copied()).unwrap();
        let hk = hopcroft_karp_max_matching(&g, &[0, 1, 2]).unwrap();
        let want = common::brute_max_matching(6, &edges);
        assert_eq!(hk.matching.len(), want, "mask {mask:#x}");
        assert!(hk.matching.is_subgraph_of(&g));
        assert_eq!(has_perfect_matching_exact(&g).unwrap(), want == 3);
    }
}

#[test]
fn hopcroft_karp_matches_brute_force_sampled() {
    let mut rng = rng_from_seed(3);
    for _ in 0..2000 {
        let a = rng.gen_range(1..=6);
        let b = rng.gen_range(1..=6);
        let g = bipartite_gnp(a, b, rng.gen_range(0.1..0.7), &mut rng);
        let edges = edges_of(&g);
        let left: Vec<usize> = (0..a).collect();
        let hk = hopcroft_karp_max_matching(&g, &left).unwrap();
        let want = common::brute_max_matching(a + b, &edges);
        assert_eq!(hk.matching.len(), want, "{edges:?}");
        assert_eq!(has_perfect_matching_exact(&g).unwrap(), 2 * want == a + b);
    }
}

#[test]
fn exact_perfect_matching_on_general_graphs() {
    let mut rng = rng_from_seed(4);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let g = gnp(n, rng.gen_range(0.2..0.7), &mut rng);
        let want = 2 * common::brute_max_matching(n, &edges_of(&g)) == n;
        assert_eq!(has_perfect_matching_exact(&g).unwrap(), want);
    }
}

#[test]
fn euler_circuit_walks_every_edge_once() {
    let mut rng = rng_from_seed(5);
    for i in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = if i % 2 == 0 {
            random_even_graph(n, rng.gen_range(1..4), &mut rng)
        } else {
            gnp(n, rng.gen_range(0.1..0.6), &mut rng)
        };
        let edges = edges_of(&g);
        let euler = is_eulerian(&g);
        assert_eq!(euler, common::brute_eulerian(n, &edges), "{edges:?}");
        match euler_circuit(&g) {
            Some(walk) => {
                assert!(euler);
                assert_eq!(walk.len(), g.edge_count() + 1);
                assert_eq!(walk.first(), walk.last());
                let mut used: Vec<(usize, usize)> = walk
                    .windows(2)
                    .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                    .collect();
                used.sort_unstable();
                let mut want = edges.clone();
                want.sort_unstable();
                assert_eq!(used, want);
            }
            None => assert!(!euler),
        }
    }
}

#[test]
fn structural_predicates_match_references() {
    let mut rng = rng_from_seed(6);
    for _ in 0..2000 {
        let n = rng.gen_range(0..=14);
        let g = gnp(n, rng.gen_range(0.0..0.5), &mut rng);
        let edges = edges_of(&g);
        assert_eq!(
            connected_components(&g).count(),
            common::component_count(n, &edges)
        );
        assert_eq!(is_connected(&g), common::component_count(n, &edges) == 1);
        assert_eq!(has_triangle(&g), common::brute_triangle(n, &edges));
        assert_eq!(is_bipartite(&g), common::brute_bipartite(n, &edges));
        if let Some(color) = two_coloring(&g) {
            assert!(edges.iter().all(|&(u, v)| color[u] != color[v]));
        }
    }
}

#[test]
fn protocols_match_references() {
    for trial in 0..600u64 {
        let seed = derive_seed(12, trial);
        let mut rng = rng_from_seed(seed);
        let n = rng.gen_range(1..=12);
        let g = gnp(n, rng.gen_range(0.05..0.6), &mut rng);
        let inst = random_overlapping_split(&g, 0.25, &mut rng);
        let edges = edges_of(&g);
        for protocol in [
            ProtocolId::Connectivity,
            ProtocolId::Bipartite,
            ProtocolId::EulerTrivial,
            ProtocolId::Triangle,
            ProtocolId::SpanningForest,
        ] {
            let out = run_protocol(protocol, &inst, seed, None).unwrap().output;
            let want = match protocol {
                ProtocolId::Connectivity => Answer::Bool(common::component_count(n, &edges) == 1),
                ProtocolId::Bipartite => Answer::Bool(common::brute_bipartite(n, &edges)),
                ProtocolId::EulerTrivial => Answer::Bool(common::brute_eulerian(n, &edges)),
                ProtocolId::Triangle => Answer::Bool(common::brute_triangle(n, &edges)),
                _ => {
                    let Answer::Forest(forest) = &out else {
                        panic!("expected a forest")
                    };
                    let f: Vec<(usize, usize)> = forest.iter().map(|e| e.endpoints()).collect();
                    assert_eq!(
                        common::component_ids(n, &f),
                        common::component_ids(n, &edges)
                    );
                    assert_eq!(f.len(), n - common::component_count(n, &edges));
                    continue;
                }
            };
            assert_eq!(out, want, "{protocol} on {edges:?}");
        }
    }
}

#[test]
fn matching_protocol_matches_brute_force() {
    for trial in 0..300u64 {
        let seed = derive_seed(13, trial);
        let mut rng = rng_from_seed(seed);
        let a = rng.gen_range(1..=6);
        let b = rng.gen_range(1..=6);
        let g = bipartite_gnp(a, b, rng.gen_range(0.1..0.7), &mut rng);
        let inst = random_overlapping_split(&g, 0.25, &mut rng);
        let left: Vec<usize> = (0..a).collect();
        let out = run_protocol(ProtocolId::MatchingHk, &inst, seed, Some(&left)).unwrap();
        assert_eq!(
            out.output,
            Answer::Count(common::brute_max_matching(a + b, &edges_of(&g)))
        );
    }
}
