//! Connectivity: Alice sends, for every vertex in order, the minimum vertex of
//! its component in her own graph (`⌈log₂ n⌉` bits each). Bob merges those
//! components with his edges and replies with the 1-bit answer.
//!
//! Cost is exactly `n⌈log₂ n⌉ + 1` bits for `n >= 2`; a single vertex is
//! connected and costs nothing.

use crate::algo::connected_components;
use crate::comm::{ceil_log2, Bits, Message, Party, PartyView, Protocol, Role, Turn};
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

#[derive(Clone, Copy, Debug, Default)]
pub struct Connectivity;

impl Protocol for Connectivity {
    type Output = bool;
    type Party = ConnectivityParty;

    fn party(&self, view: PartyView) -> ConnectivityParty {
        ConnectivityParty {
            view,
            sent: false,
            output: None,
        }
    }
}

pub struct ConnectivityParty {
    view: PartyView,
    sent: bool,
    output: Option<bool>,
}

impl Party for ConnectivityParty {
    type Output = bool;

    fn turn(&mut self, inbox: &[Message]) -> Result<Turn> {
        let n = self.view.n_vertices;
        if self.output.is_some() {
            return Ok(Turn::Halt);
        }
        if n <= 1 {
            self.output = Some(n == 1);
            return Ok(Turn::Halt);
        }
        let w = ceil_log2(n);
        match (self.view.role, self.sent) {
            (Role::Alice, false) => {
                let comps = connected_components(&self.view.edges);
                let mut payload = Bits::new();
                for v in 0..n {
                    payload.push_uint(comps.representative(v), w);
                }
                self.sent = true;
                Ok(Turn::Send(payload))
            }
            (Role::Alice, true) => {
                let msg = single(inbox, Role::Bob)?;
                let mut r = msg.payload.reader(Role::Bob);
                self.output = Some(r.read_bit()?);
                r.finish()?;
                Ok(Turn::Halt)
            }
            (Role::Bob, _) => {
                let msg = single(inbox, Role::Alice)?;
                let mut r = msg.payload.reader(Role::Alice);
                let mut uf = UnionFind::new(n);
                for v in 0..n {
                    let rep = r.read_vertex(w, n)?;
                    uf.union(v, rep);
                }
                r.finish()?;
                for e in self.view.edges.edges() {
                    uf.union(e.u(), e.v());
                }
                let answer = uf.count() == 1;
                self.output = Some(answer);
                let mut payload = Bits::new();
                payload.push_bit(answer);
                Ok(Turn::Send(payload))
            }
        }
    }

    fn output(&self) -> Option<bool> {
        self.output
    }
}

/// Exactly one pending message from `from`.
pub(crate) fn single(inbox: &[Message], from: Role) -> Result<&Message> {
    match inbox {
        [m] => Ok(m),
        _ => Err(Error::protocol(
            from,
            format!("expected exactly one message, got {}", inbox.len()),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comm::{run, split_edges, SplitMode};
    use crate::graph::{EdgePartition, Graph};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    #[test]
    fn path_all_alice() {
        for n in [2, 3, 8, 16, 17] {
            let inst = split_edges(&path(n), &SplitMode::AllAlice, 0).unwrap();
            let out = run(&Connectivity, &inst, 0).unwrap();
            assert!(out.output);
            assert_eq!(out.bits(), n * ceil_log2(n) + 1);
            assert_eq!(out.rounds(), 2);
        }
    }

    #[test]
    fn empty_graph() {
        let inst = split_edges(&Graph::new(4), &SplitMode::AllAlice, 0).unwrap();
        let out = run(&Connectivity, &inst, 0).unwrap();
        assert!(!out.output);
        assert_eq!(out.bits(), 9);
    }

    #[test]
    fn two_triangles_any_split() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        for seed in 0..20 {
            let inst = split_edges(&g, &SplitMode::Random, seed).unwrap();
            assert!(!run(&Connectivity, &inst, seed).unwrap().output);
        }
    }

    #[test]
    fn needs_both_parties() {
        // Alice: 0-1, 2-3; Bob: 1-2
        let inst = EdgePartition::new(
            Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(),
            Graph::from_edges(4, [(1, 2)]).unwrap(),
            true,
        )
        .unwrap();
        assert!(run(&Connectivity, &inst, 0).unwrap().output);
    }

    #[test]
    fn single_vertex() {
        let inst = split_edges(&Graph::new(1), &SplitMode::AllAlice, 0).unwrap();
        let out = run(&Connectivity, &inst, 0).unwrap();
        assert!(out.output);
        assert_eq!(out.bits(), 0);
        let empty = split_edges(&Graph::new(0), &SplitMode::AllAlice, 0).unwrap();
        assert!(!run(&Connectivity, &empty, 0).unwrap().output);
    }
}
