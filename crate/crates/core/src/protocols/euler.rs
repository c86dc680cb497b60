//! Eulerian-circuit test by full disclosure: Alice sends her upper-triangular
//! adjacency bitmap, Bob answers with one bit. Cost `n(n−1)/2 + 1`.

use super::connectivity::single;
use crate::algo::is_eulerian;
use crate::comm::{Bits, Message, Party, PartyView, Protocol, Role, Turn};
use crate::error::Result;
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, Default)]
pub struct EulerTrivial;

impl Protocol for EulerTrivial {
    type Output = bool;
    type Party = EulerParty;

    fn party(&self, view: PartyView) -> EulerParty {
        EulerParty {
            view,
            sent: false,
            output: None,
        }
    }
}

pub struct EulerParty {
    view: PartyView,
    sent: bool,
    output: Option<bool>,
}

/// Upper-triangular bitmap in canonical pair order.
pub(crate) fn adjacency_bitmap(g: &Graph) -> Bits {
    let n = g.n_vertices();
    let mut b = Bits::new();
    for u in 0..n {
        for v in u + 1..n {
            b.push_bit(g.has_edge(u, v));
        }
    }
    b
}

pub(crate) fn read_bitmap(msg: &Message, n: usize) -> Result<Vec<Edge>> {
    let mut r = msg.payload.reader(msg.sender);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.read_bit()? {
                edges.push(Edge::new(u, v));
            }
        }
    }
    r.finish()?;
    Ok(edges)
}

impl Party for EulerParty {
    type Output = bool;

    fn turn(&mut self, inbox: &[Message]) -> Result<Turn> {
        let n = self.view.n_vertices;
        if self.output.is_some() {
            return Ok(Turn::Halt);
        }
        if n < 2 {
            self.output = Some(false);
            return Ok(Turn::Halt);
        }
        match (self.view.role, self.sent) {
            (Role::Alice, false) => {
                self.sent = true;
                Ok(Turn::Send(adjacency_bitmap(&self.view.edges)))
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
                let mut union = self.view.edges.clone();
                for e in read_bitmap(msg, n)? {
                    union.insert(e)?;
                }
                let answer = is_eulerian(&union);
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
