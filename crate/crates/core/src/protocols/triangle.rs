//! Triangle detection by candidate-pair exchange.
//!
//! 1. Alice announces (1 bit) whether her own edges contain a triangle; if not,
//!    Bob does the same.
//! 2. Alice sends the bitmap of pairs that two of her edges would close into a
//!    triangle. Bob replies 1 if one of those pairs is his edge.
//! 3. Otherwise Bob appends his own candidate bitmap to that reply and Alice
//!    answers with the final bit.
//!
//! A triangle with two edges on one side is caught in step 2 or 3; one with
//! all three on one side in step 1. Cost at most `n(n−1) + 4`.

use super::connectivity::single;
use super::euler::read_bitmap;
use crate::algo::has_triangle;
use crate::comm::{Bits, Message, Party, PartyView, Protocol, Role, Turn};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, Default)]
pub struct TriangleProtocol;

impl Protocol for TriangleProtocol {
    type Output = bool;
    type Party = TriangleParty;

    fn party(&self, view: PartyView) -> TriangleParty {
        TriangleParty {
            view,
            step: 0,
            output: None,
        }
    }
}

pub struct TriangleParty {
    view: PartyView,
    step: u8,
    output: Option<bool>,
}

/// Pairs `{a, b}` with a common neighbor in `g`, as an upper-triangular bitmap.
fn closing_pairs(g: &Graph) -> Bits {
    let n = g.n_vertices();
    let adj = g.adjacency();
    let mut closes = vec![false; n * n];
    for nbrs in &adj {
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                closes[a * n + b] = true;
            }
        }
    }
    let mut bits = Bits::new();
    for a in 0..n {
        for b in a + 1..n {
            bits.push_bit(closes[a * n + b]);
        }
    }
    bits
}

fn one_bit(bit: bool) -> Bits {
    let mut b = Bits::new();
    b.push_bit(bit);
    b
}

fn read_one(msg: &Message) -> Result<bool> {
    let mut r = msg.payload.reader(msg.sender);
    let bit = r.read_bit()?;
    r.finish()?;
    Ok(bit)
}

impl TriangleParty {
    fn hits_own_edge(&self, msg_bitmap: &Message) -> Result<bool> {
        let n = self.view.n_vertices;
        Ok(read_bitmap(msg_bitmap, n)?
            .into_iter()
            .any(|e| self.view.edges.has_edge(e.u(), e.v())))
    }

    fn finish(&mut self, answer: bool) -> Result<Turn> {
        self.output = Some(answer);
        Ok(Turn::Halt)
    }

    fn alice(&mut self, inbox: &[Message]) -> Result<Turn> {
        match self.step {
            0 => {
                self.step = 1;
                let local = has_triangle(&self.view.edges);
                if local {
                    self.output = Some(true);
                }
                Ok(Turn::Send(one_bit(local)))
            }
            1 => {
                if read_one(single(inbox, Role::Bob)?)? {
                    return self.finish(true);
                }
                self.step = 2;
                Ok(Turn::Send(closing_pairs(&self.view.edges)))
            }
            2 => {
                let msg = single(inbox, Role::Bob)?;
                let bits = msg.payload.as_slice();
                match bits.split_first() {
                    Some((true, [])) => self.finish(true),
                    Some((false, rest)) => {
                        let mut tail = Bits::new();
                        for &b in rest {
                            tail.push_bit(b);
                        }
                        let tail = Message {
                            sender: Role::Bob,
                            payload: tail,
                        };
                        let hit = self.hits_own_edge(&tail)?;
                        self.output = Some(hit);
                        self.step = 3;
                        Ok(Turn::Send(one_bit(hit)))
                    }
                    _ => Err(Error::protocol(Role::Bob, "malformed reply")),
                }
            }
            _ => Ok(Turn::Halt),
        }
    }

    fn bob(&mut self, inbox: &[Message]) -> Result<Turn> {
        match self.step {
            0 => {
                if read_one(single(inbox, Role::Alice)?)? {
                    return self.finish(true);
                }
                self.step = 1;
                let local = has_triangle(&self.view.edges);
                if local {
                    self.output = Some(true);
                }
                Ok(Turn::Send(one_bit(local)))
            }
            1 => {
                let hit = self.hits_own_edge(single(inbox, Role::Alice)?)?;
                self.step = 2;
                let mut reply = one_bit(hit);
                if hit {
                    self.output = Some(true);
                } else {
                    reply.extend(&closing_pairs(&self.view.edges));
                }
                Ok(Turn::Send(reply))
            }
            2 => {
                let answer = read_one(single(inbox, Role::Alice)?)?;
                self.finish(answer)
            }
            _ => Ok(Turn::Halt),
        }
    }
}

impl Party for TriangleParty {
    type Output = bool;

    fn turn(&mut self, inbox: &[Message]) -> Result<Turn> {
        if self.output.is_some() {
            return Ok(Turn::Halt);
        }
        if self.view.n_vertices < 3 {
            return self.finish(false);
        }
        match self.view.role {
            Role::Alice => self.alice(inbox),
            Role::Bob => self.bob(inbox),
        }
    }

    fn output(&self) -> Option<bool> {
        self.output
    }
}
