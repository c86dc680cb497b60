//! Bipartiteness by alternating 2-coloring.
//!
//! Each message is a list of `(vertex, color)` pairs (`⌈log₂ n⌉ + 1` bits each)
//! followed by one token bit, `1` meaning a conflict was found. The active
//! party extends the coloring through its own edges as far as it can, checks
//! its own edges for a monochromatic pair and yields. Two consecutive messages
//! with no pairs close the current component; the lowest uncolored vertex is
//! then colored red by both parties without communication.

use std::collections::VecDeque;

use crate::comm::{ceil_log2, BitReader, Bits, Message, Party, PartyView, Protocol, Turn};
use crate::error::{Error, Result};

const RED: bool = false;

#[derive(Clone, Copy, Debug, Default)]
pub struct Bipartiteness;

impl Protocol for Bipartiteness {
    type Output = bool;
    type Party = ColorParty;

    fn party(&self, view: PartyView) -> ColorParty {
        let n = view.n_vertices;
        let mut state = ColorState {
            n,
            width: ceil_log2(n),
            color: vec![None; n],
            quiet: 0,
            result: None,
        };
        state.seed();
        ColorParty {
            adj: view.edges.adjacency(),
            edges: view.edges.edges().map(|e| e.endpoints()).collect(),
            state,
        }
    }
}

struct ColorState {
    n: usize,
    width: usize,
    color: Vec<Option<bool>>,
    /// Consecutive messages carrying no pairs.
    quiet: usize,
    result: Option<bool>,
}

impl ColorState {
    fn seed(&mut self) {
        match (0..self.n).find(|&v| self.color[v].is_none()) {
            Some(v) => {
                self.color[v] = Some(RED);
                self.quiet = 0;
            }
            None => self.result = Some(true),
        }
    }

    fn decode(&self, mut r: BitReader<'_>) -> Result<(Vec<(usize, bool)>, bool)> {
        let sender = r.sender();
        let pair_bits = self.width + 1;
        let body = r
            .remaining()
            .checked_sub(1)
            .ok_or_else(|| Error::protocol(sender, "empty message"))?;
        if body % pair_bits != 0 {
            return Err(Error::protocol(sender, "malformed color list"));
        }
        let mut pairs = Vec::with_capacity(body / pair_bits);
        for _ in 0..body / pair_bits {
            let v = r.read_vertex(self.width, self.n)?;
            pairs.push((v, r.read_bit()?));
        }
        let conflict = r.read_bit()?;
        r.finish()?;
        Ok((pairs, conflict))
    }

    /// Bookkeeping after any message, sent or received.
    fn close_message(&mut self, had_pairs: bool, conflict: bool) {
        if conflict {
            self.result = Some(false);
            return;
        }
        if had_pairs {
            self.quiet = 0;
        } else {
            self.quiet += 1;
            if self.quiet >= 2 {
                self.seed();
            }
        }
    }
}

pub struct ColorParty {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    state: ColorState,
}

impl ColorParty {
    /// Colors everything reachable through own edges from colored vertices.
    fn propagate(&mut self) -> Vec<(usize, bool)> {
        let color = &mut self.state.color;
        let mut queue: VecDeque<usize> =
            (0..self.state.n).filter(|&v| color[v].is_some()).collect();
        let mut fresh = Vec::new();
        while let Some(v) = queue.pop_front() {
            let c = color[v].expect("queued vertices are colored");
            for &w in &self.adj[v] {
                if color[w].is_none() {
                    color[w] = Some(!c);
                    fresh.push((w, !c));
                    queue.push_back(w);
                }
            }
        }
        fresh.sort_unstable();
        fresh
    }

    fn has_conflict(&self) -> bool {
        let color = &self.state.color;
        self.edges
            .iter()
            .any(|&(u, v)| matches!((color[u], color[v]), (Some(a), Some(b)) if a == b))
    }
}

impl Party for ColorParty {
    type Output = bool;

    fn turn(&mut self, inbox: &[Message]) -> Result<Turn> {
        for msg in inbox {
            let (pairs, conflict) = self.state.decode(msg.payload.reader(msg.sender))?;
            for &(v, c) in &pairs {
                if self.state.color[v].is_some() {
                    return Err(Error::protocol(
                        msg.sender,
                        format!("vertex {v} colored twice"),
                    ));
                }
                self.state.color[v] = Some(c);
            }
            self.state.close_message(!pairs.is_empty(), conflict);
        }
        if self.state.result.is_some() {
            return Ok(Turn::Halt);
        }
        let fresh = self.propagate();
        let conflict = self.has_conflict();
        let mut payload = Bits::new();
        for &(v, c) in &fresh {
            payload.push_uint(v, self.state.width);
            payload.push_bit(c);
        }
        payload.push_bit(conflict);
        self.state.close_message(!fresh.is_empty(), conflict);
        Ok(Turn::Send(payload))
    }

    fn output(&self) -> Option<bool> {
        self.state.result
    }
}

/// Replays a bipartiteness transcript and returns every announced vertex in
/// order. Fails if a vertex is announced twice.
pub fn announced_vertices(n: usize, messages: &[Message]) -> Result<Vec<usize>> {
    let mut state = ColorState {
        n,
        width: ceil_log2(n),
        color: vec![None; n],
        quiet: 0,
        result: None,
    };
    state.seed();
    let mut out = Vec::new();
    for msg in messages {
        let (pairs, conflict) = state.decode(msg.payload.reader(msg.sender))?;
        for &(v, c) in &pairs {
            if state.color[v].is_some() {
                return Err(Error::protocol(
                    msg.sender,
                    format!("vertex {v} announced twice"),
                ));
            }
            state.color[v] = Some(c);
            out.push(v);
        }
        state.close_message(!pairs.is_empty(), conflict);
    }
    Ok(out)
}
