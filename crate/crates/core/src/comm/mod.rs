//! Lockstep runtime for two-party protocols over an [`EdgePartition`].
//!
//! Each party is a state machine that only ever sees its own edge set (via
//! [`PartyView`]) and the messages the other party sent. Alice takes the first
//! turn, turns alternate, and every turn emits exactly one non-empty message or
//! halts. Once a party halts the other keeps the floor until it halts too.
//!
//! Costs are payload bits only; message boundaries are visible to the receiver,
//! so protocols frame their payloads with fixed-width fields and need no length
//! prefixes.

mod split;

pub use split::{split_edges, SplitMode};

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::graph::{EdgePartition, Graph};
use crate::random::derive_seed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Alice,
    Bob,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Alice => Role::Bob,
            Role::Bob => Role::Alice,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Role::Alice => 'A',
            Role::Bob => 'B',
        }
    }
}

/// `⌈log₂ n⌉`, the width of a vertex id among `n` vertices (0 for `n <= 1`).
pub fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Bit string with an explicit length.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bits {
    bits: Vec<bool>,
}

impl Bits {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn push_bit(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    /// Appends `value` as a `width`-bit big-endian field.
    pub fn push_uint(&mut self, value: usize, width: usize) {
        debug_assert!(
            width >= usize::BITS as usize || value >> width == 0,
            "{value} exceeds {width} bits"
        );
        for k in (0..width).rev() {
            self.bits.push((value >> k) & 1 == 1);
        }
    }

    pub fn extend(&mut self, other: &Bits) {
        self.bits.extend_from_slice(&other.bits);
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    /// Big-endian packing, final byte zero-padded.
    pub fn to_hex(&self) -> String {
        if self.bits.is_empty() {
            return "-".to_string();
        }
        let mut out = String::with_capacity(self.bits.len().div_ceil(4));
        for chunk in self.bits.chunks(8) {
            let mut byte = 0u8;
            for (k, &b) in chunk.iter().enumerate() {
                if b {
                    byte |= 0x80 >> k;
                }
            }
            write!(out, "{byte:02x}").unwrap();
        }
        out
    }

    pub fn reader(&self, sender: Role) -> BitReader<'_> {
        BitReader {
            bits: &self.bits,
            pos: 0,
            sender,
        }
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Cursor over a received payload. Reading past the end, or leaving bits
/// unread, is a protocol violation attributed to the sender.
pub struct BitReader<'a> {
    bits: &'a [bool],
    pos: usize,
    sender: Role,
}

impl BitReader<'_> {
    pub fn remaining(&self) -> usize {
        self.bits.len() - self.pos
    }

    pub fn read_bit(&mut self) -> Result<bool> {
        let b = *self
            .bits
            .get(self.pos)
            .ok_or_else(|| Error::protocol(self.sender, "payload truncated"))?;
        self.pos += 1;
        Ok(b)
    }

    pub fn read_uint(&mut self, width: usize) -> Result<usize> {
        if self.remaining() < width {
            return Err(Error::protocol(
                self.sender,
                format!(
                    "payload truncated: need {width} bits, {} left",
                    self.remaining()
                ),
            ));
        }
        let mut v = 0usize;
        for _ in 0..width {
            v = (v << 1) | usize::from(self.bits[self.pos]);
            self.pos += 1;
        }
        Ok(v)
    }

    /// Reads a vertex id and checks it is `< n`.
    pub fn read_vertex(&mut self, width: usize, n: usize) -> Result<usize> {
        let v = self.read_uint(width)?;
        if v >= n {
            return Err(Error::protocol(
                self.sender,
                format!("vertex id {v} out of range"),
            ));
        }
        Ok(v)
    }

    pub fn finish(self) -> Result<()> {
        if self.remaining() != 0 {
            return Err(Error::protocol(
                self.sender,
                format!("{} trailing bits in payload", self.remaining()),
            ));
        }
        Ok(())
    }

    pub fn sender(&self) -> Role {
        self.sender
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Message {
    pub sender: Role,
    pub payload: Bits,
}

impl fmt::Debug for Message {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.sender.letter(), self.payload)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Transcript {
    messages: Vec<Message>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, msg: Message) {
        self.messages.push(msg);
    }

    pub fn messages(&self) -> &[Message] {
        &self.messages
    }

    pub fn total_bits(&self) -> usize {
        self.messages.iter().map(|m| m.payload.len()).sum()
    }

    /// Number of maximal runs of messages from the same sender.
    pub fn rounds(&self) -> usize {
        let mut rounds = 0;
        let mut last = None;
        for m in &self.messages {
            if last != Some(m.sender) {
                rounds += 1;
                last = Some(m.sender);
            }
        }
        rounds
    }

    /// Line-oriented dump `idx sender bits hex` plus a summary line.
    pub fn dump(&self, output: &dyn fmt::Display) -> String {
        let mut out = String::new();
        for (i, m) in self.messages.iter().enumerate() {
            writeln!(
                out,
                "{i} {} {} {}",
                m.sender.letter(),
                m.payload.len(),
                m.payload.to_hex()
            )
            .unwrap();
        }
        writeln!(
            out,
            "bits={} rounds={} output={output}",
            self.total_bits(),
            self.rounds()
        )
        .unwrap();
        out
    }
}

pub fn transcript_cost(t: &Transcript) -> (usize, usize) {
    (t.total_bits(), t.rounds())
}

/// Everything a party may know at the start: its role, the vertex count, its
/// own edges and its private coins.
#[derive(Clone, Debug)]
pub struct PartyView {
    pub role: Role,
    pub n_vertices: usize,
    pub edges: Graph,
    pub seed: u64,
}

pub enum Turn {
    Send(Bits),
    Halt,
}

pub trait Party {
    type Output;

    /// `inbox` holds the other party's messages since this party's last turn.
    fn turn(&mut self, inbox: &[Message]) -> Result<Turn>;

    /// Final output; must be available once the party has halted.
    fn output(&self) -> Option<Self::Output>;
}

pub trait Protocol {
    type Output: Clone + PartialEq + fmt::Debug;
    type Party: Party<Output = Self::Output>;

    /// Structural preconditions, checked on the full instance before running.
    fn check(&self, _inst: &EdgePartition) -> Result<()> {
        Ok(())
    }

    fn party(&self, view: PartyView) -> Self::Party;
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProtocolOutcome<O> {
    pub output: O,
    pub transcript: Transcript,
}

impl<O> ProtocolOutcome<O> {
    pub fn bits(&self) -> usize {
        self.transcript.total_bits()
    }

    pub fn rounds(&self) -> usize {
        self.transcript.rounds()
    }

    pub fn map<U>(self, f: impl FnOnce(O) -> U) -> ProtocolOutcome<U> {
        ProtocolOutcome {
            output: f(self.output),
            transcript: self.transcript,
        }
    }
}

/// Turn budget; exceeding it means a party never halts.
pub const MAX_TURNS: usize = 1 << 22;

pub fn views(inst: &EdgePartition, seed: u64) -> (PartyView, PartyView) {
    let view = |role: Role, edges: &Graph, idx: u64| PartyView {
        role,
        n_vertices: inst.n_vertices(),
        edges: edges.clone(),
        seed: derive_seed(seed, idx),
    };
    (
        view(Role::Alice, inst.alice(), 0),
        view(Role::Bob, inst.bob(), 1),
    )
}

/// Runs two already-constructed parties in lockstep.
pub fn run_parties<A, B, O>(mut alice: A, mut bob: B) -> Result<ProtocolOutcome<O>>
where
    A: Party<Output = O>,
    B: Party<Output = O>,
    O: PartialEq,
{
    let mut transcript = Transcript::new();
    let mut inbox: [Vec<Message>; 2] = [Vec::new(), Vec::new()];
    let mut halted = [false, false];
    let mut current = Role::Alice;
    for _ in 0..MAX_TURNS {
        if halted[0] && halted[1] {
            break;
        }
        let idx = current as usize;
        let pending = std::mem::take(&mut inbox[idx]);
        let turn = match current {
            Role::Alice => alice.turn(&pending)?,
            Role::Bob => bob.turn(&pending)?,
        };
        match turn {
            Turn::Send(payload) => {
                if payload.is_empty() {
                    return Err(Error::protocol(current, "empty message"));
                }
                let msg = Message {
                    sender: current,
                    payload,
                };
                inbox[1 - idx].push(msg.clone());
                transcript.push(msg);
            }
            Turn::Halt => halted[idx] = true,
        }
        let other = current.other();
        if !halted[other as usize] {
            current = other;
        }
    }
    if !(halted[0] && halted[1]) {
        return Err(Error::protocol(current, "turn budget exhausted"));
    }
    let a = alice
        .output()
        .ok_or_else(|| Error::protocol(Role::Alice, "halted without output"))?;
    let b = bob
        .output()
        .ok_or_else(|| Error::protocol(Role::Bob, "halted without output"))?;
    if a != b {
        return Err(Error::Disagreement);
    }
    Ok(ProtocolOutcome {
        output: a,
        transcript,
    })
}

/// Runs `protocol` on `inst`; deterministic given `seed`.
pub fn run<P: Protocol>(
    protocol: &P,
    inst: &EdgePartition,
    seed: u64,
) -> Result<ProtocolOutcome<P::Output>> {
    protocol.check(inst)?;
    let (va, vb) = views(inst, seed);
    run_parties(protocol.party(va), protocol.party(vb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn msg(sender: Role, len: usize) -> Message {
        let mut payload = Bits::new();
        for _ in 0..len {
            payload.push_bit(true);
        }
        Message { sender, payload }
    }

    #[test]
    fn cost_examples() {
        assert_eq!(transcript_cost(&Transcript::new()), (0, 0));
        let mut t = Transcript::new();
        t.push(msg(Role::Alice, 5));
        t.push(msg(Role::Alice, 3));
        t.push(msg(Role::Bob, 1));
        assert_eq!(transcript_cost(&t), (9, 2));
        let mut t = Transcript::new();
        for r in [Role::Alice, Role::Bob, Role::Alice] {
            t.push(msg(r, 1));
        }
        assert_eq!(transcript_cost(&t), (3, 3));
    }

    #[test]
    fn ceil_log2_values() {
        let got: Vec<usize> = [1, 2, 3, 4, 5, 8, 9, 16, 17]
            .iter()
            .map(|&n| ceil_log2(n))
            .collect();
        assert_eq!(got, vec![0, 1, 2, 2, 3, 3, 4, 4, 5]);
    }

    #[test]
    fn bits_fields_and_hex() {
        let mut b = Bits::new();
        b.push_uint(5, 3);
        b.push_uint(1, 4);
        b.push_bit(true);
        b.push_bit(true);
        assert_eq!(format!("{b:?}"), "101000111");
        assert_eq!(b.to_hex(), "a380");
        let mut r = b.reader(Role::Alice);
        assert_eq!(r.read_uint(3).unwrap(), 5);
        assert_eq!(r.read_vertex(4, 2).unwrap(), 1);
        assert!(r.read_bit().unwrap());
        assert!(matches!(
            r.read_uint(2),
            Err(Error::Protocol {
                role: Role::Alice,
                ..
            })
        ));
    }

    #[test]
    fn trailing_bits_are_a_violation() {
        let mut b = Bits::new();
        b.push_uint(3, 2);
        let mut r = b.reader(Role::Bob);
        r.read_bit().unwrap();
        assert!(r.finish().is_err());
    }

    struct Chatty {
        sends: usize,
        out: bool,
    }

    impl Party for Chatty {
        type Output = bool;

        fn turn(&mut self, _inbox: &[Message]) -> Result<Turn> {
            if self.sends == 0 {
                return Ok(Turn::Halt);
            }
            self.sends -= 1;
            let mut b = Bits::new();
            b.push_bit(true);
            Ok(Turn::Send(b))
        }

        fn output(&self) -> Option<bool> {
            Some(self.out)
        }
    }

    #[test]
    fn runtime_alternates_and_continues_after_halt() {
        let out = run_parties(
            Chatty {
                sends: 1,
                out: true,
            },
            Chatty {
                sends: 3,
                out: true,
            },
        )
        .unwrap();
        let senders: Vec<char> = out
            .transcript
            .messages()
            .iter()
            .map(|m| m.sender.letter())
            .collect();
        assert_eq!(senders, vec!['A', 'B', 'B', 'B']);
        assert_eq!(out.rounds(), 2);
    }

    #[test]
    fn runtime_detects_disagreement_and_empty_messages() {
        assert_eq!(
            run_parties(
                Chatty {
                    sends: 0,
                    out: true
                },
                Chatty {
                    sends: 0,
                    out: false
                }
            ),
            Err(Error::Disagreement)
        );

        struct Mute;
        impl Party for Mute {
            type Output = bool;
            fn turn(&mut self, _inbox: &[Message]) -> Result<Turn> {
                Ok(Turn::Send(Bits::new()))
            }
            fn output(&self) -> Option<bool> {
                None
            }
        }
        assert!(matches!(
            run_parties(
                Mute,
                Chatty {
                    sends: 0,
                    out: true
                }
            ),
            Err(Error::Protocol {
                role: Role::Alice,
                ..
            })
        ));
    }

    #[test]
    fn dump_format() {
        let mut t = Transcript::new();
        t.push(msg(Role::Alice, 5));
        t.push(msg(Role::Bob, 1));
        assert_eq!(
            t.dump(&true),
            "0 A 5 f8\n1 B 1 80\nbits=6 rounds=2 output=true\n"
        );
    }
}
