//! Distributed Hopcroft–Karp.
//!
//! Both parties mirror the matching, the BFS layers and the DFS stack, so
//! only private edge knowledge is ever sent. Vertex ids are `⌈log₂ N⌉` bits
//! where `N` is the total vertex count.
//!
//! Per phase:
//! * BFS from the free left vertices. For each level Alice lists the right
//!   vertices she reaches from the frontier, then Bob lists the rest; each list
//!   ends with a `1` bit. Matched edges are followed locally. The search stops
//!   at the first right layer containing free vertices.
//! * Layered DFS from those free right vertices back to layer 0, driven by
//!   2-bit opcodes: `00` FORWARD + id, `01` BACKTRACK, `10` NEXT_ROOT,
//!   `11` END_PHASE. A party keeps moving forward along its own edges and
//!   yields when stuck; if the other party is stuck at the same vertex too, it
//!   backtracks instead.
//! * On END_PHASE both parties augment along the paths found. If Alice ends
//!   the phase she starts the next BFS list in the same message.
//!
//! The run stops when a BFS level comes out empty.

use crate::algo::matching::{check_bipartition, side_map};
use crate::comm::{ceil_log2, BitReader, Bits, Message, Party, PartyView, Protocol, Role, Turn};
use crate::error::{Error, Result};
use crate::graph::{EdgePartition, Matching};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkOutput {
    pub size: usize,
    /// BFS searches run, including the last one that found nothing.
    pub phases: usize,
    pub matching: Matching,
}

#[derive(Clone, Debug)]
pub struct MatchingHk {
    left: Vec<usize>,
}

impl MatchingHk {
    pub fn new(left: Vec<usize>) -> Self {
        MatchingHk { left }
    }
}

impl Protocol for MatchingHk {
    type Output = HkOutput;
    type Party = HkParty;

    fn check(&self, inst: &EdgePartition) -> Result<()> {
        let side = side_map(inst.n_vertices(), &self.left)?;
        check_bipartition(&inst.union(), &side)
    }

    fn party(&self, view: PartyView) -> HkParty {
        let n = view.n_vertices;
        let side = side_map(n, &self.left).expect("checked before the run");
        HkParty {
            role: view.role,
            adj: view.edges.adjacency(),
            state: HkState::new(side),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    Forward(usize),
    Backtrack,
    NextRoot,
    EndPhase,
}

struct Bfs {
    layer: Vec<Option<usize>>,
    frontier: Vec<usize>,
    depth: usize,
    next: Vec<usize>,
    lists: u8,
}

struct Dfs {
    layer: Vec<Option<usize>>,
    roots: Vec<usize>,
    root_idx: usize,
    /// `[root, x1, y1, x2, y2, ...]`; the top is always a right vertex.
    stack: Vec<usize>,
    used: Vec<bool>,
    stuck: [bool; 2],
    paths: Vec<Vec<usize>>,
}

enum Stage {
    Bfs(Bfs),
    Dfs(Dfs),
    Finished,
}

/// State held identically by both parties and by a transcript observer.
struct HkState {
    n: usize,
    width: usize,
    /// `true` for left vertices.
    side: Vec<bool>,
    mate: Vec<Option<usize>>,
    phases: usize,
    stage: Stage,
    /// `(phase, vertex)` for every discovery announcement.
    announced: Vec<(usize, usize)>,
}

impl HkState {
    fn new(side: Vec<bool>) -> Self {
        let n = side.len();
        let mut s = HkState {
            n,
            width: ceil_log2(n),
            side,
            mate: vec![None; n],
            phases: 0,
            stage: Stage::Finished,
            announced: Vec::new(),
        };
        s.start_phase();
        s
    }

    fn start_phase(&mut self) {
        let free: Vec<usize> = (0..self.n)
            .filter(|&v| self.side[v] && self.mate[v].is_none())
            .collect();
        if free.is_empty() {
            self.stage = Stage::Finished;
            return;
        }
        self.phases += 1;
        let mut layer = vec![None; self.n];
        for &x in &free {
            layer[x] = Some(0);
        }
        self.stage = Stage::Bfs(Bfs {
            layer,
            frontier: free,
            depth: 0,
            next: Vec::new(),
            lists: 0,
        });
    }

    fn lister(&self) -> Option<Role> {
        match &self.stage {
            Stage::Bfs(b) => Some(if b.lists == 0 { Role::Alice } else { Role::Bob }),
            _ => None,
        }
    }

    fn discover(&self, adj: &[Vec<usize>]) -> Vec<usize> {
        let Stage::Bfs(b) = &self.stage else {
            return Vec::new();
        };
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for &x in &b.frontier {
            for &y in &adj[x] {
                if !self.side[y] && b.layer[y].is_none() && !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn apply_list(&mut self, sender: Role, ys: &[usize]) -> Result<()> {
        let phase = self.phases;
        let Stage::Bfs(b) = &mut self.stage else {
            return Err(Error::protocol(sender, "list outside BFS"));
        };
        for &y in ys {
            if self.side[y] || b.layer[y].is_some() {
                return Err(Error::protocol(sender, format!("bad BFS discovery {y}")));
            }
            b.layer[y] = Some(b.depth + 1);
            b.next.push(y);
            self.announced.push((phase, y));
        }
        b.lists += 1;
        if b.lists < 2 {
            return Ok(());
        }
        let mut next = std::mem::take(&mut b.next);
        next.sort_unstable();
        if next.is_empty() {
            self.stage = Stage::Finished;
            return Ok(());
        }
        let roots: Vec<usize> = next
            .iter()
            .copied()
            .filter(|&y| self.mate[y].is_none())
            .collect();
        if roots.is_empty() {
            let depth = b.depth + 2;
            let mut frontier: Vec<usize> = next
                .iter()
                .map(|&y| self.mate[y].expect("non-free right vertex"))
                .collect();
            frontier.sort_unstable();
            for &x in &frontier {
                b.layer[x] = Some(depth);
            }
            b.frontier = frontier;
            b.depth = depth;
            b.lists = 0;
        } else {
            let layer = std::mem::take(&mut b.layer);
            self.stage = Stage::Dfs(Dfs {
                layer,
                roots,
                root_idx: 0,
                stack: Vec::new(),
                used: vec![false; self.n],
                stuck: [false; 2],
                paths: Vec::new(),
            });
        }
        Ok(())
    }

    /// Forward move from the DFS top using `adj`, lowest id first.
    fn forward_candidate(&self, adj: &[Vec<usize>]) -> Option<usize> {
        let Stage::Dfs(d) = &self.stage else {
            return None;
        };
        let &y = d.stack.last()?;
        let want = d.layer[y]? - 1;
        adj[y]
            .iter()
            .copied()
            .find(|&x| d.layer[x] == Some(want) && !d.used[x])
    }

    fn apply_op(&mut self, sender: Role, op: Op) -> Result<()> {
        let phase = self.phases;
        let Stage::Dfs(d) = &mut self.stage else {
            return Err(Error::protocol(sender, "DFS opcode outside DFS"));
        };
        let bad = |what: &str| Err(Error::protocol(sender, what.to_string()));
        match op {
            Op::NextRoot => {
                if !d.stack.is_empty() || d.root_idx >= d.roots.len() {
                    return bad("NEXT_ROOT out of place");
                }
                let r = d.roots[d.root_idx];
                d.root_idx += 1;
                d.used[r] = true;
                d.stack.push(r);
                d.stuck = [false; 2];
            }
            Op::Forward(x) => {
                let Some(&y) = d.stack.last() else {
                    return bad("FORWARD with empty stack");
                };
                let want = d.layer[y].and_then(|l| l.checked_sub(1));
                if !self.side[x] || d.layer[x] != want || d.used[x] {
                    return bad("FORWARD to an ineligible vertex");
                }
                d.used[x] = true;
                self.announced.push((phase, x));
                if want == Some(0) {
                    let mut path = std::mem::take(&mut d.stack);
                    path.push(x);
                    d.paths.push(path);
                } else {
                    let y2 = self.mate[x].expect("layered left vertex is matched");
                    d.used[y2] = true;
                    d.stack.push(x);
                    d.stack.push(y2);
                }
                d.stuck = [false; 2];
            }
            Op::Backtrack => {
                if d.stack.pop().is_none() {
                    return bad("BACKTRACK with empty stack");
                }
                d.stack.pop();
                d.stuck = [false; 2];
            }
            Op::EndPhase => {
                if !d.stack.is_empty() || d.root_idx < d.roots.len() {
                    return bad("END_PHASE out of place");
                }
                let paths = std::mem::take(&mut d.paths);
                if paths.is_empty() {
                    self.stage = Stage::Finished;
                    return Ok(());
                }
                for path in paths {
                    for pair in path.chunks(2) {
                        let (y, x) = (pair[0], pair[1]);
                        self.mate[y] = Some(x);
                        self.mate[x] = Some(y);
                    }
                }
                self.start_phase();
            }
        }
        Ok(())
    }

    fn end_message(&mut self, sender: Role) {
        if let Stage::Dfs(d) = &mut self.stage {
            if !d.stack.is_empty() {
                d.stuck[sender as usize] = true;
            }
        }
    }

    fn encode_op(&self, out: &mut Bits, op: Op) {
        match op {
            Op::Forward(x) => {
                out.push_uint(0, 2);
                out.push_uint(x, self.width);
            }
            Op::Backtrack => out.push_uint(1, 2),
            Op::NextRoot => out.push_uint(2, 2),
            Op::EndPhase => out.push_uint(3, 2),
        }
    }

    fn encode_list(&self, out: &mut Bits, ys: &[usize]) {
        for &y in ys {
            out.push_uint(y, self.width);
        }
        out.push_bit(true);
    }

    fn read_list(&self, r: &mut BitReader<'_>) -> Result<Vec<usize>> {
        let sender = r.sender();
        let body = r
            .remaining()
            .checked_sub(1)
            .ok_or_else(|| Error::protocol(sender, "missing list"))?;
        let count = match (self.width, body) {
            (0, 0) => 0,
            (0, _) => return Err(Error::protocol(sender, "malformed list")),
            (w, b) if b % w == 0 => b / w,
            _ => return Err(Error::protocol(sender, "malformed list")),
        };
        let ys = (0..count)
            .map(|_| r.read_vertex(self.width, self.n))
            .collect::<Result<Vec<_>>>()?;
        if !r.read_bit()? {
            return Err(Error::protocol(sender, "missing list terminator"));
        }
        Ok(ys)
    }

    fn apply_message(&mut self, msg: &Message) -> Result<()> {
        let sender = msg.sender;
        let mut r = msg.payload.reader(sender);
        while r.remaining() > 0 {
            match &self.stage {
                Stage::Finished => return Err(Error::protocol(sender, "bits after termination")),
                Stage::Bfs(_) => {
                    if self.lister() != Some(sender) {
                        return Err(Error::protocol(sender, "list out of turn"));
                    }
                    let ys = self.read_list(&mut r)?;
                    self.apply_list(sender, &ys)?;
                }
                Stage::Dfs(_) => {
                    let op = match r.read_uint(2)? {
                        0 => Op::Forward(r.read_vertex(self.width, self.n)?),
                        1 => Op::Backtrack,
                        2 => Op::NextRoot,
                        _ => Op::EndPhase,
                    };
                    self.apply_op(sender, op)?;
                }
            }
        }
        self.end_message(sender);
        Ok(())
    }

    fn output(&self) -> Option<HkOutput> {
        if !matches!(self.stage, Stage::Finished) {
            return None;
        }
        let matching = Matching::from_mates(&self.mate).expect("mates are symmetric");
        Some(HkOutput {
            size: matching.len(),
            phases: self.phases,
            matching,
        })
    }
}

pub struct HkParty {
    role: Role,
    adj: Vec<Vec<usize>>,
    state: HkState,
}

impl Party for HkParty {
    type Output = HkOutput;

    fn turn(&mut self, inbox: &[Message]) -> Result<Turn> {
        for msg in inbox {
            self.state.apply_message(msg)?;
        }
        let mut out = Bits::new();
        loop {
            let op = match &self.state.stage {
                Stage::Finished => break,
                Stage::Bfs(_) => {
                    if self.state.lister() == Some(self.role) {
                        let ys = self.state.discover(&self.adj);
                        self.state.encode_list(&mut out, &ys);
                        self.state.apply_list(self.role, &ys)?;
                    }
                    break;
                }
                Stage::Dfs(d) => {
                    if d.stack.is_empty() {
                        if d.root_idx < d.roots.len() {
                            Op::NextRoot
                        } else {
                            Op::EndPhase
                        }
                    } else if let Some(x) = self.state.forward_candidate(&self.adj) {
                        Op::Forward(x)
                    } else if d.stuck[self.role.other() as usize] {
                        Op::Backtrack
                    } else {
                        break;
                    }
                }
            };
            self.state.encode_op(&mut out, op);
            self.state.apply_op(self.role, op)?;
        }
        if out.is_empty() {
            return if matches!(self.state.stage, Stage::Finished) {
                Ok(Turn::Halt)
            } else {
                Err(Error::protocol(self.role, "nothing to say"))
            };
        }
        self.state.end_message(self.role);
        Ok(Turn::Send(out))
    }

    fn output(&self) -> Option<HkOutput> {
        self.state.output()
    }
}

/// What an outside observer reconstructs from a transcript alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkReplay {
    pub output: HkOutput,
    /// `(phase, vertex)` for every discovery announcement, in order.
    pub announced: Vec<(usize, usize)>,
}

impl HkReplay {
    /// First vertex announced twice within one phase, if any.
    pub fn repeated_announcement(&self) -> Option<(usize, usize)> {
        let mut seen = std::collections::HashSet::new();
        self.announced.iter().copied().find(|&a| !seen.insert(a))
    }
}

/// Replays a transcript with no access to either edge set.
pub fn replay(n_vertices: usize, left: &[usize], messages: &[Message]) -> Result<HkReplay> {
    let mut state = HkState::new(side_map(n_vertices, left)?);
    for msg in messages {
        state.apply_message(msg)?;
    }
    let output = state
        .output()
        .ok_or_else(|| Error::InvalidParameter("transcript ends before termination".into()))?;
    Ok(HkReplay {
        output,
        announced: state.announced,
    })
}
