//! Recognising chains of cycles and evaluating the seven Setup conditions.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::WhiskeredBlock;
use crate::error::FamilyError;
use crate::graph::{Bits, Graph, VertexSet};

/// One way of reading a block as `D_1 ∪ … ∪ D_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    /// Vertex sequence of each cycle, in chain order.
    pub cycles: Vec<Vec<usize>>,
    /// `shared[i]`: the path `D_i ∩ D_{i+1}`.
    pub shared: Vec<Vec<usize>>,
}

/// Every decomposition of `block` as a chain of cycles, each listed once
/// per reading direction.
///
/// Splitting the block at its vertices of degree at least three leaves
/// ears. A shared path is always a whole ear, the first and last cycles
/// close over two parallel ears, and each middle cycle adds at most one
/// ear on either side of its predecessor's shared ear.
pub fn chain_decompositions(block: &Graph) -> Result<Vec<ChainDecomposition>, FamilyError> {
    let n = block.n();
    if n < 3 || !block.is_connected() || !block.cutpoints_unchecked().is_empty() {
        return Err(FamilyError::NotAChain(format!(
            "{block:?} is not 2-connected"
        )));
    }
    let rank = block.cycle_rank()?;
    let branch: u64 = (0..n)
        .filter(|&v| block.degree(v) >= 3)
        .fold(0, |m, v| m | 1 << v);
    if branch == 0 {
        return Ok(vec![ChainDecomposition {
            cycles: vec![walk_cycle(block)],
            shared: vec![],
        }]);
    }
    let ears = ears(block, branch);
    let mut search = Search {
        ears: &ears,
        used: vec![false; ears.len()],
        cycles: Vec::new(),
        shared: Vec::new(),
        out: Vec::new(),
    };
    for (i, cap) in ears.iter().enumerate() {
        for (j, rung) in ears.iter().enumerate() {
            if i == j || !same_ends(cap, rung) {
                continue;
            }
            let rung = oriented(rung, cap[0]);
            search.used[i] = true;
            search.used[j] = true;
            search.cycles.push(close(&[cap, &reversed(&rung)]));
            search.extend(rung);
            search.cycles.pop();
            search.used[i] = false;
            search.used[j] = false;
        }
    }
    let found: Vec<ChainDecomposition> = search
        .out
        .into_iter()
        .filter(|d| d.cycles.len() == rank)
        .collect();
    if found.is_empty() {
        return Err(FamilyError::NotAChain(format!(
            "{block:?} has no chain decomposition"
        )));
    }
    Ok(found)
}

struct Search<'a> {
    ears: &'a [Vec<usize>],
    used: Vec<bool>,
    cycles: Vec<Vec<usize>>,
    shared: Vec<Vec<usize>>,
    out: Vec<ChainDecomposition>,
}

impl Search<'_> {
    /// `rung` runs from `x` to `y` and is shared with the next cycle.
    fn extend(&mut self, rung: Vec<usize>) {
        let (x, y) = (rung[0], *rung.last().unwrap());
        let free: Vec<usize> = (0..self.ears.len()).filter(|&k| !self.used[k]).collect();
        self.shared.push(rung.clone());
        if free.len() == 1 {
            let cap = &self.ears[free[0]];
            if same_ends(cap, &rung) {
                self.cycles.push(close(&[&rung, &oriented(cap, y)]));
                self.out.push(ChainDecomposition {
                    cycles: self.cycles.clone(),
                    shared: self.shared.clone(),
                });
                self.cycles.pop();
            }
            self.shared.pop();
            return;
        }
        let moves = |from: usize| -> Vec<Option<usize>> {
            std::iter::once(None)
                .chain(
                    free.iter()
                        .filter(|&&k| {
                            self.ears[k][0] == from || *self.ears[k].last().unwrap() == from
                        })
                        .map(|&k| Some(k)),
                )
                .collect()
        };
        let (tops, bottoms) = (moves(x), moves(y));
        for &top in &tops {
            for &bottom in &bottoms {
                if top.is_none() && bottom.is_none() || top.is_some() && top == bottom {
                    continue;
                }
                let top_path = top.map(|k| oriented(&self.ears[k], x));
                let bottom_path = bottom.map(|k| oriented(&self.ears[k], y));
                let x2 = top_path.as_ref().map_or(x, |p| *p.last().unwrap());
                let y2 = bottom_path.as_ref().map_or(y, |p| *p.last().unwrap());
                if x2 == y || y2 == x || x2 == y2 {
                    continue;
                }
                for &k in &free {
                    if Some(k) == top || Some(k) == bottom {
                        continue;
                    }
                    let next = &self.ears[k];
                    if !(next[0] == x2 && *next.last().unwrap() == y2
                        || next[0] == y2 && *next.last().unwrap() == x2)
                    {
                        continue;
                    }
                    let next = oriented(next, x2);
                    let mut pieces: Vec<&[usize]> = vec![&rung];
                    let back = reversed(&next);
                    let top_back = top_path.as_ref().map(|p| reversed(p));
                    if let Some(p) = &bottom_path {
                        pieces.push(p);
                    }
                    pieces.push(&back);
                    if let Some(p) = &top_back {
                        pieces.push(p);
                    }
                    for m in [top, bottom, Some(k)].into_iter().flatten() {
                        self.used[m] = true;
                    }
                    self.cycles.push(close(&pieces));
                    self.extend(next.clone());
                    self.cycles.pop();
                    for m in [top, bottom, Some(k)].into_iter().flatten() {
                        self.used[m] = false;
                    }
                }
            }
        }
        self.shared.pop();
    }
}

/// Maximal paths whose interior vertices have degree two, between vertices
/// of `branch`.
fn ears(g: &Graph, branch: u64) -> Vec<Vec<usize>> {
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut out = Vec::new();
    for x in Bits(branch) {
        for y in g.neighbors(x) {
            if seen.contains(&(x.min(y), x.max(y))) {
                continue;
            }
            let mut path = vec![x, y];
            seen.insert((x.min(y), x.max(y)));
            while branch >> path[path.len() - 1] & 1 == 0 {
                let (prev, last) = (path[path.len() - 2], path[path.len() - 1]);
                let next = g.neighbors(last).without(prev).first().expect("degree two");
                seen.insert((last.min(next), last.max(next)));
                path.push(next);
            }
            out.push(path);
        }
    }
    out
}

fn walk_cycle(g: &Graph) -> Vec<usize> {
    let mut cycle = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&u| u != prev)
            .expect("degree two");
        if next == 0 {
            return cycle;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
}

fn same_ends(a: &[usize], b: &[usize]) -> bool {
    let (a0, a1) = (a[0], a[a.len() - 1]);
    let (b0, b1) = (b[0], b[b.len() - 1]);
    (a0, a1) == (b0, b1) || (a0, a1) == (b1, b0)
}

fn reversed(p: &[usize]) -> Vec<usize> {
    p.iter().rev().copied().collect()
}

/// `p` read from its endpoint `start`.
fn oriented(p: &[usize], start: usize) -> Vec<usize> {
    if p[0] == start {
        p.to_vec()
    } else {
        reversed(p)
    }
}

/// Concatenates paths that chain end to start and return to the first
/// vertex; the closing vertex is dropped.
fn close(pieces: &[&[usize]]) -> Vec<usize> {
    let mut cycle: Vec<usize> = Vec::new();
    for p in pieces {
        debug_assert!(cycle.is_empty() || cycle.last() == p.first());
        let skip = usize::from(!cycle.is_empty());
        cycle.extend_from_slice(&p[skip..]);
    }
    debug_assert_eq!(cycle.first(), cycle.last());
    cycle.pop();
    cycle
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "condition", rename_all = "snake_case")]
pub enum SetupVerdict {
    Holds,
    /// No decomposition satisfies all seven conditions; the index is the
    /// latest first-failing condition over all decompositions.
    Violates(u8),
}

impl SetupVerdict {
    pub fn holds(self) -> bool {
        self == SetupVerdict::Holds
    }
}

/// The decompositions of one block, prepared for checking many whisker
/// placements.
#[derive(Clone, Debug)]
pub struct ChainAnalysis {
    candidates: Vec<Candidate>,
}

#[derive(Clone, Debug)]
struct Candidate {
    decomposition: ChainDecomposition,
    /// Endpoints of each shared path that is a single edge; `None` when
    /// some shared path is longer.
    edges: Option<Vec<(usize, usize)>>,
    /// Vertices that condition (7) forces to carry a whisker.
    forced: u64,
}

impl ChainAnalysis {
    pub fn new(block: &Graph) -> Result<Self, FamilyError> {
        let candidates = chain_decompositions(block)?
            .into_iter()
            .map(|d| {
                let edges = d
                    .shared
                    .iter()
                    .map(|p| (p.len() == 2).then(|| (p[0], p[1])))
                    .collect();
                let on_square: u64 = d
                    .cycles
                    .iter()
                    .filter(|c| c.len() == 4)
                    .flatten()
                    .fold(0, |m, &v| m | 1 << v);
                let forced = (0..block.n())
                    .filter(|&v| {
                        let deg = block.degree(v);
                        deg >= 5 || deg >= 4 && on_square >> v & 1 == 1
                    })
                    .fold(0, |m, v| m | 1 << v);
                Candidate {
                    decomposition: d,
                    edges,
                    forced,
                }
            })
            .collect();
        Ok(ChainAnalysis { candidates })
    }

    pub fn decompositions(&self) -> impl Iterator<Item = &ChainDecomposition> {
        self.candidates.iter().map(|c| &c.decomposition)
    }

    /// The Setup conditions with whiskers exactly at `whiskers`. A
    /// whiskered block vertex is a cutpoint of `B̄` and every other block
    /// vertex is not, so the degree in condition (7) only matters for
    /// vertices without a whisker, where it equals the block degree.
    pub fn verdict(&self, whiskers: VertexSet) -> SetupVerdict {
        let mut latest = 0;
        for c in &self.candidates {
            match c.first_violation(whiskers.0) {
                None => return SetupVerdict::Holds,
                Some(k) => latest = latest.max(k),
            }
        }
        SetupVerdict::Violates(latest)
    }
}

impl Candidate {
    fn first_violation(&self, w: u64) -> Option<u8> {
        let d = &self.decomposition;
        let lens: Vec<usize> = d.cycles.iter().map(Vec::len).collect();
        let whiskered = |v: usize| w >> v & 1 == 1;
        // (1) every cycle a triangle or a square
        if lens.iter().any(|&l| l != 3 && l != 4) {
            return Some(1);
        }
        // (2) a square is followed by a triangle
        if lens.windows(2).any(|p| p == [4, 4]) {
            return Some(2);
        }
        // (3) shared edges {w_i, u_i}, w_i a cutpoint and u_i not
        let Some(edges) = &self.edges else {
            return Some(3);
        };
        let mut wu = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            match (whiskered(a), whiskered(b)) {
                (true, false) => wu.push((a, b)),
                (false, true) => wu.push((b, a)),
                _ => return Some(3),
            }
        }
        // (4) W and U advance along edges of the cycle between them
        for i in 1..wu.len() {
            let cycle = &d.cycles[i];
            let ((w0, u0), (w1, u1)) = (wu[i - 1], wu[i]);
            if !(w0 == w1 || cycle_adjacent(cycle, w0, w1))
                || !(u0 == u1 || cycle_adjacent(cycle, u0, u1))
            {
                return Some(4);
            }
        }
        // (5), (6) a square at either end has cutpoints along one edge
        let r = d.cycles.len();
        for (cond, cycle, junction) in [
            (5u8, &d.cycles[0], wu.first()),
            (6u8, &d.cycles[r - 1], wu.last()),
        ] {
            if cycle.len() != 4 {
                continue;
            }
            let ok = match junction {
                Some(&(wi, ui)) => {
                    let w_far = other_neighbour(cycle, wi, ui);
                    let u_far = other_neighbour(cycle, ui, wi);
                    whiskered(w_far) && !whiskered(u_far)
                }
                None => {
                    let on: Vec<usize> = cycle.iter().copied().filter(|&v| whiskered(v)).collect();
                    on.len() == 2 && cycle_adjacent(cycle, on[0], on[1])
                }
            };
            if !ok {
                return Some(cond);
            }
        }
        // (7) high-degree vertices are cutpoints
        if self.forced & !w != 0 {
            return Some(7);
        }
        None
    }
}

fn cycle_adjacent(cycle: &[usize], a: usize, b: usize) -> bool {
    let l = cycle.len();
    (0..l).any(|i| {
        let (p, q) = (cycle[i], cycle[(i + 1) % l]);
        (p, q) == (a, b) || (p, q) == (b, a)
    })
}

/// The neighbour of `v` on `cycle` other than `not`.
fn other_neighbour(cycle: &[usize], v: usize, not: usize) -> usize {
    let l = cycle.len();
    let i = cycle.iter().position(|&x| x == v).expect("vertex on cycle");
    let (prev, next) = (cycle[(i + l - 1) % l], cycle[(i + 1) % l]);
    if prev == not {
        next
    } else {
        prev
    }
}

/// The Setup conditions on `wb`; an error when the block is not a chain of
/// cycles.
pub fn check_setup(wb: &WhiskeredBlock) -> Result<SetupVerdict, FamilyError> {
    Ok(ChainAnalysis::new(&wb.block)?.verdict(wb.whisker_at))
}
