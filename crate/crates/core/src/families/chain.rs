use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::WhiskeredBlock;
use crate::error::FamilyError;
use crate::graph::{Bits, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CycleKind {
    C3,
    C4,
}

impl CycleKind {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(self) -> usize {
        match self {
            CycleKind::C3 => 3,
            CycleKind::C4 => 4,
        }
    }
}

/// The side of the strip that gains a vertex across a triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Top,
    Bottom,
}

/// A chain of triangles and squares drawn as a strip between a top path
/// and a bottom path.
///
/// The strip has `r + 1` rungs, rung 0 joining the first vertices of both
/// paths. Crossing a square advances both paths by one vertex; crossing a
/// triangle advances only the side named by the next entry of `glue`, so
/// consecutive cycles share exactly the rung between them.
///
/// Labels: top path first, then bottom path, then whisker tips.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainSpec {
    pub cycles: Vec<CycleKind>,
    /// One entry per triangle, in chain order.
    pub glue: Vec<Side>,
    /// Block vertices carrying a whisker.
    pub whiskers: VertexSet,
}

impl ChainSpec {
    pub fn new(
        cycles: Vec<CycleKind>,
        glue: Vec<Side>,
        whiskers: VertexSet,
    ) -> Result<Self, FamilyError> {
        let spec = ChainSpec {
            cycles,
            glue,
            whiskers,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.cycles.is_empty() {
            return Err(FamilyError::Spec("a chain needs at least one cycle".into()));
        }
        let triangles = self.cycles.iter().filter(|&&c| c == CycleKind::C3).count();
        if self.glue.len() != triangles {
            return Err(FamilyError::Spec(format!(
                "{} glue entries for {triangles} triangles",
                self.glue.len()
            )));
        }
        let b = self.block_size();
        if b > 64 {
            return Err(FamilyError::Spec(format!("{b} block vertices exceed 64")));
        }
        if !self.whiskers.is_subset(VertexSet::full(b)) {
            return Err(FamilyError::Spec(format!(
                "whiskers {:?} outside the {b} block vertices",
                self.whiskers
            )));
        }
        if b + self.whiskers.len() > 64 {
            return Err(FamilyError::Spec(format!(
                "{} vertices with whiskers exceed 64",
                b + self.whiskers.len()
            )));
        }
        Ok(())
    }

    /// Lengths of the top and bottom paths.
    pub fn path_lengths(&self) -> (usize, usize) {
        let mut glue = self.glue.iter();
        let (mut top, mut bottom) = (1, 1);
        for c in &self.cycles {
            match c {
                CycleKind::C4 => {
                    top += 1;
                    bottom += 1;
                }
                CycleKind::C3 => match glue.next() {
                    Some(Side::Top) => top += 1,
                    _ => bottom += 1,
                },
            }
        }
        (top, bottom)
    }

    pub fn block_size(&self) -> usize {
        let (t, b) = self.path_lengths();
        t + b
    }

    /// `(top, bottom)` endpoints of every rung, in chain order.
    pub fn rungs(&self) -> Vec<(usize, usize)> {
        let (top_len, _) = self.path_lengths();
        let mut glue = self.glue.iter();
        let (mut t, mut b) = (0, 0);
        let mut out = vec![(0, top_len)];
        for c in &self.cycles {
            match c {
                CycleKind::C4 => {
                    t += 1;
                    b += 1;
                }
                CycleKind::C3 => match glue.next() {
                    Some(Side::Top) => t += 1,
                    _ => b += 1,
                },
            }
            out.push((t, top_len + b));
        }
        out
    }

    /// The block `B` alone.
    pub fn block(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let (top, bottom) = self.path_lengths();
        let mut g = Graph::empty(top + bottom)?;
        for i in 1..top {
            g.add_edge(i - 1, i);
        }
        for i in top + 1..top + bottom {
            g.add_edge(i - 1, i);
        }
        for (t, b) in self.rungs() {
            g.add_edge(t, b);
        }
        Ok(g)
    }

    pub fn whiskered_block(&self) -> Result<WhiskeredBlock, FamilyError> {
        WhiskeredBlock::new(self.block()?, self.whiskers)
    }

    /// The same chain read right to left.
    pub fn reversed(&self) -> ChainSpec {
        let map = self.reverse_map();
        ChainSpec {
            cycles: self.cycles.iter().rev().copied().collect(),
            glue: self.glue.iter().rev().copied().collect(),
            whiskers: self.whiskers.iter().map(|v| map[v]).collect(),
        }
    }

    /// The same chain with top and bottom exchanged.
    pub fn mirrored(&self) -> ChainSpec {
        let map = self.mirror_map();
        let flip = |s: &Side| match s {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        };
        ChainSpec {
            cycles: self.cycles.clone(),
            glue: self.glue.iter().map(flip).collect(),
            whiskers: self.whiskers.iter().map(|v| map[v]).collect(),
        }
    }

    /// Block relabelling carrying this chain onto [`ChainSpec::reversed`].
    fn reverse_map(&self) -> Vec<usize> {
        let (top, bottom) = self.path_lengths();
        (0..top + bottom)
            .map(|v| {
                if v < top {
                    top - 1 - v
                } else {
                    top + (top + bottom - 1 - v)
                }
            })
            .collect()
    }

    /// Block relabelling carrying this chain onto [`ChainSpec::mirrored`].
    fn mirror_map(&self) -> Vec<usize> {
        let (top, bottom) = self.path_lengths();
        (0..top + bottom)
            .map(|v| if v < top { bottom + v } else { v - top })
            .collect()
    }

    fn shape(&self) -> (&[CycleKind], &[Side]) {
        (&self.cycles, &self.glue)
    }
}

/// An unwhiskered chain standing for its class under reversal and
/// mirroring, with the block relabellings that fix it.
#[derive(Clone, Debug)]
pub struct ChainClass {
    pub skeleton: ChainSpec,
    pub block: Graph,
    stabilizer: Vec<Vec<usize>>,
}

impl ChainClass {
    /// Whether `whiskers` is the least mask among its images under the
    /// relabellings that fix the skeleton.
    pub fn is_least(&self, whiskers: u64) -> bool {
        self.stabilizer.iter().all(|map| {
            let mut image = 0u64;
            for v in Bits(whiskers) {
                image |= 1 << map[v];
            }
            whiskers <= image
        })
    }

    /// Number of relabellings fixing the skeleton, identity included.
    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer.len() + 1
    }
}

/// One [`ChainClass`] per class of unwhiskered chains on `block_size`
/// vertices. Every whiskered chain is isomorphic to some class skeleton
/// carrying a mask accepted by [`ChainClass::is_least`].
pub fn chain_classes(block_size: usize) -> Vec<ChainClass> {
    let mut out = Vec::new();
    for spec in chain_skeletons(block_size) {
        let rev = spec.reversed();
        let mir = spec.mirrored();
        let both = rev.mirrored();
        if [&rev, &mir, &both]
            .iter()
            .any(|img| img.shape() < spec.shape())
        {
            continue;
        }
        let r = spec.reverse_map();
        let m = spec.mirror_map();
        let rev_m = rev.mirror_map();
        let rm: Vec<usize> = r.iter().map(|&v| rev_m[v]).collect();
        let stabilizer = [(&rev, r), (&mir, m), (&both, rm)]
            .into_iter()
            .filter(|(img, _)| img.shape() == spec.shape())
            .map(|(_, map)| map)
            .collect();
        let block = spec.block().expect("skeletons are valid");
        out.push(ChainClass {
            skeleton: spec,
            block,
            stabilizer,
        });
    }
    out
}

impl fmt::Display for ChainSpec {
    /// `3t,4,3b` with the whiskered block vertices after a slash.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut glue = self.glue.iter();
        let parts: Vec<String> = self
            .cycles
            .iter()
            .map(|c| match c {
                CycleKind::C4 => "4".to_string(),
                CycleKind::C3 => match glue.next() {
                    Some(Side::Top) => "3t".to_string(),
                    _ => "3b".to_string(),
                },
            })
            .collect();
        write!(f, "{}/{:?}", parts.join(","), self.whiskers)
    }
}

impl FromStr for CycleKind {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "3" | "C3" | "c3" => Ok(CycleKind::C3),
            "4" | "C4" | "c4" => Ok(CycleKind::C4),
            other => Err(FamilyError::Spec(format!(
                "unknown cycle {other:?}; expected 3 or 4"
            ))),
        }
    }
}

impl FromStr for Side {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "t" | "top" => Ok(Side::Top),
            "b" | "bottom" => Ok(Side::Bottom),
            other => Err(FamilyError::Spec(format!(
                "unknown side {other:?}; expected t or b"
            ))),
        }
    }
}

/// `B̄` for `spec`: the strip block plus its whiskers.
pub fn chain_of_cycles(spec: &ChainSpec) -> Result<Graph, FamilyError> {
    Ok(spec.whiskered_block()?.graph)
}

/// Every unwhiskered chain with exactly `block_size` block vertices, in a
/// fixed order.
pub fn chain_skeletons(block_size: usize) -> Vec<ChainSpec> {
    let mut out = Vec::new();
    if block_size >= 3 {
        let mut cycles = Vec::new();
        let mut glue = Vec::new();
        extend(block_size - 2, &mut cycles, &mut glue, &mut out);
    }
    out
}

/// Each triangle adds one vertex, each square two; `budget` counts the
/// vertices still to add beyond the first rung.
fn extend(
    budget: usize,
    cycles: &mut Vec<CycleKind>,
    glue: &mut Vec<Side>,
    out: &mut Vec<ChainSpec>,
) {
    if budget == 0 {
        out.push(ChainSpec {
            cycles: cycles.clone(),
            glue: glue.clone(),
            whiskers: VertexSet::EMPTY,
        });
        return;
    }
    for side in [Side::Top, Side::Bottom] {
        cycles.push(CycleKind::C3);
        glue.push(side);
        extend(budget - 1, cycles, glue, out);
        glue.pop();
        cycles.pop();
    }
    if budget >= 2 {
        cycles.push(CycleKind::C4);
        extend(budget - 2, cycles, glue, out);
        cycles.pop();
    }
}
