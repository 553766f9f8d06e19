//! Whiskered blocks of cycle rank three.

use std::collections::BTreeSet;

use super::WhiskeredBlock;
use crate::graph::{canonical_certificate, Certificate, Graph, VertexSet};

/// A catalog graph with its name and block size; block vertices come
/// first, whisker tips last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub block_size: usize,
    pub graph: Graph,
}

impl CatalogEntry {
    pub fn certificate(&self) -> Certificate {
        canonical_certificate(&self.graph).expect("catalog graphs are small")
    }

    pub fn whiskered_block(&self) -> WhiskeredBlock {
        let (block, _) = self
            .graph
            .induced_subgraph(VertexSet::full(self.block_size));
        let whiskers = (0..self.block_size)
            .filter(|&v| self.graph.degree(v) > block.degree(v))
            .collect();
        WhiskeredBlock::new(block, whiskers).expect("catalog whiskers lie on the block")
    }
}

struct Raw {
    name: &'static str,
    block: usize,
    edges: &'static [(usize, usize)],
    whiskers: &'static [usize],
}

const FAN: &[(usize, usize)] = &[(1, 0), (1, 2), (0, 2), (2, 3), (0, 3), (3, 4), (0, 4)];
const SQUARE_FAN: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (5, 1),
    (5, 2),
    (2, 3),
    (5, 3),
    (3, 4),
    (5, 4),
];
const TWO_SQUARES: &[(usize, usize)] = &[
    (0, 1),
    (0, 2),
    (6, 1),
    (6, 2),
    (2, 3),
    (6, 3),
    (3, 4),
    (5, 4),
    (6, 5),
];
const SQUARE_BETWEEN: &[(usize, usize)] = &[
    (0, 1),
    (2, 3),
    (0, 2),
    (1, 3),
    (0, 4),
    (2, 4),
    (1, 5),
    (5, 3),
];
const K4: &[(usize, usize)] = &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
const K4_TWO_SPLIT: &[(usize, usize)] = &[
    (2, 5),
    (5, 3),
    (3, 0),
    (3, 1),
    (1, 4),
    (4, 0),
    (0, 2),
    (1, 2),
];
const K4_ONE_SPLIT: &[(usize, usize)] = &[(2, 3), (3, 0), (3, 1), (4, 1), (4, 0), (1, 2), (2, 0)];

const RAW: [Raw; 9] = [
    Raw {
        name: "fan-hub",
        block: 5,
        edges: FAN,
        whiskers: &[0],
    },
    Raw {
        name: "fan-rim",
        block: 5,
        edges: FAN,
        whiskers: &[2, 3],
    },
    Raw {
        name: "square-triangle-triangle",
        block: 6,
        edges: SQUARE_FAN,
        whiskers: &[5, 1],
    },
    Raw {
        name: "square-triangle-square",
        block: 7,
        edges: TWO_SQUARES,
        whiskers: &[6, 5, 1],
    },
    Raw {
        name: "triangle-square-triangle",
        block: 6,
        edges: SQUARE_BETWEEN,
        whiskers: &[2, 3],
    },
    Raw {
        name: "k4",
        block: 4,
        edges: K4,
        whiskers: &[],
    },
    Raw {
        name: "k4-two-subdivided",
        block: 6,
        edges: K4_TWO_SPLIT,
        whiskers: &[2, 0],
    },
    Raw {
        name: "k4-one-subdivided-a",
        block: 5,
        edges: K4_ONE_SPLIT,
        whiskers: &[2, 0, 3],
    },
    Raw {
        name: "k4-one-subdivided-b",
        block: 5,
        edges: K4_ONE_SPLIT,
        whiskers: &[2, 0, 4],
    },
];

/// The nine accessible indecomposable whiskered blocks of cycle rank
/// three: five chains of cycles and four subdivisions of `K4`.
pub fn rank3_catalog() -> Vec<CatalogEntry> {
    RAW.iter()
        .map(|raw| {
            let mut whiskers: Vec<usize> = raw.whiskers.to_vec();
            whiskers.sort_unstable();
            let mut g = Graph::empty(raw.block + whiskers.len()).expect("small");
            for &(u, v) in raw.edges {
                g.add_edge(u, v);
            }
            for (k, &v) in whiskers.iter().enumerate() {
                g.add_edge(v, raw.block + k);
            }
            CatalogEntry {
                name: raw.name,
                block_size: raw.block,
                graph: g,
            }
        })
        .collect()
}

/// Loopless multigraphs of minimum degree three and cycle rank three, as
/// edge lists. The degree excess `Σ (deg v - 2) = 2 (m - 1) = 4` leaves
/// two vertices of degree four, one of degree four with two of degree
/// three, or four of degree three.
const SKELETONS: [&[(usize, usize)]; 4] = [
    &[(0, 1), (0, 1), (0, 1), (0, 1)],
    &[(0, 1), (0, 1), (0, 2), (0, 2), (1, 2)],
    &[(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)],
    &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
];

/// Every 2-connected simple graph of cycle rank three on `b` vertices, one
/// per isomorphism class, sorted by certificate: subdivisions of the
/// skeletons with `b` vertices in total.
pub fn rank3_blocks(b: usize) -> Vec<Graph> {
    let mut seen: BTreeSet<(Certificate, Graph)> = BTreeSet::new();
    for skeleton in SKELETONS {
        let base = 1 + skeleton.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
        if b < base {
            continue;
        }
        let mut split = vec![0usize; skeleton.len()];
        distribute(b - base, 0, &mut split, &mut |split| {
            if let Some(g) = subdivide(skeleton, base, split) {
                let (canon, _) = crate::graph::canonical_form(&g).expect("small");
                let cert = canonical_certificate(&canon).expect("small");
                seen.insert((cert, canon));
            }
        });
    }
    let mut out: Vec<Graph> = Vec::new();
    let mut last: Option<Certificate> = None;
    for (cert, g) in seen {
        if last.as_ref() != Some(&cert) {
            out.push(g);
            last = Some(cert);
        }
    }
    out
}

fn distribute(left: usize, at: usize, split: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if at + 1 == split.len() {
        split[at] = left;
        emit(split);
        return;
    }
    for k in 0..=left {
        split[at] = k;
        distribute(left - k, at + 1, split, emit);
    }
}

/// The skeleton with `split[e]` new vertices on edge `e`; `None` when two
/// unsplit parallel edges would coincide.
fn subdivide(skeleton: &[(usize, usize)], base: usize, split: &[usize]) -> Option<Graph> {
    let n = base + split.iter().sum::<usize>();
    let mut g = Graph::empty(n).ok()?;
    let mut next = base;
    for (&(u, v), &k) in skeleton.iter().zip(split) {
        let mut prev = u;
        for _ in 0..k {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        if g.has_edge(prev, v) {
            return None;
        }
        g.add_edge(prev, v);
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{chain_of_cycles, ChainSpec, CycleKind::*, Side::*};
    use crate::ideal::{is_accessible, is_decomposable};

    #[test]
    fn catalog_members_are_accessible_rank_three() {
        let catalog = rank3_catalog();
        assert_eq!(catalog.len(), 9);
        for entry in &catalog {
            let wb = entry.whiskered_block();
            assert_eq!(wb.graph, entry.graph, "{}", entry.name);
            assert_eq!(wb.block.cycle_rank().unwrap(), 3, "{}", entry.name);
            assert!(wb.block.cutpoints().unwrap().is_empty(), "{}", entry.name);
            assert!(is_accessible(&entry.graph), "{}", entry.name);
            assert!(!is_decomposable(&entry.graph), "{}", entry.name);
        }
        let certs: BTreeSet<Certificate> = catalog.iter().map(CatalogEntry::certificate).collect();
        assert_eq!(certs.len(), 9);
    }

    #[test]
    fn chains_in_the_catalog_match_the_strip_constructor() {
        let catalog = rank3_catalog();
        let specs = [
            ChainSpec::new(vec![C3, C3, C3], vec![Bottom; 3], VertexSet::from([0])).unwrap(),
            ChainSpec::new(vec![C3, C3, C3], vec![Bottom; 3], VertexSet::from([2, 3])).unwrap(),
            ChainSpec::new(
                vec![C4, C3, C3],
                vec![Bottom, Bottom],
                VertexSet::from([0, 1]),
            )
            .unwrap(),
            ChainSpec::new(vec![C4, C3, C4], vec![Bottom], VertexSet::from([0, 1, 2])).unwrap(),
            ChainSpec::new(
                vec![C3, C4, C3],
                vec![Bottom, Bottom],
                VertexSet::from([0, 1]),
            )
            .unwrap(),
        ];
        for (entry, spec) in catalog.iter().zip(&specs) {
            let g = chain_of_cycles(spec).unwrap();
            assert_eq!(
                canonical_certificate(&g).unwrap(),
                entry.certificate(),
                "{}",
                entry.name
            );
        }
    }

    #[test]
    fn block_counts() {
        // K4; then theta-like blocks with a fourth path or chord
        assert_eq!(rank3_blocks(3).len(), 0);
        assert_eq!(rank3_blocks(4).len(), 1);
        for b in 4..=8 {
            for g in rank3_blocks(b) {
                assert_eq!(g.n(), b);
                assert_eq!(g.cycle_rank().unwrap(), 3);
                assert!(g.cutpoints().unwrap().is_empty());
            }
        }
    }
}
