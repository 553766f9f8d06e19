//! Serre's condition (S2) through links of the initial complex: the complex
//! is (S2) exactly when every face whose link has dimension at least one has
//! a connected link.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{initial_complex, FacetComplex, SymbolSet};
use crate::error::ComplexError;
use crate::graph::{Graph, VertexSet};
use crate::ideal::unmixed_witness;

/// `lk(f)`: the maximal sets among `F \ f` over facets `F ⊇ f`.
pub fn link(c: &FacetComplex, f: SymbolSet) -> Result<FacetComplex, ComplexError> {
    let residues: Vec<SymbolSet> = c
        .facets
        .iter()
        .filter(|&&k| f.is_subset(k))
        .map(|k| SymbolSet(k.0 & !f.0))
        .collect();
    if residues.is_empty() {
        return Err(ComplexError::NotAFace(f.display(c.n)));
    }
    Ok(FacetComplex::from_sets(c.n, residues))
}

/// Which faces get their links inspected.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceStrategy {
    /// Faces that are intersections of facets. Any other face `f` lies in
    /// the intersection `f'` of the facets containing it with `f ⊊ f'`,
    /// so every facet of `lk(f)` contains `f' \ f` and the link is a cone.
    #[default]
    Intersections,
    /// Every face, each subset of each facet once.
    Exhaustive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct S2Options {
    pub strategy: FaceStrategy,
    /// Skip faces whose `y`-indices all precede their `x`-indices and whose
    /// size is at most `n - 1`; their links are connected once `J_G` is
    /// unmixed.
    pub prune_monotone: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "witness", rename_all = "snake_case")]
pub enum S2Verdict {
    Holds,
    /// (S2) fails for mixed ideals; the cutset shows the mixed dimension.
    NotUnmixed(VertexSet),
    /// A smallest face with a disconnected link of dimension at least one;
    /// among those, the lex-smallest monomial.
    DisconnectedLink(SymbolSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct S2Report {
    pub verdict: S2Verdict,
    pub faces_checked: usize,
    pub faces_pruned: usize,
    /// Disconnected links at faces with `dim F < ⌊(n + 1) / 2⌋`. Observed
    /// to be zero on unmixed graphs with `n ≤ 12`; reported, never relied on.
    pub low_dim_disconnected: usize,
}

impl S2Report {
    pub fn holds(&self) -> bool {
        self.verdict == S2Verdict::Holds
    }
}

pub fn is_s2(g: &Graph) -> bool {
    s2_report(g, &S2Options::default()).holds()
}

pub fn s2_report(g: &Graph, opts: &S2Options) -> S2Report {
    if let Some(t) = unmixed_witness(g) {
        return S2Report {
            verdict: S2Verdict::NotUnmixed(t),
            faces_checked: 0,
            faces_pruned: 0,
            low_dim_disconnected: 0,
        };
    }
    let c = initial_complex(g);
    let n = c.n;
    let candidates: Vec<u128> = match opts.strategy {
        FaceStrategy::Intersections => intersections(&c),
        FaceStrategy::Exhaustive => c.faces().into_iter().map(|f| f.0).collect(),
    };
    let threshold = n.div_ceil(2);
    let mut report = S2Report {
        verdict: S2Verdict::Holds,
        faces_checked: 0,
        faces_pruned: 0,
        low_dim_disconnected: 0,
    };
    let mut worst: Option<SymbolSet> = None;
    let mut residues = Vec::new();
    for f in candidates {
        if opts.prune_monotone && monotone_split(SymbolSet(f), n) {
            report.faces_pruned += 1;
            continue;
        }
        report.faces_checked += 1;
        residues.clear();
        residues.extend(c.facets.iter().filter(|k| k.0 & f == f).map(|k| k.0 & !f));
        if link_is_fine(&residues) {
            continue;
        }
        let face = SymbolSet(f);
        // dim F = |F| - 1
        if face.len() < threshold + 1 {
            report.low_dim_disconnected += 1;
        }
        if worst.is_none_or(|w| precedes(face, w)) {
            worst = Some(face);
        }
    }
    if let Some(w) = worst {
        report.verdict = S2Verdict::DisconnectedLink(w);
    }
    report
}

/// Smaller size first; equal sizes compare as monomials in lex order,
/// where the lowest differing bit is the largest differing variable.
fn precedes(a: SymbolSet, b: SymbolSet) -> bool {
    if a.len() != b.len() {
        return a.len() < b.len();
    }
    let diff = a.0 ^ b.0;
    diff != 0 && a.0 & diff & diff.wrapping_neg() == 0
}

/// All intersections of sets of facets, the facets themselves included.
fn intersections(c: &FacetComplex) -> Vec<u128> {
    let mut seen: HashSet<u128> = c.facets.iter().map(|f| f.0).collect();
    let mut queue: Vec<u128> = seen.iter().copied().collect();
    while let Some(x) = queue.pop() {
        for f in &c.facets {
            let y = x & f.0;
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// `y`-indices all below `x`-indices and `|F| ≤ n - 1`.
fn monotone_split(f: SymbolSet, n: usize) -> bool {
    if f.len() + 1 > n {
        return false;
    }
    let xs = f.x_support(n);
    let ys = f.y_support(n);
    match (ys.iter().last(), xs.first()) {
        (Some(top_y), Some(low_x)) => top_y < low_x,
        _ => true,
    }
}

/// True when the link with these facets has dimension below one or is
/// connected. The residues of distinct facets are pairwise incomparable,
/// so they are exactly the link's facets.
fn link_is_fine(residues: &[u128]) -> bool {
    if residues.iter().all(|r| r.count_ones() < 2) {
        return true;
    }
    let mut reached = residues[0];
    let mut joined = vec![false; residues.len()];
    joined[0] = true;
    let mut left = residues.len() - 1;
    loop {
        let mut grew = false;
        for (k, &r) in residues.iter().enumerate() {
            if !joined[k] && r & reached != 0 {
                joined[k] = true;
                reached |= r;
                left -= 1;
                grew = true;
            }
        }
        if left == 0 {
            return true;
        }
        if !grew {
            return false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::tests::sets;

    fn star_graph() -> Graph {
        let mut g = Graph::empty(7).unwrap();
        for a in 4..7 {
            for b in a + 1..7 {
                g.add_edge(a, b);
            }
            for leaf in 0..4 {
                g.add_edge(leaf, a);
            }
        }
        g
    }

    #[test]
    fn link_basics() {
        let c = initial_complex(&Graph::path(3).unwrap());
        assert_eq!(link(&c, SymbolSet::EMPTY).unwrap(), c);
        let facet = c.facets[0];
        assert_eq!(link(&c, facet).unwrap().facets, vec![SymbolSet::EMPTY]);
        let missing = SymbolSet::parse(3, "x0 y1").unwrap();
        assert!(matches!(link(&c, missing), Err(ComplexError::NotAFace(_))));
    }

    #[test]
    fn star_graph_link_splits() {
        let g = star_graph();
        let c = initial_complex(&g);
        let f = SymbolSet::parse(7, "y0 y1 y2 y3 x3").unwrap();
        let lk = link(&c, f).unwrap();
        assert_eq!(lk.facets, sets(7, &["x4 x5 x6", "x0 x1 x2"]));
        let report = s2_report(&g, &S2Options::default());
        assert_eq!(report.verdict, S2Verdict::DisconnectedLink(f));
    }

    #[test]
    fn small_graphs_are_s2() {
        assert!(is_s2(&Graph::path(3).unwrap()));
        for n in 1..=5 {
            assert!(is_s2(&Graph::complete(n).unwrap()));
        }
        assert!(!is_s2(&Graph::cycle(4).unwrap()));
    }

    #[test]
    fn strategies_agree_on_star_graph() {
        let g = star_graph();
        let fast = s2_report(&g, &S2Options::default());
        let slow = s2_report(
            &g,
            &S2Options {
                strategy: FaceStrategy::Exhaustive,
                prune_monotone: false,
            },
        );
        let pruned = s2_report(
            &g,
            &S2Options {
                strategy: FaceStrategy::Exhaustive,
                prune_monotone: true,
            },
        );
        assert_eq!(fast.verdict, slow.verdict);
        assert_eq!(pruned.verdict, slow.verdict);
        assert!(pruned.faces_pruned > 0);
        assert!(fast.faces_checked < slow.faces_checked);
    }
}
