//! Cutset combinatorics of binomial edge ideals.
//!
//! `T` is a cutset when `c(T \ {v}) < c(T)` for every `v ∈ T`, where `c`
//! counts connected components after deletion. The minimal primes of `J_G`
//! are indexed by cutsets and `dim S/P_T = n + c(T) - |T|`, so `J_G` is
//! unmixed exactly when `c(T) - |T|` takes the same value on every cutset
//! (`1` for a connected graph).

mod decompose;
mod strong;

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

pub use decompose::{decompose, is_decomposable, DecompositionTree, Glue, Piece};
pub use strong::{is_strongly_unmixed, SuCache, DEFAULT_CACHE_CAPACITY};

use crate::graph::{Bits, Graph, Partition, VertexSet};

/// A cutset together with the components of `G \ T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cutset {
    pub set: VertexSet,
    pub parts: Partition,
}

impl Cutset {
    /// `c(T)`.
    pub fn c(&self) -> usize {
        self.parts.len()
    }
}

/// `C(G)`, sorted by size and then by mask.
#[derive(Clone, Debug)]
pub struct CutsetFamily {
    pub ground: Graph,
    pub sets: Vec<Cutset>,
}

impl CutsetFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cutset> {
        self.sets.iter()
    }

    pub fn masks(&self) -> Vec<VertexSet> {
        self.sets.iter().map(|c| c.set).collect()
    }

    pub fn contains(&self, t: VertexSet) -> bool {
        self.sets
            .binary_search_by(|c| (c.set.len(), c.set).cmp(&(t.len(), t)))
            .is_ok()
    }
}

/// Outcome of the accessibility test, with the smallest failing cutset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "witness", rename_all = "snake_case")]
pub enum Accessibility {
    Accessible,
    /// A cutset with the wrong number of components.
    NotUnmixed(VertexSet),
    /// A nonempty cutset none of whose one-point deletions is a cutset.
    NotAccessible(VertexSet),
}

impl Accessibility {
    pub fn is_accessible(self) -> bool {
        self == Accessibility::Accessible
    }

    pub fn is_unmixed(self) -> bool {
        !matches!(self, Accessibility::NotUnmixed(_))
    }

    pub fn witness(self) -> Option<VertexSet> {
        match self {
            Accessibility::Accessible => None,
            Accessibility::NotUnmixed(t) | Accessibility::NotAccessible(t) => Some(t),
        }
    }
}

/// Every `v ∈ t` has neighbours in at least two components of `G \ t`.
///
/// Putting `v` back merges the `k_v` components it touches into one, so
/// `c(T \ {v}) = c(T) - k_v + 1` and the cutset condition is `k_v ≥ 2`.
pub fn is_cutset(g: &Graph, t: VertexSet) -> bool {
    cutset_component_count(g, t.0).is_some()
}

/// The literal definition: `c(T \ {v}) < c(T)` for every `v ∈ T`.
pub fn is_cutset_by_definition(g: &Graph, t: VertexSet) -> bool {
    let c = g.component_count(t);
    t.iter().all(|v| g.component_count(t.without(v)) < c)
}

/// `Some(c(T))` when `t` is a cutset.
///
/// Components are grown from the neighbours of `T` only as far as needed to
/// see whether some member touches a single component; the rest of
/// `G \ T` is counted once `T` is known to be a cutset.
#[inline]
pub(crate) fn cutset_component_count(g: &Graph, t: u64) -> Option<usize> {
    let adj = g.rows();
    let outside = g.vertices().0 & !t;
    for v in Bits(t) {
        if (adj[v] & outside).count_ones() < 2 {
            return None;
        }
    }
    // the first few explored components; later ones are regrown on demand
    let mut comps = [0u64; 8];
    let mut c = 0;
    let mut covered = 0u64;
    for v in Bits(t) {
        let nb = adj[v] & outside;
        let fresh = nb & !covered;
        if fresh == 0 {
            let low = nb & nb.wrapping_neg();
            let comp = match comps[..c.min(comps.len())].iter().find(|&&k| k & low != 0) {
                Some(&k) => k,
                None => g.reach(low.trailing_zeros() as usize, outside),
            };
            if nb & !comp == 0 {
                return None;
            }
        } else if fresh == nb {
            let comp = g.reach(fresh.trailing_zeros() as usize, outside);
            if let Some(slot) = comps.get_mut(c) {
                *slot = comp;
            }
            c += 1;
            covered |= comp;
            if nb & !comp == 0 {
                return None;
            }
        }
        // otherwise v meets an explored component and an unexplored one
    }
    let mut rest = outside & !covered;
    while rest != 0 {
        rest &= !g.reach(rest.trailing_zeros() as usize, rest);
        c += 1;
    }
    Some(c)
}

/// Visits every cutset with its component count in (size, mask) order,
/// stopping at the first `Break`.
///
/// A simplicial vertex has its remaining neighbours inside one clique, so it
/// never lies in a cutset; only subsets of the non-simplicial vertices are
/// tried.
pub(crate) fn scan_cutsets<B>(
    g: &Graph,
    mut visit: impl FnMut(VertexSet, usize) -> ControlFlow<B>,
) -> Option<B> {
    let mut pool = [0u8; 64];
    let mut k = 0;
    for v in g.non_simplicial().iter() {
        pool[k] = v as u8;
        k += 1;
    }
    let pool = &pool[..k];
    let limit = 1u128 << k;
    for size in 0..=k {
        let mut sub = (1u128 << size) - 1;
        while sub < limit {
            let t = expand(sub as u64, pool);
            if let Some(c) = cutset_component_count(g, t) {
                if let ControlFlow::Break(b) = visit(VertexSet(t), c) {
                    return Some(b);
                }
            }
            if sub == 0 {
                break;
            }
            // next subset of the same size (Gosper)
            let low = sub & sub.wrapping_neg();
            let ripple = sub + low;
            sub = (((ripple ^ sub) >> 2) / low) | ripple;
        }
    }
    None
}

#[inline]
fn expand(sub: u64, pool: &[u8]) -> u64 {
    let mut t = 0u64;
    for i in Bits(sub) {
        t |= 1u64 << pool[i];
    }
    t
}

/// All cutsets of `g` with their component partitions.
pub fn cutsets(g: &Graph) -> CutsetFamily {
    let mut sets = Vec::new();
    scan_cutsets::<()>(g, |t, _| {
        sets.push(Cutset {
            set: t,
            parts: g.components(t),
        });
        ControlFlow::Continue(())
    });
    CutsetFamily {
        ground: g.clone(),
        sets,
    }
}

/// The smallest cutset `T` with `c(T) - |T| ≠ c(∅)`, if any.
pub fn unmixed_witness(g: &Graph) -> Option<VertexSet> {
    let base = g.component_count(VertexSet::EMPTY);
    scan_cutsets(g, |t, c| {
        if c == t.len() + base {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(t)
        }
    })
}

/// `J_G` is unmixed: `c(T) = |T| + 1` on every cutset of a connected graph
/// (componentwise for a disconnected one).
pub fn is_unmixed(g: &Graph) -> bool {
    unmixed_witness(g).is_none()
}

pub fn accessibility(g: &Graph) -> Accessibility {
    let base = g.component_count(VertexSet::EMPTY);
    let mut found: Vec<VertexSet> = Vec::new();
    if let Some(t) = scan_cutsets(g, |t, c| {
        if c != t.len() + base {
            return ControlFlow::Break(t);
        }
        found.push(t);
        ControlFlow::Continue(())
    }) {
        return Accessibility::NotUnmixed(t);
    }
    let members: HashSet<u64> = found.iter().map(|t| t.0).collect();
    for &t in &found[1..] {
        if !t.iter().any(|v| members.contains(&t.without(v).0)) {
            return Accessibility::NotAccessible(t);
        }
    }
    Accessibility::Accessible
}

/// Unmixed, and every nonempty cutset `T` has some `t` with `T \ {t}` a
/// cutset.
pub fn is_accessible(g: &Graph) -> bool {
    accessibility(g).is_accessible()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Four copies of `K4` sharing the triangle `{4,5,6}`.
    pub(crate) fn star_graph() -> Graph {
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

    fn masks(g: &Graph) -> Vec<VertexSet> {
        cutsets(g).masks()
    }

    #[test]
    fn path_cutsets() {
        let p = Graph::path(3).unwrap();
        assert!(is_cutset(&p, VertexSet::from([1])));
        assert!(!is_cutset(&p, VertexSet::from([0])));
        assert_eq!(masks(&p), vec![VertexSet::EMPTY, VertexSet::from([1])]);
    }

    #[test]
    fn complete_has_only_empty_cutset() {
        let k = Graph::complete(5).unwrap();
        assert_eq!(masks(&k), vec![VertexSet::EMPTY]);
        for t in 1..32u64 {
            assert!(!is_cutset(&k, VertexSet(t)));
        }
        assert!(is_unmixed(&k));
        assert!(is_accessible(&k));
    }

    #[test]
    fn c4_cutsets() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            masks(&c4),
            vec![
                VertexSet::EMPTY,
                VertexSet::from([0, 2]),
                VertexSet::from([1, 3])
            ]
        );
        assert_eq!(unmixed_witness(&c4), Some(VertexSet::from([0, 2])));
        assert_eq!(
            accessibility(&c4),
            Accessibility::NotUnmixed(VertexSet::from([0, 2]))
        );
    }

    #[test]
    fn star_graph_is_unmixed_not_accessible() {
        let g = star_graph();
        let fam = cutsets(&g);
        assert_eq!(
            fam.masks(),
            vec![VertexSet::EMPTY, VertexSet::from([4, 5, 6])]
        );
        assert_eq!(fam.sets[1].c(), 4);
        assert!(is_unmixed(&g));
        assert_eq!(
            accessibility(&g),
            Accessibility::NotAccessible(VertexSet::from([4, 5, 6]))
        );
    }

    #[test]
    fn k4_with_whisker_accessible() {
        let mut g = Graph::complete(4).unwrap();
        let w = g.add_vertex().unwrap();
        g.add_edge(0, w);
        assert!(is_accessible(&g));
    }

    #[test]
    fn family_lookup() {
        let fam = cutsets(&Graph::cycle(4).unwrap());
        assert!(fam.contains(VertexSet::from([1, 3])));
        assert!(!fam.contains(VertexSet::from([1, 2])));
    }

    #[test]
    fn disconnected_unmixed_is_componentwise() {
        let two = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::path(3).unwrap())
            .unwrap();
        assert!(is_unmixed(&two));
        let bad = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::cycle(4).unwrap())
            .unwrap();
        assert!(!is_unmixed(&bad));
    }

    #[test]
    fn accessibility_serde() {
        let a = Accessibility::NotAccessible(VertexSet::from([4, 5, 6]));
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"kind":"not_accessible","witness":[4,5,6]}"#);
    }
}
