//! Admissible paths and the lead terms of the reduced Gröbner basis.

use super::{MonomialSet, SymbolSet};
use crate::graph::{Bits, Graph};

/// A path `i = p_0, …, p_r = j` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePath {
    pub vertices: Vec<usize>,
}

impl AdmissiblePath {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// `x_i y_j · ∏_{k > j} x_k · ∏_{k < i} y_k` over interior `k`.
    pub fn lead_monomial(&self, n: usize) -> SymbolSet {
        let (i, j) = (self.start(), self.end());
        let mut m = 1u128 << i | 1u128 << (n + j);
        for &k in self.interior() {
            if k > j {
                m |= 1u128 << k;
            } else {
                m |= 1u128 << (n + k);
            }
        }
        SymbolSet(m)
    }
}

/// Conditions of admissibility for `path` from `i` to `j`, `i < j`:
/// distinct vertices, consecutive ones adjacent, interior vertices outside
/// `[i, j]`, and no proper subset of the interior linking `i` to `j`.
/// The last holds exactly when dropping any single interior vertex
/// disconnects `i` from `j` inside the remaining vertices.
pub fn is_admissible(g: &Graph, path: &[usize]) -> bool {
    let (Some(&i), Some(&j)) = (path.first(), path.last()) else {
        return false;
    };
    if path.len() < 2 || i >= j {
        return false;
    }
    let mut seen = 0u64;
    for &v in path {
        if seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1u64 << v;
    }
    if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return false;
    }
    let interior = &path[1..path.len() - 1];
    if interior.iter().any(|&k| i < k && k < j) {
        return false;
    }
    interior.iter().all(|&k| {
        let within = seen & !(1u64 << k);
        g.reach(i, within) >> j & 1 == 0
    })
}

/// Every admissible path, grouped by `(i, j)` in increasing order.
///
/// Dropping one interior vertex must separate the endpoints, so an
/// admissible path has no chords; the search only grows chordless paths
/// through vertices outside `[i, j]`.
pub fn admissible_paths(g: &Graph) -> Vec<AdmissiblePath> {
    let n = g.n();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(n);
    for i in 0..n {
        for j in i + 1..n {
            let below = (1u64 << i) - 1;
            let above = g.vertices().0 & !((2u64 << j).wrapping_sub(1));
            let allowed = below | above;
            stack.clear();
            stack.push(i);
            grow(g, j, allowed, 1u64 << i, &mut stack, &mut out);
        }
    }
    out
}

fn grow(
    g: &Graph,
    j: usize,
    allowed: u64,
    on_path: u64,
    stack: &mut Vec<usize>,
    out: &mut Vec<AdmissiblePath>,
) {
    let last = *stack.last().expect("path holds its start");
    let earlier = on_path & !(1u64 << last);
    let adj = g.rows();
    if adj[last] >> j & 1 == 1 {
        // j adjacent to an earlier vertex would be a chord
        if adj[j] & earlier == 0 {
            stack.push(j);
            debug_assert!(is_admissible(g, stack));
            out.push(AdmissiblePath {
                vertices: stack.clone(),
            });
            stack.pop();
        }
        // continuing past a neighbour of j leaves the chord to j behind
        return;
    }
    for u in Bits(adj[last] & allowed & !on_path) {
        if adj[u] & earlier != 0 {
            continue;
        }
        stack.push(u);
        grow(g, j, allowed, on_path | 1u64 << u, stack, out);
        stack.pop();
    }
}

/// The minimal lead monomials `x_i y_j u_π` over admissible paths `π`.
pub fn admissible_initial_generators(g: &Graph) -> MonomialSet {
    let n = g.n();
    let all = admissible_paths(g)
        .iter()
        .map(|p| p.lead_monomial(n))
        .collect();
    MonomialSet::minimal(n, all)
}
