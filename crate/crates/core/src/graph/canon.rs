//! Canonical labelling by individualisation and refinement.
//!
//! The search tree branches on the first non-singleton cell of an equitable
//! ordered partition. Every leaf gives a relabelling of the input; the
//! canonical form is the relabelled graph with the largest adjacency key.
//! Leaves that reproduce the first or best graph yield automorphisms, which
//! prune siblings in the same orbit of the pointwise stabiliser of the
//! current prefix.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{encode_graph6, Bits, Graph};
use crate::error::GraphError;

/// Largest graph accepted by the canonicaliser (the graph6 short form).
pub const MAX_CANON_VERTICES: usize = 62;

/// Isomorphism-invariant encoding: the graph6 line of the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Certificate(String);

impl Certificate {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// Wraps a graph6 line that is already the canonical form of its graph.
    /// Only the character range is checked.
    pub fn from_canonical_graph6(line: &str) -> Result<Self, String> {
        if line.is_empty() || !line.bytes().all(|b| (63..=126).contains(&b)) {
            return Err(format!("not a graph6 line: {line:?}"));
        }
        Ok(Certificate(line.to_owned()))
    }
}

impl From<Certificate> for String {
    fn from(c: Certificate) -> String {
        c.0
    }
}

impl TryFrom<String> for Certificate {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        Certificate::from_canonical_graph6(&s)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.0)
    }
}

/// Returns the canonical graph and the relabelling `perm` with
/// `g.permute(&perm) == canonical`.
pub fn canonical_form(g: &Graph) -> Result<(Graph, Vec<usize>), GraphError> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(GraphError::CanonTooLarge {
            n,
            limit: MAX_CANON_VERTICES,
        });
    }
    if n <= 1 {
        return Ok((g.clone(), (0..n).collect()));
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let root = refine(g, vec![VertexMask(g.vertices().0)]);
    search.descend(root, Vec::new());
    let best = search.best.expect("search visits at least one leaf");
    Ok((best.graph, best.perm))
}

pub fn canonical_certificate(g: &Graph) -> Result<Certificate, GraphError> {
    let (canon, _) = canonical_form(g)?;
    let line = encode_graph6(&canon).expect("size checked by canonical_form");
    Ok(Certificate(line))
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct VertexMask(u64);

impl VertexMask {
    fn len(self) -> usize {
        self.0.count_ones() as usize
    }
}

#[derive(Clone)]
struct Leaf {
    prefix: Vec<usize>,
    perm: Vec<usize>,
    graph: Graph,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree below `cells`. `Some(level)` asks the caller to
    /// unwind until the node at depth `level`, whose current child subtree is
    /// an automorphic image of one already explored.
    fn descend(&mut self, cells: Vec<VertexMask>, prefix: Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let depth = prefix.len();
        let mut tried = 0u64;
        for v in Bits(cells[target].0) {
            if tried != 0 && self.same_orbit_as_tried(v, tried, &prefix) {
                continue;
            }
            tried |= 1u64 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(VertexMask(1u64 << v));
            child.push(VertexMask(cells[target].0 & !(1u64 << v)));
            child.extend_from_slice(&cells[target + 1..]);
            let mut next = prefix.clone();
            next.push(v);
            if let Some(level) = self.descend(refine(self.g, child), next) {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[VertexMask], prefix: Vec<usize>) -> Option<usize> {
        let mut perm = vec![0; self.g.n()];
        for (pos, c) in cells.iter().enumerate() {
            perm[c.0.trailing_zeros() as usize] = pos;
        }
        let graph = self.g.permute(&perm);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                prefix,
                perm,
                graph,
            };
            self.best = Some(leaf.clone());
            self.first = Some(leaf);
            return None;
        };
        if graph == first.graph {
            let level = divergence(&first.prefix, &prefix);
            let auto = automorphism(&first.perm, &perm);
            self.autos.push(auto);
            return Some(level);
        }
        let best = self.best.as_ref().expect("set with first");
        match graph.rows().cmp(best.graph.rows()) {
            std::cmp::Ordering::Equal => {
                let level = divergence(&best.prefix, &prefix);
                let auto = automorphism(&best.perm, &perm);
                self.autos.push(auto);
                Some(level)
            }
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf {
                    prefix,
                    perm,
                    graph,
                });
                None
            }
            std::cmp::Ordering::Less => None,
        }
    }

    /// Whether `v` shares an orbit with a vertex of `tried` under the
    /// stored automorphisms that fix `prefix` pointwise.
    fn same_orbit_as_tried(&self, v: usize, tried: u64, prefix: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut orbit = 1u64 << v;
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for u in Bits(frontier) {
                for a in &gens {
                    next |= 1u64 << a[u];
                }
            }
            frontier = next & !orbit;
            orbit |= next;
        }
        orbit & tried != 0
    }
}

fn divergence(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Maps `v` to the vertex that `b` places where `a` places `v`.
fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut b_inv = vec![0; b.len()];
    for (v, &p) in b.iter().enumerate() {
        b_inv[p] = v;
    }
    a.iter().map(|&p| b_inv[p]).collect()
}

/// Refines an ordered partition to the coarsest equitable one below it.
/// Each cell splits by the vector of neighbour counts into all cells, the
/// pieces ordered by that vector, so the result commutes with relabelling.
fn refine(g: &Graph, mut cells: Vec<VertexMask>) -> Vec<VertexMask> {
    let n = g.n();
    let mut sig: Vec<Vec<u8>> = vec![Vec::new(); n];
    loop {
        if cells.len() == n {
            return cells;
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(n);
        for &cell in &cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut members: Vec<usize> = Bits(cell.0).collect();
            for &v in &members {
                let row = g.rows()[v];
                sig[v].clear();
                sig[v].extend(cells.iter().map(|c| (row & c.0).count_ones() as u8));
            }
            members.sort_by(|&a, &b| sig[a].cmp(&sig[b]));
            let mut current = 0u64;
            let mut prev: Option<usize> = None;
            for v in members {
                if let Some(p) = prev {
                    if sig[p] != sig[v] {
                        next.push(VertexMask(current));
                        current = 0;
                    }
                }
                current |= 1u64 << v;
                prev = Some(v);
            }
            next.push(VertexMask(current));
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    #[test]
    fn path_relabelled() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(
            canonical_certificate(&a).unwrap(),
            canonical_certificate(&b).unwrap()
        );
        let k3 = Graph::complete(3).unwrap();
        assert_ne!(
            canonical_certificate(&a).unwrap(),
            canonical_certificate(&k3).unwrap()
        );
    }

    #[test]
    fn form_matches_permutation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=12 {
            let g = random_graph(&mut rng, n, 0.4);
            let (canon, perm) = canonical_form(&g).unwrap();
            assert_eq!(g.permute(&perm), canon);
        }
    }

    #[test]
    fn invariant_under_random_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=20);
            let p = rng.gen_range(0.05..0.95);
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(
                canonical_certificate(&g).unwrap(),
                canonical_certificate(&g.permute(&perm)).unwrap(),
                "{g:?}"
            );
        }
    }

    #[test]
    fn highly_symmetric_graphs() {
        for n in [10, 30, 62] {
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_form(&k).unwrap().0, k);
            let c = Graph::cycle(n).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.reverse();
            perm.swap(0, n / 2);
            assert_eq!(
                canonical_certificate(&c).unwrap(),
                canonical_certificate(&c.permute(&perm)).unwrap()
            );
        }
        // Petersen graph: vertex-transitive, refinement does nothing
        let mut p = Graph::empty(10).unwrap();
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5);
            p.add_edge(i, i + 5);
            p.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        let q = p.permute(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert_eq!(
            canonical_certificate(&p).unwrap(),
            canonical_certificate(&q).unwrap()
        );
    }

    #[test]
    fn too_large() {
        let g = Graph::empty(63).unwrap();
        assert!(matches!(
            canonical_form(&g),
            Err(GraphError::CanonTooLarge { n: 63, limit: 62 })
        ));
    }

    #[test]
    fn certificate_serde() {
        let c = canonical_certificate(&Graph::complete(3).unwrap()).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, "\"Bw\"");
        assert_eq!(serde_json::from_str::<Certificate>(&json).unwrap(), c);
        assert!(serde_json::from_str::<Certificate>("\"\"").is_err());
    }
}
