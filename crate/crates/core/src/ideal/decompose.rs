//! Splitting a graph at vertices that are free on both sides.
//!
//! `G` decomposes at `v` when `G = G_1 ∪ G_2` with `V(G_1) ∩ V(G_2) = {v}`
//! and `v` free (simplicial) in both halves. Vertices in different
//! components of `G \ v` are not adjacent, so each half holds exactly one
//! component of `G \ v` and `N(v)` restricted to it must be a clique.

use crate::graph::{Graph, VertexSet};

/// An indecomposable piece with the original label of each local vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl Piece {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

/// Pieces `a` and `b` share the original vertex `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Glue {
    pub a: usize,
    pub b: usize,
    pub vertex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTree {
    pub pieces: Vec<Piece>,
    pub glue: Vec<Glue>,
}

impl DecompositionTree {
    pub fn is_trivial(&self) -> bool {
        self.pieces.len() == 1
    }

    /// Union of the pieces on the original labels.
    pub fn reassemble(&self, n: usize) -> Graph {
        let mut g = Graph::empty(n).expect("pieces come from a valid graph");
        for p in &self.pieces {
            for (a, b) in p.graph.edges() {
                g.add_edge(p.vertices[a], p.vertices[b]);
            }
        }
        g
    }
}

/// First vertex at which the induced subgraph on `within` decomposes, with
/// the two sides (each including the vertex).
fn split_point(g: &Graph, within: VertexSet) -> Option<(usize, VertexSet, VertexSet)> {
    let (h, map) = g.induced_subgraph(within);
    for v in h.cutpoints_unchecked() {
        let parts = h.components(VertexSet::singleton(v));
        if parts.len() != 2 {
            continue;
        }
        let nb = h.neighbors(v);
        if parts.iter().all(|p| h.is_clique(nb.intersection(p))) {
            let lift = |s: VertexSet| -> VertexSet { s.iter().map(|i| map[i]).collect() };
            let side = |p: VertexSet| lift(p.with(v));
            return Some((map[v], side(parts.parts[0]), side(parts.parts[1])));
        }
    }
    None
}

pub fn is_decomposable(g: &Graph) -> bool {
    split_point(g, g.vertices()).is_some()
}

/// Splits `g` until no piece decomposes. Pieces appear in the order the
/// recursion reaches them (side containing the smaller labels first).
pub fn decompose(g: &Graph) -> DecompositionTree {
    let mut tree = DecompositionTree {
        pieces: Vec::new(),
        glue: Vec::new(),
    };
    split_into(g, g.vertices(), &mut tree);
    tree
}

fn split_into(g: &Graph, within: VertexSet, tree: &mut DecompositionTree) {
    match split_point(g, within) {
        None => {
            let (graph, vertices) = g.induced_subgraph(within);
            tree.pieces.push(Piece { graph, vertices });
        }
        Some((v, left, right)) => {
            let start = tree.pieces.len();
            split_into(g, left, tree);
            let mid = tree.pieces.len();
            split_into(g, right, tree);
            // v is free on each side, hence not a split point there, so it
            // lands in exactly one piece per side
            let holder = |range: std::ops::Range<usize>, tree: &DecompositionTree| {
                range
                    .into_iter()
                    .find(|&i| tree.pieces[i].vertices.contains(&v))
                    .expect("shared vertex survives on each side")
            };
            let a = holder(start..mid, tree);
            let b = holder(mid..tree.pieces.len(), tree);
            tree.glue.push(Glue { a, b, vertex: v });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_with_whisker() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let t = decompose(&g);
        assert_eq!(t.pieces.len(), 2);
        assert_eq!(t.pieces[0].graph, Graph::complete(3).unwrap());
        assert_eq!(t.pieces[0].vertices, vec![0, 1, 2]);
        assert_eq!(t.pieces[1].graph, Graph::complete(2).unwrap());
        assert_eq!(t.pieces[1].vertices, vec![2, 3]);
        assert_eq!(
            t.glue,
            vec![Glue {
                a: 0,
                b: 1,
                vertex: 2
            }]
        );
        assert_eq!(t.reassemble(4), g);
    }

    #[test]
    fn complete_is_one_piece() {
        let k4 = Graph::complete(4).unwrap();
        let t = decompose(&k4);
        assert!(t.is_trivial());
        assert_eq!(t.pieces[0].graph, k4);
        assert!(!is_decomposable(&k4));
    }

    #[test]
    fn long_path_splits_into_edges() {
        let p = Graph::path(5).unwrap();
        let t = decompose(&p);
        assert_eq!(t.pieces.len(), 4);
        assert!(t
            .pieces
            .iter()
            .all(|p| p.graph == Graph::complete(2).unwrap()));
        assert_eq!(t.glue.len(), 3);
        assert_eq!(t.reassemble(5), p);
    }

    #[test]
    fn non_free_cutpoint_does_not_split() {
        // the centre of K_{1,3} separates three components
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_decomposable(&star));
        // two C4s sharing a vertex: neighbourhoods are not cliques
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (5, 6),
                (6, 0),
            ],
        )
        .unwrap();
        assert!(!is_decomposable(&g));
    }
}
