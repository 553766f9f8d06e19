//! Simple undirected graphs on at most 64 vertices with one adjacency word
//! per vertex, plus the structural queries the ideal-theoretic layers need.

mod canon;
mod codec;
mod set;

use std::fmt;

pub use canon::{canonical_certificate, canonical_form, Certificate, MAX_CANON_VERTICES};
pub use codec::{decode_edge_list, decode_graph6, encode_edge_list, encode_graph6};
pub use set::{Bits, Partition, VertexSet};

use crate::error::GraphError;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A finite simple graph on vertices `0..n`.
///
/// Row `i` of the adjacency holds `N(i)`. Rows are kept symmetric and
/// loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// A block of a graph together with the original label of each of its
/// vertices (`vertices[i]` is the label of local vertex `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl Block {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edges(n, &edges)
    }

    /// Builds a graph from raw rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let outside = !VertexSet::full(n).0;
        for (i, &r) in rows.iter().enumerate() {
            if r >> i & 1 == 1 {
                return Err(GraphError::SelfLoop(i));
            }
            if r & outside != 0 {
                let v = (r & outside).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            for j in Bits(r) {
                if rows[j] >> i & 1 == 0 {
                    return Err(GraphError::Asymmetric(i, j));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & above(u)).map(move |v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange { v, n: self.n }),
            None => Ok(()),
        }
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    /// Adds `{u, v}`. Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    /// Appends a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize, GraphError> {
        if self.n == MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        self.adj.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    #[inline]
    pub fn is_clique(&self, s: VertexSet) -> bool {
        Bits(s.0).all(|v| s.0 & !(1u64 << v) & !self.adj[v] == 0)
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// `N(v)` is a clique, i.e. `v` is a free vertex.
    #[inline]
    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(self.neighbors(v))
    }

    /// Vertices whose neighbourhood is not a clique.
    pub fn non_simplicial(&self) -> VertexSet {
        (0..self.n).filter(|&v| !self.is_simplicial(v)).collect()
    }

    /// The component of `start` inside the vertex set `within`.
    #[inline]
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut nb = 0u64;
            for v in Bits(frontier) {
                nb |= self.adj[v];
            }
            frontier = nb & within & !comp;
            comp |= frontier;
        }
        comp
    }

    /// Connected components of `G \ removed`, ordered by smallest vertex.
    pub fn components(&self, removed: VertexSet) -> Partition {
        let mut rest = self.vertices().0 & !removed.0;
        let mut parts = Vec::new();
        while rest != 0 {
            let comp = self.reach(rest.trailing_zeros() as usize, rest);
            parts.push(VertexSet(comp));
            rest &= !comp;
        }
        Partition { parts }
    }

    /// Number of connected components of `G \ removed`.
    pub fn component_count(&self, removed: VertexSet) -> usize {
        let mut rest = self.vertices().0 & !removed.0;
        let mut c = 0;
        while rest != 0 {
            rest &= !self.reach(rest.trailing_zeros() as usize, rest);
            c += 1;
        }
        c
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices().0) == self.vertices().0
    }

    fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cutpoints(&self) -> Result<VertexSet, GraphError> {
        self.require_connected()?;
        Ok(self.cutpoints_unchecked())
    }

    /// Cutpoints of every component; no connectivity requirement.
    pub(crate) fn cutpoints_unchecked(&self) -> VertexSet {
        let mut cut = VertexSet::EMPTY;
        for v in 0..self.n {
            let nb = self.adj[v];
            if nb.count_ones() < 2 {
                continue;
            }
            // v separates its component iff its neighbours fall apart without it
            let within = self.vertices().0 & !(1u64 << v);
            let reached = self.reach(nb.trailing_zeros() as usize, within);
            if nb & !reached != 0 {
                cut.insert(v);
            }
        }
        cut
    }

    /// Blocks (maximal 2-connected subgraphs, bridges, or an isolated
    /// vertex for `n == 1`), ordered by their smallest vertex.
    pub fn blocks(&self) -> Result<Vec<Block>, GraphError> {
        self.require_connected()?;
        if self.n == 1 {
            return Ok(vec![Block {
                graph: Graph::empty(1)?,
                vertices: vec![0],
            }]);
        }
        let mut state = BlockSearch {
            g: self,
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            time: 0,
            stack: Vec::new(),
            found: Vec::new(),
        };
        if self.n > 0 {
            state.visit(0, usize::MAX);
        }
        let mut sets = state.found;
        sets.sort_by_key(|s| (s.first(), s.0));
        Ok(sets
            .into_iter()
            .map(|s| {
                let (graph, vertices) = self.induced_subgraph(s);
                Block { graph, vertices }
            })
            .collect())
    }

    /// `|E| - |V| + 1`, cross-checked against the degree-sum form.
    pub fn cycle_rank(&self) -> Result<usize, GraphError> {
        self.require_connected()?;
        let by_count = self.edge_count() as i64 - self.n as i64 + 1;
        let excess: i64 = (0..self.n).map(|v| self.degree(v) as i64 - 2).sum();
        debug_assert_eq!(2 * by_count, 2 + excess);
        Ok(by_count as usize)
    }

    /// `G_v`: the neighbourhood of `v` completed to a clique.
    pub fn saturate(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.saturate_unchecked(v))
    }

    pub(crate) fn saturate_unchecked(&self, v: usize) -> Graph {
        let mut g = self.clone();
        let nb = self.adj[v];
        for u in Bits(nb) {
            g.adj[u] |= nb & !(1u64 << u);
        }
        g
    }

    /// Induced subgraph on `keep`, re-indexed in increasing label order.
    /// Returns the graph and the original label of each new vertex.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep.intersection(self.vertices());
        let map: Vec<usize> = keep.to_vec();
        let adj = map
            .iter()
            .map(|&old| compress(self.adj[old], keep.0))
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// `G \ s` with order-preserving compaction, plus the index map.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        Ok(self.induced_subgraph(self.vertices().difference(s)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = 0u64;
            for v in Bits(self.adj[u]) {
                row |= 1u64 << perm[v];
            }
            adj[perm[u]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union, `other` shifted past the vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }
}

/// Bits strictly above position `u`.
#[inline]
fn above(u: usize) -> u64 {
    if u >= 63 {
        0
    } else {
        u64::MAX << (u + 1)
    }
}

/// Packs the bits of `row` selected by `keep` into the low bits.
#[inline]
fn compress(row: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    let mut i = 0;
    for v in Bits(keep) {
        out |= (row >> v & 1) << i;
        i += 1;
    }
    out
}

struct BlockSearch<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    found: Vec<VertexSet>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for v in Bits(self.g.adj[u]) {
            if self.disc[v] == usize::MAX {
                self.stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.found.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
