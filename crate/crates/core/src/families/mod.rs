//! Structured families: blocks with whiskers, chains of cycles, Helm
//! graphs and the cycle-rank-3 catalog.

mod catalog;
mod chain;
mod setup;

pub use catalog::{rank3_blocks, rank3_catalog, CatalogEntry};
pub use chain::{
    chain_classes, chain_of_cycles, chain_skeletons, ChainClass, ChainSpec, CycleKind, Side,
};
pub use setup::{
    chain_decompositions, check_setup, ChainAnalysis, ChainDecomposition, SetupVerdict,
};

use crate::error::FamilyError;
use crate::graph::{Graph, VertexSet};

/// `B̄`: a block plus one pendant vertex at each vertex of `whisker_at`.
///
/// `graph` keeps the block's labels and appends the whisker tips in
/// increasing order of the vertex they hang from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhiskeredBlock {
    pub block: Graph,
    pub whisker_at: VertexSet,
    pub graph: Graph,
}

impl WhiskeredBlock {
    pub fn new(block: Graph, whisker_at: VertexSet) -> Result<Self, FamilyError> {
        let graph = add_whiskers(&block, whisker_at)?;
        Ok(WhiskeredBlock {
            block,
            whisker_at,
            graph,
        })
    }

    /// Tip of the whisker at block vertex `v`.
    pub fn tip(&self, v: usize) -> Option<usize> {
        if !self.whisker_at.contains(v) {
            return None;
        }
        let below = VertexSet(self.whisker_at.0 & ((1u64 << v) - 1)).len();
        Some(self.block.n() + below)
    }
}

/// `block` with a pendant vertex at each vertex of `whisker_at`, tips
/// appended in increasing order of the vertex they hang from.
pub fn add_whiskers(block: &Graph, whisker_at: VertexSet) -> Result<Graph, FamilyError> {
    let b = block.n();
    if !whisker_at.is_subset(block.vertices()) {
        return Err(FamilyError::Spec(format!(
            "whisker set {whisker_at:?} leaves the block's {b} vertices"
        )));
    }
    let n = b + whisker_at.len();
    if n > crate::graph::MAX_VERTICES {
        return Err(crate::error::GraphError::TooManyVertices(n).into());
    }
    let mut rows = Vec::with_capacity(n);
    rows.extend_from_slice(block.rows());
    for (k, v) in whisker_at.iter().enumerate() {
        rows[v] |= 1 << (b + k);
        rows.push(1 << v);
    }
    Ok(Graph::from_rows(rows)?)
}

/// The block `blocks(g)[block_index]` with a whisker at each of its
/// vertices that is a cutpoint of `g`.
pub fn build_bbar(g: &Graph, block_index: usize) -> Result<WhiskeredBlock, FamilyError> {
    let blocks = g.blocks()?;
    let count = blocks.len();
    let Some(block) = blocks.into_iter().nth(block_index) else {
        return Err(FamilyError::BlockIndex {
            index: block_index,
            count,
        });
    };
    let cut = g.cutpoints()?;
    let whisker_at = block
        .vertices
        .iter()
        .enumerate()
        .filter(|&(_, &v)| cut.contains(v))
        .map(|(i, _)| i)
        .collect();
    WhiskeredBlock::new(block.graph, whisker_at)
}

/// `W̄_k`: hub 0, rim `1..=k` in cyclic order, tip `k + i` on rim vertex `i`.
pub fn helm(k: usize) -> Result<Graph, FamilyError> {
    if k < 3 {
        return Err(FamilyError::HelmSize(k));
    }
    let mut g = Graph::empty(2 * k + 1)?;
    for i in 1..=k {
        g.add_edge(0, i);
        g.add_edge(i, i % k + 1);
        g.add_edge(i, k + i);
    }
    Ok(g)
}
