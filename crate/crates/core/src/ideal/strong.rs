//! Strong unmixedness with a shared memo table.
//!
//! `G` is strongly unmixed when its components are complete, or `J_G` is
//! unmixed and some cutpoint `v` makes `G \ v`, `G_v` and `G_v \ v` strongly
//! unmixed. The property is evaluated per component: for a disconnected
//! graph the condition on `G` holds exactly when it holds on every
//! component.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::num::NonZeroUsize;
use std::sync::OnceLock;

use lru::LruCache;
use parking_lot::Mutex;

use super::is_unmixed;
use crate::graph::{canonical_certificate, Certificate, Graph, VertexSet, MAX_CANON_VERTICES};

pub const DEFAULT_CACHE_CAPACITY: usize = 1 << 20;

const SHARDS: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
enum MemoKey {
    Canonical(Certificate),
    Labelled(Graph),
}

/// Bounded, sharded LRU map from connected graphs (up to isomorphism) to
/// their strong-unmixedness flag. Lookups and inserts from several threads
/// are fine; a lost race only recomputes a deterministic value.
pub struct SuCache {
    shards: Vec<Mutex<LruCache<MemoKey, bool>>>,
}

impl SuCache {
    pub fn new(capacity: usize) -> Self {
        let per_shard = NonZeroUsize::new(capacity.div_ceil(SHARDS).max(1)).unwrap();
        SuCache {
            shards: (0..SHARDS)
                .map(|_| Mutex::new(LruCache::new(per_shard)))
                .collect(),
        }
    }

    /// Process-wide cache sized by `BEI_CACHE_CAP`.
    pub fn global() -> &'static SuCache {
        static GLOBAL: OnceLock<SuCache> = OnceLock::new();
        GLOBAL.get_or_init(|| {
            let cap = std::env::var("BEI_CACHE_CAP")
                .ok()
                .and_then(|s| s.trim().parse().ok())
                .unwrap_or(DEFAULT_CACHE_CAPACITY);
            SuCache::new(cap)
        })
    }

    pub fn len(&self) -> usize {
        self.shards.iter().map(|s| s.lock().len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        for s in &self.shards {
            s.lock().clear();
        }
    }

    fn shard(&self, key: &MemoKey) -> &Mutex<LruCache<MemoKey, bool>> {
        let mut h = DefaultHasher::new();
        key.hash(&mut h);
        &self.shards[h.finish() as usize % SHARDS]
    }

    pub fn is_strongly_unmixed(&self, g: &Graph) -> bool {
        if g.is_connected() {
            return self.connected(g);
        }
        g.components(VertexSet::EMPTY).iter().all(|part| {
            let (h, _) = g.induced_subgraph(part);
            self.connected(&h)
        })
    }

    fn connected(&self, g: &Graph) -> bool {
        if g.is_complete() {
            return true;
        }
        let cut = g.cutpoints_unchecked();
        // cheap refusals before paying for a certificate
        if cut.is_empty() || !is_unmixed(g) {
            return false;
        }
        let key = if g.n() <= MAX_CANON_VERTICES {
            MemoKey::Canonical(canonical_certificate(g).expect("size checked"))
        } else {
            MemoKey::Labelled(g.clone())
        };
        let shard = self.shard(&key);
        if let Some(&hit) = shard.lock().get(&key) {
            return hit;
        }
        let value = cut.iter().any(|v| {
            let (minus, _) = g.induced_subgraph(g.vertices().without(v));
            if !self.is_strongly_unmixed(&minus) {
                return false;
            }
            let sat = g.saturate_unchecked(v);
            if !self.connected(&sat) {
                return false;
            }
            let (sat_minus, _) = sat.induced_subgraph(sat.vertices().without(v));
            self.connected(&sat_minus)
        });
        shard.lock().put(key, value);
        value
    }
}

/// Strong unmixedness using the process-wide cache.
pub fn is_strongly_unmixed(g: &Graph) -> bool {
    SuCache::global().is_strongly_unmixed(g)
}
