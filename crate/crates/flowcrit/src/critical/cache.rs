use dashmap::DashMap;

use crate::flow::has_flow;
use crate::graph::{BorderedMultigraph, CanonCode};

pub const DEFAULT_CACHE_CAP: usize = 1 << 20;

/// Flow-existence answers keyed by canonical code. Safe for concurrent use;
/// once full it stops inserting but keeps answering correctly.
pub struct FlowCache {
    map: DashMap<CanonCode, bool>,
    cap: usize,
}

impl Default for FlowCache {
    fn default() -> Self {
        FlowCache::new(DEFAULT_CACHE_CAP)
    }
}

impl FlowCache {
    pub fn new(cap: usize) -> Self {
        FlowCache { map: DashMap::new(), cap }
    }

    pub fn has_flow(&self, g: &BorderedMultigraph) -> bool {
        let Ok(code) = g.canonical_code() else {
            return has_flow(g);
        };
        if let Some(hit) = self.map.get(&code) {
            return *hit;
        }
        let answer = has_flow(g);
        if self.map.len() < self.cap {
            self.map.entry(code).or_insert(answer);
        }
        answer
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}
