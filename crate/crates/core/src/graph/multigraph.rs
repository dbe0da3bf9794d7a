use std::collections::BTreeMap;

use super::{Graph, GraphError};

/// Undirected multigraph stored as integer capacities on vertex pairs.
///
/// Kept separate from [`Graph`] so the simple-graph invariant never has to
/// be relaxed; only the flow engine consumes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    caps: BTreeMap<(usize, usize), u32>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            n,
            caps: BTreeMap::new(),
        }
    }

    /// Unit capacity on every edge of `g`.
    pub fn from_graph(g: &Graph) -> Self {
        let mut m = MultiGraph::new(g.vertex_count());
        for (u, v) in g.edges() {
            m.add_capacity(u, v, 1);
        }
        m
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Adds `cap` parallel edges between `u` and `v`. Loops and zero
    /// capacities are ignored.
    pub fn add_capacity(&mut self, u: usize, v: usize, cap: u32) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v || cap == 0 {
            return;
        }
        *self.caps.entry((u.min(v), u.max(v))).or_insert(0) += cap;
    }

    pub fn capacity(&self, u: usize, v: usize) -> u32 {
        self.caps.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// `(u, v, capacity)` with `u < v`, lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.caps.iter().map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn total_capacity(&self) -> u64 {
        self.caps.values().map(|&c| u64::from(c)).sum()
    }
}

/// Merges each block into one super-vertex.
///
/// Super-vertex `i` is block `i`; vertices outside every block follow in
/// increasing id order. Edges inside a block vanish and parallel edges
/// accumulate as capacity. Returns the multigraph and the vertex map
/// `old id -> super-vertex`.
pub fn contract(g: &Graph, blocks: &[Vec<usize>]) -> Result<(MultiGraph, Vec<usize>), GraphError> {
    let n = g.vertex_count();
    let mut map = vec![usize::MAX; n];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if map[v] != usize::MAX && map[v] != b {
                return Err(GraphError::OverlappingBlocks(v));
            }
            map[v] = b;
        }
    }
    let mut next = blocks.len();
    for m in map.iter_mut() {
        if *m == usize::MAX {
            *m = next;
            next += 1;
        }
    }
    let mut mg = MultiGraph::new(next);
    for (u, v) in g.edges() {
        mg.add_capacity(map[u], map[v], 1);
    }
    Ok((mg, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn contract_one_edge_of_c4() {
        let (m, map) = contract(&c4(), &[vec![0, 1]]).unwrap();
        assert_eq!(map, vec![0, 0, 1, 2]);
        assert_eq!(m.vertex_count(), 3);
        let caps: Vec<_> = m.edges().collect();
        assert_eq!(caps, vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)]);
    }

    #[test]
    fn contract_opposite_edges_of_c4() {
        let (m, _) = contract(&c4(), &[vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.edges().collect::<Vec<_>>(), vec![(0, 1, 2)]);
    }

    #[test]
    fn overlapping_blocks_rejected() {
        assert_eq!(
            contract(&c4(), &[vec![0, 1], vec![1, 2]]),
            Err(GraphError::OverlappingBlocks(1))
        );
    }
}
