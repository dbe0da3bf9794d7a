//! Integer max-flow on small capacities, with multi-terminal sources and
//! sinks so that contracting a vertex set never has to be materialised.
//!
//! Arcs are stored in pairs: arc `a` and its reverse `a ^ 1`. An undirected
//! edge of capacity `c` is the pair `(c, c)`; a directed arc is `(c, 0)`.

use serde::Serialize;

use crate::graph::{Graph, MultiGraph};

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    start: Vec<usize>,
    arcs: Vec<u32>,
    head: Vec<u32>,
    cap: Vec<i32>,
}

impl FlowNetwork {
    /// `pairs` lists `(u, v, cap(u→v), cap(v→u))`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize, u32, u32)]) -> Self {
        let mut head = Vec::with_capacity(2 * pairs.len());
        let mut cap = Vec::with_capacity(2 * pairs.len());
        let mut deg = vec![0usize; n + 1];
        for &(u, v, cuv, cvu) in pairs {
            assert!(u < n && v < n && u != v, "arc ({u}, {v}) out of range");
            head.push(v as u32);
            cap.push(cuv as i32);
            head.push(u as u32);
            cap.push(cvu as i32);
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut start = vec![0usize; n + 1];
        for v in 0..n {
            start[v + 1] = start[v] + deg[v];
        }
        let mut fill = start.clone();
        let mut arcs = vec![0u32; start[n]];
        for (k, &(u, v, _, _)) in pairs.iter().enumerate() {
            arcs[fill[u]] = (2 * k) as u32;
            fill[u] += 1;
            arcs[fill[v]] = (2 * k + 1) as u32;
            fill[v] += 1;
        }
        FlowNetwork { start, arcs, head, cap }
    }

    /// Unit capacity in both directions on every edge.
    pub fn from_graph(g: &Graph) -> Self {
        let pairs: Vec<_> = g.edges().map(|(u, v)| (u, v, 1, 1)).collect();
        FlowNetwork::from_pairs(g.vertex_count(), &pairs)
    }

    pub fn from_multigraph(g: &MultiGraph) -> Self {
        let pairs: Vec<_> = g.edges().map(|(u, v, c)| (u, v, c, c)).collect();
        FlowNetwork::from_pairs(g.vertex_count(), &pairs)
    }

    pub fn vertex_count(&self) -> usize {
        self.start.len() - 1
    }

    fn out_arcs(&self, v: usize) -> &[u32] {
        &self.arcs[self.start[v]..self.start[v + 1]]
    }

    /// The tail of arc `a` is the head of its partner.
    fn tail(&self, a: usize) -> usize {
        self.head[a ^ 1] as usize
    }
}

const NONE: u8 = 0;
const SOURCE: u8 = 1;
const SINK: u8 = 2;

/// Reusable per-thread buffers for [`max_flow`].
#[derive(Debug, Clone)]
pub struct FlowScratch {
    flow: Vec<i32>,
    role: Vec<u8>,
    mark: Vec<u32>,
    epoch: u32,
    parent: Vec<u32>,
    queue: Vec<u32>,
}

impl FlowScratch {
    pub fn new(net: &FlowNetwork) -> Self {
        let n = net.vertex_count();
        FlowScratch {
            flow: vec![0; net.head.len()],
            role: vec![NONE; n],
            mark: vec![0; n],
            epoch: 0,
            parent: vec![u32::MAX; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.mark.fill(0);
            self.epoch = 1;
        }
        self.epoch
    }
}

/// Maximum flow from the merged `sources` to the merged `sinks`, stopping
/// as soon as it reaches `limit`. A return value below `limit` is exact and
/// leaves the residual state in `scratch` for [`source_side`] and
/// [`sink_side`].
pub fn max_flow(net: &FlowNetwork, scratch: &mut FlowScratch, sources: &[usize], sinks: &[usize], limit: u32) -> u32 {
    scratch.flow.fill(0);
    scratch.role.fill(NONE);
    for &s in sources {
        scratch.role[s] = SOURCE;
    }
    for &t in sinks {
        assert_ne!(scratch.role[t], SOURCE, "vertex {t} is both source and sink");
        scratch.role[t] = SINK;
    }
    let mut total: u32 = 0;
    while total < limit {
        let Some(end) = augmenting_path(net, scratch, sources) else {
            break;
        };
        let mut bottleneck = i32::MAX;
        let mut v = end;
        while scratch.role[v] != SOURCE {
            let a = scratch.parent[v] as usize;
            bottleneck = bottleneck.min(net.cap[a] - scratch.flow[a]);
            v = net.tail(a);
        }
        let push = bottleneck.min((limit - total).min(i32::MAX as u32) as i32);
        let mut v = end;
        while scratch.role[v] != SOURCE {
            let a = scratch.parent[v] as usize;
            scratch.flow[a] += push;
            scratch.flow[a ^ 1] -= push;
            v = net.tail(a);
        }
        total += push as u32;
    }
    total
}

fn augmenting_path(net: &FlowNetwork, s: &mut FlowScratch, sources: &[usize]) -> Option<usize> {
    let epoch = s.next_epoch();
    s.queue.clear();
    for &v in sources {
        if s.mark[v] != epoch {
            s.mark[v] = epoch;
            s.queue.push(v as u32);
        }
    }
    let mut i = 0;
    while i < s.queue.len() {
        let u = s.queue[i] as usize;
        i += 1;
        for &a in net.out_arcs(u) {
            let a = a as usize;
            let w = net.head[a] as usize;
            if s.mark[w] == epoch || net.cap[a] - s.flow[a] <= 0 {
                continue;
            }
            s.mark[w] = epoch;
            s.parent[w] = a as u32;
            if s.role[w] == SINK {
                return Some(w);
            }
            s.queue.push(w as u32);
        }
    }
    None
}

/// Vertices reachable from the sources in the residual network: the
/// inclusion-minimal source side of a minimum cut. Sorted.
pub fn source_side(net: &FlowNetwork, scratch: &mut FlowScratch, sources: &[usize]) -> Vec<usize> {
    let epoch = scratch.next_epoch();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for &v in sources {
        if scratch.mark[v] != epoch {
            scratch.mark[v] = epoch;
            stack.push(v);
        }
    }
    while let Some(u) = stack.pop() {
        out.push(u);
        for &a in net.out_arcs(u) {
            let a = a as usize;
            let w = net.head[a] as usize;
            if scratch.mark[w] != epoch && net.cap[a] - scratch.flow[a] > 0 {
                scratch.mark[w] = epoch;
                stack.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Vertices that can still reach a sink in the residual network: the
/// inclusion-minimal sink side of a minimum cut. Sorted.
pub fn sink_side(net: &FlowNetwork, scratch: &mut FlowScratch, sinks: &[usize]) -> Vec<usize> {
    let epoch = scratch.next_epoch();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for &v in sinks {
        if scratch.mark[v] != epoch {
            scratch.mark[v] = epoch;
            stack.push(v);
        }
    }
    while let Some(u) = stack.pop() {
        out.push(u);
        for &a in net.out_arcs(u) {
            // arc a: u → w; its partner w → u must have residual capacity
            let back = a as usize ^ 1;
            let w = net.head[a as usize] as usize;
            if scratch.mark[w] != epoch && net.cap[back] - scratch.flow[back] > 0 {
                scratch.mark[w] = epoch;
                stack.push(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// A minimum `s`–`t` cut of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinCut {
    pub value: usize,
    /// Inclusion-minimal side containing the source, sorted.
    pub source_side: Vec<usize>,
    /// Crossing vertex pairs `(u, v)` with `u < v`, sorted.
    pub cut_edges: Vec<(usize, usize)>,
}

/// Exact minimum cut between two vertices of `g`.
pub fn min_cut_between(g: &MultiGraph, source: usize, sink: usize) -> MinCut {
    let total = u32::try_from(g.total_capacity()).unwrap_or(u32::MAX - 1);
    min_cut_between_bounded(g, source, sink, total).expect("no cut exceeds the total capacity")
}

/// As [`min_cut_between`], but gives up (returning `None`) once the value
/// is known to exceed `prune_at`.
pub fn min_cut_between_bounded(g: &MultiGraph, source: usize, sink: usize, prune_at: u32) -> Option<MinCut> {
    assert_ne!(source, sink, "source and sink must differ");
    let net = FlowNetwork::from_multigraph(g);
    let mut scratch = FlowScratch::new(&net);
    let limit = prune_at.saturating_add(1);
    let value = max_flow(&net, &mut scratch, &[source], &[sink], limit);
    if value >= limit {
        return None;
    }
    let side = source_side(&net, &mut scratch, &[source]);
    let mut inside = vec![false; g.vertex_count()];
    for &v in &side {
        inside[v] = true;
    }
    let cut_edges = g.edges().filter(|&(u, v, _)| inside[u] != inside[v]).map(|(u, v, _)| (u, v)).collect();
    Some(MinCut {
        value: value as usize,
        source_side: side,
        cut_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, hypercube};

    #[test]
    fn cycle_opposite_vertices() {
        let g = MultiGraph::from_graph(&cycle(4).unwrap());
        let cut = min_cut_between(&g, 0, 2);
        assert_eq!(cut.value, 2);
        assert_eq!(cut.source_side, vec![0]);
        assert_eq!(cut.cut_edges, vec![(0, 1), (0, 3)]);
    }

    #[test]
    fn complete_graph_pairs() {
        let g = MultiGraph::from_graph(&complete(5).unwrap());
        for t in 1..5 {
            assert_eq!(min_cut_between(&g, 0, t).value, 4);
        }
    }

    #[test]
    fn cube_corner_to_antipode() {
        let g = MultiGraph::from_graph(&hypercube(3).unwrap());
        assert_eq!(min_cut_between(&g, 0, 7).value, 3);
        assert_eq!(min_cut_between_bounded(&g, 0, 7, 2), None);
        assert_eq!(min_cut_between_bounded(&g, 0, 7, 3).map(|c| c.value), Some(3));
    }

    #[test]
    fn capacities_and_minimal_sides() {
        // path 0 -2- 1 -1- 2 -3- 3
        let mut g = MultiGraph::new(4);
        g.add_capacity(0, 1, 2);
        g.add_capacity(1, 2, 1);
        g.add_capacity(2, 3, 3);
        let cut = min_cut_between(&g, 0, 3);
        assert_eq!((cut.value, cut.source_side.clone()), (1, vec![0, 1]));
        let net = FlowNetwork::from_multigraph(&g);
        let mut s = FlowScratch::new(&net);
        assert_eq!(max_flow(&net, &mut s, &[0], &[3], 10), 1);
        assert_eq!(sink_side(&net, &mut s, &[3]), vec![2, 3]);
    }

    #[test]
    fn directed_arcs_only_carry_forward() {
        let net = FlowNetwork::from_pairs(3, &[(0, 1, 1, 0), (1, 2, 1, 0)]);
        let mut s = FlowScratch::new(&net);
        assert_eq!(max_flow(&net, &mut s, &[0], &[2], 5), 1);
        assert_eq!(max_flow(&net, &mut s, &[2], &[0], 5), 0);
    }

    #[test]
    fn merged_terminals() {
        // C6 with {0,1} as source and {3,4} as sink
        let net = FlowNetwork::from_graph(&cycle(6).unwrap());
        let mut s = FlowScratch::new(&net);
        assert_eq!(max_flow(&net, &mut s, &[0, 1], &[3, 4], 10), 2);
        assert_eq!(source_side(&net, &mut s, &[0, 1]), vec![0, 1]);
        assert_eq!(sink_side(&net, &mut s, &[3, 4]), vec![3, 4]);
        assert_eq!(max_flow(&net, &mut s, &[0, 1], &[3, 4], 1), 1);
    }
}
