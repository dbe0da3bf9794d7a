use crate::flow::{max_flow, FlowNetwork, FlowScratch};
use crate::graph::Graph;

/// `κ(G)`; `n - 1` for complete graphs, `0` when disconnected.
///
/// Each vertex `v` splits into `v_in = 2v` and `v_out = 2v + 1` joined by a
/// unit arc, so an `s_out`–`t_in` flow counts internally vertex-disjoint
/// paths. Only pairs `(i, j)`, `i < j` non-adjacent, with `i ≤ κ` are
/// tried: some vertex among the first `κ + 1` avoids a minimum separator,
/// and the smallest such vertex has a separated partner of larger id.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let big = n as u32;
    let mut pairs: Vec<(usize, usize, u32, u32)> = (0..n).map(|v| (2 * v, 2 * v + 1, 1, 0)).collect();
    for (u, v) in g.edges() {
        pairs.push((2 * u + 1, 2 * v, big, 0));
        pairs.push((2 * v + 1, 2 * u, big, 0));
    }
    let net = FlowNetwork::from_pairs(2 * n, &pairs);
    let mut scratch = FlowScratch::new(&net);
    let mut best = g.min_degree().expect("non-empty");
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let value = max_flow(&net, &mut scratch, &[2 * i + 1], &[2 * j], best as u32) as usize;
            best = best.min(value);
        }
        i += 1;
    }
    best
}
