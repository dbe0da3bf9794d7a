use super::VerifyError;
use crate::graph::Graph;

pub const ISOMORPHISM_LIMIT: usize = 10;

/// Exact isomorphism test by backtracking over degree-compatible images,
/// checking adjacency against every vertex already placed.
pub fn small_graph_isomorphic(g: &Graph, h: &Graph) -> Result<bool, VerifyError> {
    let n = g.vertex_count();
    for k in [n, h.vertex_count()] {
        if k > ISOMORPHISM_LIMIT {
            return Err(VerifyError::TooLarge {
                n: k,
                limit: ISOMORPHISM_LIMIT,
            });
        }
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let order: Vec<usize> = {
        let mut o: Vec<usize> = (0..n).collect();
        o.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        o
    };
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g, h, &order, 0, &mut image, &mut used))
}

fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.vertex_count() {
        if used[w] || h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{circulant, complete, cycle, hypercube};

    #[test]
    fn basic_cases() {
        assert!(small_graph_isomorphic(&cycle(3).unwrap(), &complete(3).unwrap()).unwrap());
        assert!(!small_graph_isomorphic(&circulant(6, &[1, 2]).unwrap(), &cycle(6).unwrap()).unwrap());
        assert!(small_graph_isomorphic(&circulant(8, &[1, 3]).unwrap(), &circulant(8, &[3, 1]).unwrap()).unwrap());
        assert!(small_graph_isomorphic(&circulant(4, &[1]).unwrap(), &hypercube(2).unwrap()).unwrap());
        assert!(small_graph_isomorphic(&hypercube(5).unwrap(), &hypercube(5).unwrap()).is_err());
    }

    #[test]
    fn same_degrees_different_structure() {
        // C₆ versus two disjoint triangles
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!small_graph_isomorphic(&cycle(6).unwrap(), &two).unwrap());
        // a relabelled C₆
        let perm = [3, 0, 5, 1, 4, 2];
        let relabelled = Graph::from_edges(6, cycle(6).unwrap().edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>()).unwrap();
        assert!(small_graph_isomorphic(&cycle(6).unwrap(), &relabelled).unwrap());
    }
}
