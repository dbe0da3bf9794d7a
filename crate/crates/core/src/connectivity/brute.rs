use super::restricted::{check_defined, fragment_key, smaller_side, RestrictedCut};
use super::ConnectivityError;
use crate::graph::{CutCertificate, CutKind, Graph};

/// Hard ceiling for the subset enumeration, whatever threshold is asked for.
pub const BRUTE_FORCE_CEILING: usize = 30;

/// `λ′(G)` straight from the definition: the minimum `|E(X)|` over vertex
/// sets `X` such that both `G[X]` and `G[X̄]` have no isolated vertex.
/// Returns the same canonical atom as the flow-based search.
pub fn restricted_edge_connectivity_bruteforce(g: &Graph, threshold: usize) -> Result<RestrictedCut, ConnectivityError> {
    check_defined(g)?;
    let n = g.vertex_count();
    let threshold = threshold.min(BRUTE_FORCE_CEILING);
    if n > threshold {
        return Err(ConnectivityError::OverThreshold { n, threshold });
    }
    let nbr: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let all = (1u64 << n) - 1;
    let mut best: Option<(usize, Vec<usize>)> = None;
    // vertex 0 always lies in X
    for rest in 0..(1u64 << (n - 1)) {
        let x = rest << 1 | 1;
        if x == all {
            continue;
        }
        let comp = all & !x;
        let valid = (0..n).all(|v| {
            let side = if x >> v & 1 == 1 { x } else { comp };
            nbr[v] & side != 0
        });
        if !valid {
            continue;
        }
        let value: usize = (0..n)
            .filter(|&v| x >> v & 1 == 1)
            .map(|v| (nbr[v] & comp).count_ones() as usize)
            .sum();
        if best.as_ref().is_some_and(|(b, _)| value > *b) {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| x >> v & 1 == 1).collect();
        let frag = smaller_side(n, members);
        let better = match &best {
            None => true,
            Some((b, f)) => (value, fragment_key(&frag)) < (*b, fragment_key(f)),
        };
        if better {
            best = Some((value, frag));
        }
    }
    let (value, atom) = best.ok_or(ConnectivityError::NoRestrictedCut)?;
    Ok(RestrictedCut {
        value,
        certificate: CutCertificate::from_fragment(g, atom, CutKind::RestrictedEdgeCut),
    })
}
