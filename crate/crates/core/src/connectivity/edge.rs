use rayon::prelude::*;

use super::ConnectivityError;
use crate::flow::{max_flow, source_side, FlowNetwork, FlowScratch};
use crate::graph::{CutCertificate, CutKind, Graph};

/// `λ(G)` with a certificate.
///
/// Fixes `v₀ = 0` and takes the minimum `v₀`–`u` cut over all `u`; the
/// certificate is the minimal source side of the first minimising `u`,
/// or the smallest-id vertex of minimum degree when no cut beats `δ`.
/// A disconnected graph gets `λ = 0` and the component of vertex 0.
pub fn edge_connectivity(g: &Graph) -> Result<(usize, CutCertificate), ConnectivityError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(ConnectivityError::TooSmall { n, min: 2 });
    }
    let components = g.components();
    if components.len() > 1 {
        return Ok((0, CutCertificate::from_fragment(g, components[0].clone(), CutKind::EdgeCut)));
    }
    let delta = g.min_degree().expect("non-empty");
    let argmin = (0..n).find(|&v| g.degree(v) == delta).expect("some vertex attains δ");
    let net = FlowNetwork::from_graph(g);
    let limit = delta as u32;
    let best = (1..n)
        .into_par_iter()
        .map_init(
            || FlowScratch::new(&net),
            |scratch, u| {
                let value = max_flow(&net, scratch, &[0], &[u], limit);
                (value < limit).then(|| (value, u, source_side(&net, scratch, &[0])))
            },
        )
        .flatten()
        .min_by_key(|(value, u, _)| (*value, *u));
    Ok(match best {
        Some((value, _, side)) => (value as usize, CutCertificate::from_fragment(g, side, CutKind::EdgeCut)),
        None => (delta, CutCertificate::from_fragment(g, vec![argmin], CutKind::EdgeCut)),
    })
}
