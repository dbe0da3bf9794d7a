use std::sync::atomic::{AtomicUsize, Ordering};

use log::debug;
use rayon::prelude::*;
use serde::Serialize;

use super::ConnectivityError;
use crate::flow::{max_flow, sink_side, source_side, FlowNetwork, FlowScratch};
use crate::graph::{CutCertificate, CutKind, Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LambdaPrimeOptions {
    /// Only contract edges at vertex 0 on the source side. Exact for
    /// vertex-transitive graphs.
    pub use_vertex_transitivity: bool,
    /// Only cuts of at most this size are searched.
    pub prune_at: Option<usize>,
    /// Largest order accepted by the brute-force oracle.
    pub brute_force_threshold: usize,
}

impl Default for LambdaPrimeOptions {
    fn default() -> Self {
        LambdaPrimeOptions {
            use_vertex_transitivity: false,
            prune_at: None,
            brute_force_threshold: 16,
        }
    }
}

impl LambdaPrimeOptions {
    pub fn transitive() -> Self {
        LambdaPrimeOptions {
            use_vertex_transitivity: true,
            ..Default::default()
        }
    }
}

/// `λ′(G)` together with a λ′-atom as certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RestrictedCut {
    pub value: usize,
    pub certificate: CutCertificate,
}

/// Rejects graphs on which `λ′` is undefined.
pub(super) fn check_defined(g: &Graph) -> Result<(), ConnectivityError> {
    let n = g.vertex_count();
    if n < 4 {
        return Err(ConnectivityError::TooSmall { n, min: 4 });
    }
    if !g.is_connected() {
        return Err(ConnectivityError::Disconnected);
    }
    if g.is_star() {
        return Err(ConnectivityError::Star);
    }
    Ok(())
}

/// Orders fragments: smaller first, then lexicographically.
pub(super) fn fragment_key(x: &[usize]) -> (usize, &[usize]) {
    (x.len(), x)
}

/// The smaller of `x` and its complement, ties broken lexicographically.
pub(super) fn smaller_side(n: usize, x: Vec<usize>) -> Vec<usize> {
    let mut inside = vec![false; n];
    for &v in &x {
        inside[v] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    if fragment_key(&rest) < fragment_key(&x) {
        rest
    } else {
        x
    }
}

/// Exact `λ′(G)` by edge-pair contraction.
///
/// For every pair of vertex-disjoint edges `e`, `f`, the endpoints of `e`
/// are merged into the source and those of `f` into the sink; every
/// minimum cut of that network is a restricted edge-cut (a vertex stranded
/// on its side could switch sides and shrink the cut), and every restricted
/// edge-cut separates some such pair. Both inclusion-minimal sides of each
/// minimising cut are atom candidates; every λ′-atom is the minimal side
/// for some pair, and the reported atom is the smallest, then
/// lexicographically first, among them.
///
/// Pairs run in parallel against a shared running minimum; cuts equal to
/// the minimum are still resolved exactly, so the result does not depend
/// on scheduling.
pub fn restricted_edge_connectivity(g: &Graph, opts: &LambdaPrimeOptions) -> Result<RestrictedCut, ConnectivityError> {
    check_defined(g)?;
    let n = g.vertex_count();
    let edges: Vec<Edge> = g.edges().collect();
    let sources: Vec<Edge> = if opts.use_vertex_transitivity {
        g.neighbors(0).iter().map(|&v| (0, v)).collect()
    } else {
        edges.clone()
    };
    let net = FlowNetwork::from_graph(g);
    let bound = AtomicUsize::new(opts.prune_at.unwrap_or(edges.len()));
    debug!(
        "λ′ search: {} vertices, {} source edges × {} edges",
        n,
        sources.len(),
        edges.len()
    );

    let best = sources
        .par_iter()
        .map_init(
            || FlowScratch::new(&net),
            |scratch, &(a, b)| {
                let mut local: Option<(usize, Vec<usize>)> = None;
                for &(c, d) in &edges {
                    if c == a || c == b || d == a || d == b {
                        continue;
                    }
                    let limit = bound.load(Ordering::Relaxed) as u32 + 1;
                    let value = max_flow(&net, scratch, &[a, b], &[c, d], limit);
                    if value >= limit {
                        continue;
                    }
                    let value = value as usize;
                    bound.fetch_min(value, Ordering::Relaxed);
                    let from_source = smaller_side(n, source_side(&net, scratch, &[a, b]));
                    let from_sink = smaller_side(n, sink_side(&net, scratch, &[c, d]));
                    let candidate = if fragment_key(&from_sink) < fragment_key(&from_source) {
                        from_sink
                    } else {
                        from_source
                    };
                    let better = match &local {
                        None => true,
                        Some((v, x)) => (value, fragment_key(&candidate)) < (*v, fragment_key(x)),
                    };
                    if better {
                        local = Some((value, candidate));
                    }
                }
                local
            },
        )
        .flatten()
        .min_by(|(v1, x1), (v2, x2)| (v1, fragment_key(x1)).cmp(&(v2, fragment_key(x2))));

    match best {
        Some((value, atom)) => Ok(RestrictedCut {
            value,
            certificate: CutCertificate::from_fragment(g, atom, CutKind::RestrictedEdgeCut),
        }),
        None => match opts.prune_at {
            Some(b) => Err(ConnectivityError::AboveBound(b)),
            None => Err(ConnectivityError::NoRestrictedCut),
        },
    }
}
