use serde::Serialize;

use super::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutKind {
    EdgeCut,
    RestrictedEdgeCut,
}

/// A fragment `X` together with `F = E_G(X)`, witnessing a claimed
/// (restricted) edge-cut size. Both lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub fragment: Vec<usize>,
    pub cut_edges: Vec<Edge>,
    pub claimed_value: usize,
    pub kind: CutKind,
}

impl CutCertificate {
    /// Certificate whose cut and value are read off `g` for the given side.
    pub fn from_fragment(g: &Graph, mut fragment: Vec<usize>, kind: CutKind) -> Self {
        fragment.sort_unstable();
        fragment.dedup();
        let cut_edges = g.edge_boundary(&fragment);
        CutCertificate {
            claimed_value: cut_edges.len(),
            fragment,
            cut_edges,
            kind,
        }
    }
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateDefect {
    #[error("vertex {0} is not in the graph")]
    VertexOutOfRange(usize),
    #[error("fragment or its complement is empty")]
    EmptySide,
    #[error("cut edges differ from the edge boundary of the fragment")]
    CutMismatch,
    #[error("claimed value {claimed} but the cut has {actual} edges")]
    ValueMismatch { claimed: usize, actual: usize },
    #[error("restricted cut needs at least two vertices on each side")]
    SideTooSmall,
    #[error("vertex {0} is isolated once the cut is removed")]
    IsolatedVertex(usize),
    #[error("graph stays connected after removing the cut")]
    StillConnected,
}

/// Checks every certificate invariant against `g`, including that removing
/// the cut edges really disconnects the graph.
pub fn validate_certificate(g: &Graph, cert: &CutCertificate) -> Result<(), CertificateDefect> {
    let n = g.vertex_count();
    if let Some(&v) = cert.fragment.iter().find(|&&v| v >= n) {
        return Err(CertificateDefect::VertexOutOfRange(v));
    }
    let mask = g.membership(&cert.fragment);
    let inside = mask.iter().filter(|&&m| m).count();
    if inside == 0 || inside == n {
        return Err(CertificateDefect::EmptySide);
    }
    let boundary = g.edge_boundary(&cert.fragment);
    let mut claimed = cert.cut_edges.clone();
    for e in claimed.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    claimed.sort_unstable();
    if claimed != boundary {
        return Err(CertificateDefect::CutMismatch);
    }
    if cert.claimed_value != boundary.len() {
        return Err(CertificateDefect::ValueMismatch {
            claimed: cert.claimed_value,
            actual: boundary.len(),
        });
    }
    if cert.kind == CutKind::RestrictedEdgeCut {
        if inside < 2 || n - inside < 2 {
            return Err(CertificateDefect::SideTooSmall);
        }
        for v in 0..n {
            if !g.neighbors(v).iter().any(|&w| mask[w] == mask[v]) {
                return Err(CertificateDefect::IsolatedVertex(v));
            }
        }
    }
    let remaining = g
        .edges()
        .filter(|e| boundary.binary_search(e).is_err())
        .collect::<Vec<_>>();
    let rest = Graph::from_edges(n, remaining).expect("subgraph of a simple graph");
    if rest.components().len() < 2 {
        return Err(CertificateDefect::StillConnected);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn c4_half_is_a_restricted_cut() {
        let cert = CutCertificate {
            fragment: vec![0, 1],
            cut_edges: vec![(1, 2), (0, 3)],
            claimed_value: 2,
            kind: CutKind::RestrictedEdgeCut,
        };
        assert_eq!(validate_certificate(&c4(), &cert), Ok(()));
    }

    #[test]
    fn single_vertex_is_not_restricted() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let cert = CutCertificate::from_fragment(&k4, vec![0], CutKind::RestrictedEdgeCut);
        assert_eq!(validate_certificate(&k4, &cert), Err(CertificateDefect::SideTooSmall));
        let plain = CutCertificate::from_fragment(&k4, vec![0], CutKind::EdgeCut);
        assert_eq!(validate_certificate(&k4, &plain), Ok(()));
    }

    #[test]
    fn wrong_value_and_isolation_are_reported() {
        let mut cert = CutCertificate::from_fragment(&c4(), vec![0, 1], CutKind::EdgeCut);
        cert.claimed_value = 3;
        assert_eq!(
            validate_certificate(&c4(), &cert),
            Err(CertificateDefect::ValueMismatch { claimed: 3, actual: 2 })
        );
        // {0, 2}: both 0 and 2 lose all their neighbours.
        let cert = CutCertificate::from_fragment(&c4(), vec![0, 2], CutKind::RestrictedEdgeCut);
        assert_eq!(validate_certificate(&c4(), &cert), Err(CertificateDefect::IsolatedVertex(0)));
        let mut cert = CutCertificate::from_fragment(&c4(), vec![0, 1], CutKind::EdgeCut);
        cert.cut_edges.pop();
        assert_eq!(validate_certificate(&c4(), &cert), Err(CertificateDefect::CutMismatch));
    }
}
