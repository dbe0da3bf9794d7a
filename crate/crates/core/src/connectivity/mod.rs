//! Exact κ, λ and λ′ with cut certificates.

mod brute;
mod edge;
mod restricted;
mod vertex;

use serde::{Serialize, Serializer};

pub use brute::{restricted_edge_connectivity_bruteforce, BRUTE_FORCE_CEILING};
pub use edge::edge_connectivity;
pub use restricted::{restricted_edge_connectivity, LambdaPrimeOptions, RestrictedCut};
pub use vertex::vertex_connectivity;

use crate::graph::{validate_certificate, CutCertificate, Graph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnectivityError {
    #[error("graph has {n} vertices, at least {min} needed")]
    TooSmall { n: usize, min: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("λ′ is undefined for a star")]
    Star,
    #[error("graph has no restricted edge-cut")]
    NoRestrictedCut,
    #[error("no restricted edge-cut of size at most {0}")]
    AboveBound(usize),
    #[error("brute force limited to {threshold} vertices, graph has {n}")]
    OverThreshold { n: usize, threshold: usize },
}

impl ConnectivityError {
    /// Whether the error means `λ′` does not exist, as opposed to the search
    /// being cut short.
    pub fn is_undefined(&self) -> bool {
        matches!(
            self,
            ConnectivityError::TooSmall { .. }
                | ConnectivityError::Disconnected
                | ConnectivityError::Star
                | ConnectivityError::NoRestrictedCut
        )
    }
}

/// A minimum-cardinality λ′-fragment.
pub fn lambda_prime_atom(g: &Graph, opts: &LambdaPrimeOptions) -> Result<Vec<usize>, ConnectivityError> {
    Ok(restricted_edge_connectivity(g, opts)?.certificate.fragment)
}

fn undefined_marker<S: Serializer>(v: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_u64(*x as u64),
        None => s.serialize_str("undefined"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub delta: usize,
    pub max_degree: usize,
    pub xi: Option<usize>,
    pub kappa: usize,
    pub lambda: usize,
    pub lambda_certificate: CutCertificate,
    #[serde(serialize_with = "undefined_marker")]
    pub lambda_prime: Option<usize>,
    pub lambda_prime_certificate: Option<CutCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_prime_undefined_reason: Option<String>,
    pub super_lambda: bool,
    pub lambda_prime_optimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_force_agrees: Option<bool>,
}

/// Computes every report field. `λ′` is recorded as undefined rather than
/// failing; a pruned search (`prune_at` too small) is an error.
pub fn classify(g: &Graph, opts: &LambdaPrimeOptions) -> Result<ConnectivityReport, ConnectivityError> {
    let (lambda, lambda_certificate) = edge_connectivity(g)?;
    let kappa = vertex_connectivity(g);
    let (lambda_prime, lambda_prime_certificate, reason) = match restricted_edge_connectivity(g, opts) {
        Ok(cut) => (Some(cut.value), Some(cut.certificate), None),
        Err(e) if e.is_undefined() => (None, None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let xi = g.min_edge_degree().ok();
    let connected = g.is_connected();
    Ok(ConnectivityReport {
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        delta: g.min_degree().expect("at least two vertices"),
        max_degree: g.max_degree().expect("at least two vertices"),
        xi,
        kappa,
        lambda,
        lambda_certificate,
        lambda_prime,
        lambda_prime_certificate,
        lambda_prime_undefined_reason: reason,
        super_lambda: connected && lambda_prime.is_none_or(|lp| lp > lambda),
        lambda_prime_optimal: lambda_prime.is_some() && lambda_prime == xi,
        brute_force_agrees: None,
    })
}

/// Re-derives `λ′` by subset enumeration and records whether it matches.
pub fn cross_check_bruteforce(g: &Graph, report: &mut ConnectivityReport, threshold: usize) -> Result<bool, ConnectivityError> {
    let oracle = match restricted_edge_connectivity_bruteforce(g, threshold) {
        Ok(cut) => Some(cut.value),
        Err(e) if e.is_undefined() => None,
        Err(e) => return Err(e),
    };
    let agrees = oracle == report.lambda_prime;
    report.brute_force_agrees = Some(agrees);
    Ok(agrees)
}

/// Every violated report invariant, as text. Empty means all hold.
pub fn check_invariants(g: &Graph, r: &ConnectivityReport) -> Vec<String> {
    let mut out = Vec::new();
    if !(r.kappa <= r.lambda && r.lambda <= r.delta) {
        out.push(format!("κ ≤ λ ≤ δ fails: {} {} {}", r.kappa, r.lambda, r.delta));
    }
    if let Some(lp) = r.lambda_prime {
        let xi = r.xi.unwrap_or(0);
        if !(r.lambda <= lp && lp <= xi) {
            out.push(format!("λ ≤ λ′ ≤ ξ fails: {} {} {}", r.lambda, lp, xi));
        }
        if r.super_lambda != (lp > r.lambda) {
            out.push("super-λ flag disagrees with λ′ > λ".into());
        }
        if r.lambda_prime_optimal != (Some(lp) == r.xi) {
            out.push("λ′-optimal flag disagrees with λ′ = ξ".into());
        }
    }
    if let Err(e) = validate_certificate(g, &r.lambda_certificate) {
        out.push(format!("λ certificate: {e}"));
    }
    if r.lambda_certificate.claimed_value != r.lambda {
        out.push("λ certificate value differs from λ".into());
    }
    if let Some(c) = &r.lambda_prime_certificate {
        if let Err(e) = validate_certificate(g, c) {
            out.push(format!("λ′ certificate: {e}"));
        }
        if Some(c.claimed_value) != r.lambda_prime {
            out.push("λ′ certificate value differs from λ′".into());
        }
    }
    if r.brute_force_agrees == Some(false) {
        out.push("brute-force λ′ disagrees".into());
    }
    out
}
