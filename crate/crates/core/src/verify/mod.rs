//! Mechanical checks of the bounds, equalities and constructions for
//! replacement products and semidirect-product Cayley graphs.
//!
//! Every check produces [`ClaimRecord`]s. A claim whose hypotheses are not
//! met by the measured quantities is recorded as not applicable, never as
//! a failure.

mod cayley;
mod iso;
mod product;
mod reference;
mod search;

use serde::Serialize;

pub use cayley::{
    build_degree_gap_cayley, build_non_optimal_cayley, check_optimality_criterion, NonOptimalCayley,
};
pub use iso::{small_graph_isomorphic, ISOMORPHISM_LIMIT};
pub use product::{check_product_bounds, ProductMeasurements};
pub use reference::verify_reference_values;
pub use search::{
    cayley_corpus, check_cayley_corpus, check_transitive_dichotomy, cut_vertex_witness, random_product_sweep, CorpusGraph,
    CutVertexWitness,
};

use crate::connectivity::ConnectivityError;
use crate::replacement::{CorrespondenceError, ReplacementError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Replacement(#[from] ReplacementError),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
    #[error(transparent)]
    Correspondence(#[from] CorrespondenceError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("isomorphism search limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    LessThan,
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = "<=>")]
    Iff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ClaimValue {
    Int(usize),
    Bool(bool),
    Missing,
}

impl From<usize> for ClaimValue {
    fn from(v: usize) -> Self {
        ClaimValue::Int(v)
    }
}

impl From<bool> for ClaimValue {
    fn from(v: bool) -> Self {
        ClaimValue::Bool(v)
    }
}

impl From<Option<usize>> for ClaimValue {
    fn from(v: Option<usize>) -> Self {
        v.map_or(ClaimValue::Missing, ClaimValue::Int)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub instance: String,
    pub id: String,
    pub hypothesis: String,
    pub relation: Relation,
    pub left: ClaimValue,
    pub right: ClaimValue,
    pub status: ClaimStatus,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub records: Vec<ClaimRecord>,
}

/// One claim to evaluate: `left relation right`, applicable only when the
/// hypothesis holds.
pub struct Claim<'a> {
    pub id: &'a str,
    pub hypothesis: &'a str,
    pub applicable: bool,
    pub relation: Relation,
    pub left: ClaimValue,
    pub right: ClaimValue,
}

impl BoundReport {
    pub fn record(&mut self, instance: &str, claim: Claim<'_>) -> ClaimStatus {
        let holds = match (claim.relation, claim.left, claim.right) {
            (Relation::LessThan, ClaimValue::Int(l), ClaimValue::Int(r)) => l < r,
            (Relation::AtMost, ClaimValue::Int(l), ClaimValue::Int(r)) => l <= r,
            (Relation::Equal, l, r) => l == r && l != ClaimValue::Missing,
            (Relation::Iff, ClaimValue::Bool(l), ClaimValue::Bool(r)) => l == r,
            _ => false,
        };
        let status = match (claim.applicable, holds) {
            (false, _) => ClaimStatus::NotApplicable,
            (true, true) => ClaimStatus::Holds,
            (true, false) => ClaimStatus::Fails,
        };
        self.records.push(ClaimRecord {
            instance: instance.to_string(),
            id: claim.id.to_string(),
            hypothesis: claim.hypothesis.to_string(),
            relation: claim.relation,
            left: claim.left,
            right: claim.right,
            status,
        });
        status
    }

    pub fn extend(&mut self, other: BoundReport) {
        self.records.extend(other.records);
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimRecord> {
        self.records.iter().filter(|r| r.status == ClaimStatus::Fails)
    }

    pub fn all_hold(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, status: ClaimStatus) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn find(&self, instance: &str, id: &str) -> Option<&ClaimRecord> {
        self.records.iter().find(|r| r.instance == instance && r.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gating_and_relations() {
        let mut r = BoundReport::default();
        let le = |applicable, l: usize, rr: usize| Claim {
            id: "x",
            hypothesis: "",
            applicable,
            relation: Relation::AtMost,
            left: l.into(),
            right: rr.into(),
        };
        assert_eq!(r.record("a", le(true, 2, 3)), ClaimStatus::Holds);
        assert_eq!(r.record("a", le(true, 4, 3)), ClaimStatus::Fails);
        assert_eq!(r.record("a", le(false, 4, 3)), ClaimStatus::NotApplicable);
        let missing = Claim {
            id: "y",
            hypothesis: "",
            applicable: true,
            relation: Relation::Equal,
            left: ClaimValue::Missing,
            right: ClaimValue::Missing,
        };
        assert_eq!(r.record("a", missing), ClaimStatus::Fails);
        assert_eq!(r.count(ClaimStatus::Fails), 2);
        assert!(!r.all_hold());
    }
}
