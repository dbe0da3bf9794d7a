use serde::Serialize;

use super::{BoundReport, Claim, ClaimValue, Relation, VerifyError};
use crate::connectivity::{classify, ConnectivityReport, LambdaPrimeOptions};
use crate::graph::{Graph, RotationMap};
use crate::replacement::replacement_product;

/// Exact quantities of both factors and of the product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductMeasurements {
    pub g1: ConnectivityReport,
    pub g2: ConnectivityReport,
    pub product: ConnectivityReport,
    pub g1_connected: bool,
    pub g2_connected: bool,
    pub g2_complete: bool,
    pub g2_cycle: bool,
}

/// Cut-vertex bound `λ ≤ ⌊Δ/2⌋`, applicable when `κ = 1` on at least three
/// vertices.
pub(super) fn record_cut_vertex_bound(report: &mut BoundReport, instance: &str, r: &ConnectivityReport) {
    report.record(
        instance,
        Claim {
            id: "cut-vertex.bound",
            hypothesis: "connected with a cut-vertex",
            applicable: r.kappa == 1 && r.vertex_count >= 3 && r.lambda >= 1,
            relation: Relation::AtMost,
            left: r.lambda.into(),
            right: (r.max_degree / 2).into(),
        },
    );
}

/// Whitney's `κ ≤ λ ≤ δ` and `λ ≤ λ′ ≤ ξ`.
pub(super) fn record_sandwiches(report: &mut BoundReport, instance: &str, r: &ConnectivityReport) {
    report.record(
        instance,
        Claim {
            id: "sandwich.whitney.kappa",
            hypothesis: "",
            applicable: true,
            relation: Relation::AtMost,
            left: r.kappa.into(),
            right: r.lambda.into(),
        },
    );
    report.record(
        instance,
        Claim {
            id: "sandwich.whitney.delta",
            hypothesis: "",
            applicable: true,
            relation: Relation::AtMost,
            left: r.lambda.into(),
            right: r.delta.into(),
        },
    );
    report.record(
        instance,
        Claim {
            id: "sandwich.restricted.lower",
            hypothesis: "λ′ defined",
            applicable: r.lambda_prime.is_some(),
            relation: Relation::AtMost,
            left: r.lambda.into(),
            right: r.lambda_prime.into(),
        },
    );
    report.record(
        instance,
        Claim {
            id: "sandwich.restricted.upper",
            hypothesis: "λ′ defined",
            applicable: r.lambda_prime.is_some(),
            relation: Relation::AtMost,
            left: r.lambda_prime.into(),
            right: r.xi.into(),
        },
    );
}

/// Builds `G₁ ® G₂`, measures every constituent quantity exactly and
/// evaluates each bound and equality whose hypotheses the measurements
/// satisfy. `opts` applies to the product's λ′ search.
pub fn check_product_bounds(
    instance: &str,
    g1: &Graph,
    rot: &RotationMap,
    g2: &Graph,
    opts: &LambdaPrimeOptions,
) -> Result<(ProductMeasurements, BoundReport), VerifyError> {
    let (g, _) = replacement_product(g1, rot, g2)?;
    let factor_opts = LambdaPrimeOptions {
        use_vertex_transitivity: false,
        prune_at: None,
        ..*opts
    };
    let r1 = classify(g1, &factor_opts)?;
    let r2 = classify(g2, &factor_opts)?;
    let rp = classify(&g, opts)?;
    let m = ProductMeasurements {
        g1_connected: g1.is_connected(),
        g2_connected: g2.is_connected(),
        g2_complete: g2.is_complete(),
        g2_cycle: g2.vertex_count() >= 3 && g2.regular_degree() == Some(2) && g2.is_connected(),
        g1: r1,
        g2: r2,
        product: rp,
    };
    let report = evaluate_claims(instance, &m);
    Ok((m, report))
}

fn evaluate_claims(instance: &str, m: &ProductMeasurements) -> BoundReport {
    let mut rep = BoundReport::default();
    let (l1, k1, d1) = (m.g1.lambda, m.g1.kappa, m.g1.delta);
    let (l2, d2) = (m.g2.lambda, m.g2.delta);
    let (l, lp) = (m.product.lambda, m.product.lambda_prime);
    let connected = m.g1_connected && m.g2_connected;
    let g2_optimal = m.g2.lambda_prime_optimal;
    let lp_defined = lp.is_some();
    let i = |x: usize| x as i64;

    let mut claim = |id, hypothesis, applicable, relation, left: ClaimValue, right: ClaimValue| {
        rep.record(
            instance,
            Claim {
                id,
                hypothesis,
                applicable,
                relation,
                left,
                right,
            },
        );
    };
    use Relation::{AtMost, Equal, Iff};

    claim(
        "product.regularity",
        "",
        true,
        Equal,
        (m.product.delta == m.product.max_degree).then_some(m.product.delta).into(),
        (d2 + 1).into(),
    );
    claim(
        "product.order",
        "",
        true,
        Equal,
        m.product.vertex_count.into(),
        (m.g1.vertex_count * d1).into(),
    );
    claim("product.connected", "G₁, G₂ connected", connected, Equal, (l >= 1).into(), true.into());

    // edge-connectivity bounds
    claim("lambda.upper", "G₁, G₂ connected", connected, AtMost, l.into(), l1.min(d2 + 1).into());
    claim("lambda.lower", "G₁, G₂ connected", connected, AtMost, l1.min(l2).into(), l.into());
    claim(
        "lambda.lower.two-connected-base",
        "G₁, G₂ connected, κ₁ ≥ 2",
        connected && k1 >= 2,
        AtMost,
        l1.min(l2 + 1).into(),
        l.into(),
    );
    claim("lambda.eq.bridge-base", "λ₁ = 1", connected && l1 == 1, Equal, l.into(), 1.into());
    claim("lambda.eq.strong-fiber", "λ₂ ≥ λ₁", connected && l2 >= l1, Equal, l.into(), l1.into());
    claim(
        "lambda.eq.two-connected-base",
        "κ₁ ≥ 2, λ₂ ≥ λ₁ − 1",
        connected && k1 >= 2 && l2 + 1 >= l1,
        Equal,
        l.into(),
        l1.into(),
    );
    claim(
        "lambda.eq.optimal-fiber",
        "κ₁ ≥ 2, λ₂ = δ₂",
        connected && k1 >= 2 && l2 == d2,
        Equal,
        l.into(),
        l1.min(d2 + 1).into(),
    );
    claim("lambda.eq.inflation", "G₂ complete", connected && m.g2_complete, Equal, l.into(), l1.into());
    claim(
        "lambda.eq.cycle-fiber",
        "G₁ 2-connected, G₂ a cycle",
        connected && m.g2_cycle && k1 >= 2,
        Equal,
        l.into(),
        l1.min(3).into(),
    );

    // restricted edge-connectivity
    claim(
        "lambda-prime.upper",
        "G₁, G₂ connected, λ′ defined",
        connected && lp_defined,
        AtMost,
        lp.into(),
        l1.min(2 * d2).into(),
    );
    claim(
        "lambda-prime.eq.inflation",
        "G₂ complete, λ′ defined",
        connected && m.g2_complete && lp_defined,
        Equal,
        lp.into(),
        l1.into(),
    );
    let lower_applicable = connected && d1 >= 4 && m.g2.lambda_prime.is_some();
    let lower = m
        .g2
        .lambda_prime
        .map(|l2p| l1.min(k1 + l2 - 1).min(2 * l2).min(l2p + 2));
    claim(
        "lambda-prime.lower",
        "G₁, G₂ connected, δ₁ ≥ 4",
        lower_applicable,
        AtMost,
        lower.into(),
        lp.into(),
    );
    let eq_hyp = i(k1) >= i(l1) - i(l2) + 1 || k1 >= l2 + 1;
    claim(
        "lambda-prime.eq.optimal-fiber",
        "δ₁ ≥ 4, κ₁ ≥ λ₁ − λ₂ + 1 or κ₁ ≥ λ₂ + 1, G₂ λ′-optimal",
        connected && d1 >= 4 && eq_hyp && g2_optimal,
        Equal,
        lp.into(),
        l1.min(2 * d2).into(),
    );
    claim(
        "lambda-prime.eq.kappa-equals-lambda",
        "κ₁ = λ₁, G₂ λ′-optimal",
        connected && k1 == l1 && g2_optimal,
        Equal,
        lp.into(),
        l1.min(2 * d2).into(),
    );
    claim(
        "lambda-prime.eq.cycle-fiber",
        "G₂ a cycle, κ₁ ≥ 3",
        connected && m.g2_cycle && k1 >= 3 && lp_defined,
        Equal,
        lp.into(),
        l1.min(4).into(),
    );

    // optimality and super-λ characterisations
    let diff = i(l1) - i(l2) + 1;
    let iff_hyp = connected && g2_optimal && ((i(k1) >= diff && diff >= 2) || k1 >= l2 + 1);
    claim(
        "optimality.iff",
        "κ₁ ≥ λ₁ − λ₂ + 1 ≥ 2 or κ₁ ≥ λ₂ + 1, G₂ λ′-optimal",
        iff_hyp,
        Iff,
        m.product.lambda_prime_optimal.into(),
        (l1 >= 2 * d2).into(),
    );
    claim(
        "super-lambda.iff",
        "κ₁ ≥ λ₁ − λ₂ + 1 ≥ 2 or κ₁ ≥ λ₂ + 1, G₂ λ′-optimal",
        iff_hyp,
        Iff,
        m.product.super_lambda.into(),
        (l1 > d2 + 1).into(),
    );
    let kl_hyp = connected && d1 >= 4 && k1 == l1 && l1 >= 2 && g2_optimal;
    claim(
        "optimality.iff.kappa-equals-lambda",
        "δ₁ ≥ 4, κ₁ = λ₁ ≥ 2, G₂ λ′-optimal",
        kl_hyp,
        Iff,
        m.product.lambda_prime_optimal.into(),
        (l1 >= 2 * d2).into(),
    );
    claim(
        "super-lambda.iff.kappa-equals-lambda",
        "δ₁ ≥ 4, κ₁ = λ₁ ≥ 2, G₂ λ′-optimal",
        kl_hyp,
        Iff,
        m.product.super_lambda.into(),
        (l1 > d2 + 1).into(),
    );

    for (name, r) in [("G₁", &m.g1), ("G₂", &m.g2), ("product", &m.product)] {
        record_cut_vertex_bound(&mut rep, &format!("{instance} [{name}]"), r);
    }
    record_sandwiches(&mut rep, &format!("{instance} [product]"), &m.product);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{circulant, complete, cycle, hypercube};
    use crate::replacement::{default_rotation_map, RotationStrategy};
    use crate::verify::ClaimStatus;

    fn run(g1: &Graph, strategy: RotationStrategy, g2: &Graph) -> (ProductMeasurements, BoundReport) {
        let rot = default_rotation_map(g1, strategy).unwrap();
        check_product_bounds("t", g1, &rot, g2, &LambdaPrimeOptions::default()).unwrap()
    }

    fn status(r: &BoundReport, id: &str) -> ClaimStatus {
        r.find("t", id).unwrap_or_else(|| panic!("{id} missing")).status
    }

    #[test]
    fn k4_with_triangles() {
        let (m, r) = run(&complete(4).unwrap(), RotationStrategy::SortedNeighbors, &cycle(3).unwrap());
        assert!(r.all_hold(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!((m.product.lambda, m.product.lambda_prime), (3, Some(3)));
        assert_eq!(status(&r, "lambda.upper"), ClaimStatus::Holds);
        assert_eq!(status(&r, "lambda-prime.eq.cycle-fiber"), ClaimStatus::Holds);
        assert_eq!(status(&r, "lambda-prime.lower"), ClaimStatus::NotApplicable);
    }

    #[test]
    fn circulant_inflation() {
        let (m, r) = run(&circulant(7, &[1, 2]).unwrap(), RotationStrategy::CirculantGens, &complete(4).unwrap());
        assert!(r.all_hold());
        assert_eq!(m.product.lambda_prime, Some(4));
        assert_eq!(status(&r, "lambda-prime.eq.inflation"), ClaimStatus::Holds);
    }

    #[test]
    fn hypercube_with_four_cycles() {
        let (m, r) = run(&hypercube(4).unwrap(), RotationStrategy::HypercubeDims, &cycle(4).unwrap());
        assert!(r.all_hold(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(m.product.lambda_prime, Some(4));
        assert!(m.product.super_lambda);
        assert_eq!(status(&r, "lambda-prime.eq.cycle-fiber"), ClaimStatus::Holds);
        assert!(m.g2.lambda_prime_optimal);
        assert_eq!(status(&r, "optimality.iff.kappa-equals-lambda"), ClaimStatus::Holds);
        assert_eq!(status(&r, "super-lambda.iff.kappa-equals-lambda"), ClaimStatus::Holds);
    }
}
