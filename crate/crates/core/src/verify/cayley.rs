use log::info;
use serde::Serialize;

use super::iso::{small_graph_isomorphic, ISOMORPHISM_LIMIT};
use super::{BoundReport, Claim, ClaimValue, Relation, VerifyError};
use crate::connectivity::{
    classify, edge_connectivity, restricted_edge_connectivity, vertex_connectivity, LambdaPrimeOptions,
};
use crate::families::circulant;
use crate::graph::Graph;
use crate::group::{
    build_semidirect_cayley, cayley_graph, shift_semidirect_input, CayleySpec, Group, SemidirectCayleyInput,
};
use crate::replacement::{check_cayley_replacement, CorrespondenceError};

fn precondition(msg: impl Into<String>) -> VerifyError {
    VerifyError::Precondition(msg.into())
}

/// The λ′-optimality criterion for `C_{A⋊B}(S)`: when `C_A(S_A)` has
/// `κ = δ` and `C_B(S_B)` is λ′-optimal, the product Cayley graph is
/// λ′-optimal exactly when `|S_A| ≥ 2|S_B|`.
///
/// Both sides of the biconditional are always measured; the record is
/// marked not applicable when a factor misses its hypothesis.
pub fn check_optimality_criterion(
    instance: &str,
    input: &SemidirectCayleyInput,
    opts: &LambdaPrimeOptions,
    seed: u64,
) -> Result<BoundReport, VerifyError> {
    let (spec, _, _) = build_semidirect_cayley(input, seed).map_err(CorrespondenceError::from)?;
    let g = cayley_graph(&spec);
    let ga = cayley_graph(&CayleySpec::new(input.action.target().clone(), input.a_gens.clone()).map_err(CorrespondenceError::from)?);
    let gb = cayley_graph(&CayleySpec::new(input.action.acting().clone(), input.b_gens.clone()).map_err(CorrespondenceError::from)?);

    let kappa_optimal = ga.min_degree().is_ok_and(|d| vertex_connectivity(&ga) == d);
    let fiber_optimal = classify(&gb, &LambdaPrimeOptions::default())?.lambda_prime_optimal;
    let lp = restricted_edge_connectivity(&g, opts)?.value;
    let xi = g.min_edge_degree().map_err(|_| precondition("edgeless Cayley graph"))?;
    info!("{instance}: λ′ = {lp}, ξ = {xi}");

    let mut report = BoundReport::default();
    let correspondence = check_cayley_replacement(input, seed)?;
    report.record(
        instance,
        Claim {
            id: "cayley.is-replacement-product",
            hypothesis: "S = S⁻¹",
            applicable: true,
            relation: Relation::Equal,
            left: correspondence.edges_equal.into(),
            right: true.into(),
        },
    );
    report.record(
        instance,
        Claim {
            id: "optimality-criterion",
            hypothesis: "C_A(S_A) κ-optimal, C_B(S_B) λ′-optimal",
            applicable: kappa_optimal && fiber_optimal,
            relation: Relation::Iff,
            left: (lp == xi).into(),
            right: (input.a_gens.len() >= 2 * input.b_gens.len()).into(),
        },
    );
    Ok(report)
}

/// A non-λ′-optimal Cayley graph on `(ℤ₂)ⁿ ⋊ ℤ_n` together with its checks.
#[derive(Debug, Clone, Serialize)]
pub struct NonOptimalCayley {
    #[serde(skip)]
    pub graph: Graph,
    pub n: usize,
    pub gens: Vec<usize>,
    pub order: usize,
    pub degree: usize,
    pub lambda: usize,
    pub lambda_prime: usize,
    pub xi: usize,
    pub atom: Vec<usize>,
    pub atom_labels: Vec<String>,
    pub report: BoundReport,
}

/// `C_{(ℤ₂)ⁿ⋊ℤ_n}(S)` with `S_B = ±gens`, requiring `k = |gens| ≥ 2`,
/// `max gens < n/2` and `n/2 < |S_B| < n − 1`. Checks
/// `λ = |S_B| + 1 < λ′ = n < υ/2`, non-optimality, and that the λ′-atom is
/// one block inducing `G(n; ±gens)`.
pub fn build_non_optimal_cayley(n: usize, gens: &[usize], opts: &LambdaPrimeOptions) -> Result<NonOptimalCayley, VerifyError> {
    let mut gens = gens.to_vec();
    gens.sort_unstable();
    gens.dedup();
    if gens.len() < 2 {
        return Err(precondition("at least two generators are required"));
    }
    if gens[0] == 0 || 2 * gens[gens.len() - 1] >= n {
        return Err(precondition(format!("generators must lie strictly between 0 and n/2 = {}", n as f64 / 2.0)));
    }
    let sb = 2 * gens.len();
    if 2 * sb <= n {
        return Err(precondition(format!(
            "|S_B| = {sb} must exceed n/2 = {}; the condition |S_B| > n/2 is necessary",
            n as f64 / 2.0
        )));
    }
    if sb + 1 >= n {
        return Err(precondition(format!("|S_B| = {sb} must be below n − 1 = {}", n - 1)));
    }
    let input = shift_semidirect_input(n, &gens).map_err(|e| precondition(e.to_string()))?;
    let (spec, product, _) = build_semidirect_cayley(&input, 0).map_err(CorrespondenceError::from)?;
    let g = cayley_graph(&spec);
    let order = g.vertex_count();
    let degree = g.regular_degree().expect("Cayley graphs are regular");
    info!("non-optimal Cayley graph: n = {n}, S_B = ±{gens:?}, {order} vertices");
    let lambda = edge_connectivity(&g)?.0;
    let cut = restricted_edge_connectivity(&g, opts)?;
    let lambda_prime = cut.value;
    let xi = g.min_edge_degree().expect("has edges");
    let atom = cut.certificate.fragment.clone();
    let instance = format!("n={n} S_B=±{gens:?}");
    let fiber = circulant(n, &gens).expect("validated generators");

    let mut report = BoundReport::default();
    let mut claim = |id, hypothesis, applicable, relation, left: ClaimValue, right: ClaimValue| {
        report.record(
            &instance,
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
    claim("non-optimal.lambda", "", true, Relation::Equal, lambda.into(), (sb + 1).into());
    claim("non-optimal.lambda-prime", "", true, Relation::Equal, lambda_prime.into(), n.into());
    claim("non-optimal.lambda-below-lambda-prime", "", true, Relation::LessThan, lambda.into(), lambda_prime.into());
    claim("non-optimal.below-half-order", "", true, Relation::LessThan, (2 * lambda_prime).into(), order.into());
    claim("non-optimal.not-optimal", "", true, Relation::Equal, (lambda_prime == xi).into(), false.into());
    claim("non-optimal.atom-size", "", true, Relation::Equal, atom.len().into(), n.into());
    let block = atom.first().map(|&v| v / n);
    let is_block = block.is_some_and(|b| atom.iter().copied().eq(b * n..(b + 1) * n));
    claim("non-optimal.atom-is-block", "", true, Relation::Equal, is_block.into(), true.into());
    let induced = g.induced_subgraph(&atom).expect("atom vertices are in range");
    claim(
        "non-optimal.atom-induces-fiber",
        "atom is a block",
        is_block,
        Relation::Equal,
        induced.same_edges(&fiber).into(),
        true.into(),
    );
    let iso = if atom.len() <= ISOMORPHISM_LIMIT {
        small_graph_isomorphic(&induced, &fiber)?
    } else {
        false
    };
    claim(
        "non-optimal.atom-isomorphic",
        "n ≤ 10",
        atom.len() <= ISOMORPHISM_LIMIT,
        Relation::Equal,
        iso.into(),
        true.into(),
    );

    Ok(NonOptimalCayley {
        atom_labels: atom.iter().map(|&v| product.label(v)).collect(),
        graph: g,
        n,
        gens,
        order,
        degree,
        lambda,
        lambda_prime,
        xi,
        atom,
        report,
    })
}

/// For odd `d ≥ 5` and `1 ≤ s ≤ d − 3`: a `d`-regular Cayley graph with
/// `λ = d` and `λ′ = d + s < υ/2`, built with `n = d + s` and
/// `S_B = ±{1, …, (d−1)/2}`.
pub fn build_degree_gap_cayley(d: usize, s: usize, opts: &LambdaPrimeOptions) -> Result<NonOptimalCayley, VerifyError> {
    if d < 5 || d % 2 == 0 {
        return Err(precondition(format!("d = {d} must be odd and at least 5")));
    }
    if s < 1 || s + 3 > d {
        return Err(precondition(format!("s = {s} must satisfy 1 ≤ s ≤ d − 3 = {}", d - 3)));
    }
    let gens: Vec<usize> = (1..=(d - 1) / 2).collect();
    let mut out = build_non_optimal_cayley(d + s, &gens, opts)?;
    let instance = format!("d={d} s={s}");
    let (degree, lambda, lp, order) = (out.degree, out.lambda, out.lambda_prime, out.order);
    for (id, relation, left, right) in [
        ("degree-gap.degree", Relation::Equal, degree, d),
        ("degree-gap.lambda", Relation::Equal, lambda, d),
        ("degree-gap.lambda-prime", Relation::Equal, lp, d + s),
        ("degree-gap.below-half-order", Relation::LessThan, 2 * lp, order),
    ] {
        out.report.record(
            &instance,
            Claim {
                id,
                hypothesis: "",
                applicable: true,
                relation,
                left: left.into(),
                right: right.into(),
            },
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::ClaimStatus;

    #[test]
    fn preconditions() {
        let opts = LambdaPrimeOptions::transitive();
        assert!(matches!(build_non_optimal_cayley(6, &[1, 2, 3], &opts), Err(VerifyError::Precondition(_))));
        assert!(matches!(build_non_optimal_cayley(6, &[1], &opts), Err(VerifyError::Precondition(_))));
        let err = build_non_optimal_cayley(9, &[1, 2], &opts).unwrap_err();
        assert!(err.to_string().contains("necessary"), "{err}");
        assert!(matches!(build_degree_gap_cayley(4, 1, &opts), Err(VerifyError::Precondition(_))));
        assert!(matches!(build_degree_gap_cayley(5, 3, &opts), Err(VerifyError::Precondition(_))));
        assert!(matches!(build_degree_gap_cayley(5, 0, &opts), Err(VerifyError::Precondition(_))));
    }

    #[test]
    fn cube_connected_cycles_criterion() {
        let opts = LambdaPrimeOptions::transitive();
        for n in 3..=5 {
            let report = check_optimality_criterion("ccc", &shift_semidirect_input(n, &[1]).unwrap(), &opts, 0).unwrap();
            let rec = report.find("ccc", "optimality-criterion").unwrap();
            assert_eq!(rec.left, ClaimValue::Bool(n >= 4));
            assert_eq!(rec.right, ClaimValue::Bool(n >= 4));
            // C₃ has no restricted edge-cut, so the hypothesis fails at n = 3
            let expected = if n == 3 { ClaimStatus::NotApplicable } else { ClaimStatus::Holds };
            assert_eq!(rec.status, expected);
            assert!(report.all_hold());
        }
    }
}
