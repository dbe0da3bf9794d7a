use super::{BoundReport, Claim, ClaimValue, Relation, VerifyError};
use crate::connectivity::{classify, ConnectivityReport, LambdaPrimeOptions};
use crate::families::{circulant, complete, cycle, hypercube};
use crate::graph::Graph;
use crate::group::shift_semidirect_cayley;
use crate::replacement::{default_rotation_map, replacement_product, CorrespondenceError, RotationStrategy};

fn expect(report: &mut BoundReport, instance: &str, id: &str, measured: impl Into<ClaimValue>, stated: impl Into<ClaimValue>) {
    report.record(
        instance,
        Claim {
            id,
            hypothesis: "",
            applicable: true,
            relation: Relation::Equal,
            left: measured.into(),
            right: stated.into(),
        },
    );
}

fn measure(g: &Graph, opts: &LambdaPrimeOptions) -> Result<ConnectivityReport, VerifyError> {
    Ok(classify(g, opts)?)
}

/// Classifies the reference graphs and compares each measured value with
/// its known closed form:
/// `λ′(Q_n) = 2n − 2`, `λ′(G(n; ±S)) = 4|S| − 2` when `max S < n/2`,
/// `λ(K₄®C₃) = λ′(K₄®C₃) = 3`, `λ(CCC_n) = 3`, and `λ′(CCC_n)` equal to 3
/// for `n = 3` and 4 for `n ≥ 4`.
///
/// `opts` is used for the vertex-transitive graphs only.
pub fn verify_reference_values(opts: &LambdaPrimeOptions) -> Result<BoundReport, VerifyError> {
    let mut rep = BoundReport::default();
    let plain = LambdaPrimeOptions {
        use_vertex_transitivity: false,
        ..*opts
    };

    for dim in 2..=6 {
        let g = hypercube(dim).expect("valid dimension");
        let r = measure(&g, opts)?;
        let instance = format!("Q{dim}");
        expect(&mut rep, &instance, "reference.hypercube.lambda-prime", r.lambda_prime, 2 * dim - 2);
        expect(&mut rep, &instance, "reference.hypercube.optimal", r.lambda_prime_optimal, true);
    }

    for (n, gens) in [(8, vec![1, 3]), (9, vec![1, 2]), (11, vec![1, 2, 3])] {
        let g = circulant(n, &gens).expect("valid generators");
        let r = measure(&g, opts)?;
        let instance = format!("G({n};±{gens:?})");
        expect(&mut rep, &instance, "reference.circulant.lambda-prime", r.lambda_prime, 4 * gens.len() - 2);
    }

    let k4 = complete(4).expect("valid order");
    let rot = default_rotation_map(&k4, RotationStrategy::SortedNeighbors)?;
    let (g, _) = replacement_product(&k4, &rot, &cycle(3).expect("valid order"))?;
    let r = measure(&g, &plain)?;
    expect(&mut rep, "K4®C3", "reference.inflated-k4.lambda", r.lambda, 3usize);
    expect(&mut rep, "K4®C3", "reference.inflated-k4.lambda-prime", r.lambda_prime, 3usize);

    for n in 3..=5 {
        let g = shift_semidirect_cayley(n, &[1]).map_err(CorrespondenceError::from)?;
        let r = measure(&g, opts)?;
        let instance = format!("CCC{n}");
        expect(&mut rep, &instance, "reference.ccc.lambda", r.lambda, 3usize);
        expect(&mut rep, &instance, "reference.ccc.lambda-prime", r.lambda_prime, if n == 3 { 3usize } else { 4 });
        expect(&mut rep, &instance, "reference.ccc.optimal", r.lambda_prime_optimal, n >= 4);
        expect(&mut rep, &instance, "reference.ccc.super-lambda", r.super_lambda, n >= 4);
    }
    Ok(rep)
}
