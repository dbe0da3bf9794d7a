use std::sync::Arc;

use log::{debug, info};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::product::{record_cut_vertex_bound, record_sandwiches};
use super::{check_product_bounds, BoundReport, Claim, ClaimValue, Relation, VerifyError};
use crate::connectivity::{check_invariants, classify, edge_connectivity, vertex_connectivity, LambdaPrimeOptions};
use crate::families::{circulant, complete, cycle, hypercube, random_regular, random_with_degrees};
use crate::graph::{CutCertificate, Graph};
use crate::group::{boolean_vector_group, cayley_graph, shift_semidirect_cayley, CayleySpec};
use crate::replacement::{default_rotation_map, replacement_product, RotationStrategy};

/// A named connected Cayley graph.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Connected Cayley graphs on at most 64 vertices: every circulant of order
/// 4..=12 (all generating sets), selected larger circulants, complete
/// graphs, hypercubes `Q₂..Q₆`, folded cubes, `CCC₃`, `CCC₄` and the
/// semidirect instance `n = 4`, `S_B = ±{1, 2}`.
pub fn cayley_corpus() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    let mut push = |name: String, graph: Graph| out.push(CorpusGraph { name, graph });
    for n in 4..=12 {
        let half = n / 2;
        for mask in 1u32..(1 << half) {
            let gens: Vec<usize> = (1..=half).filter(|s| mask & (1 << (s - 1)) != 0).collect();
            if gens.iter().fold(n, |g, &s| gcd(g, s)) == 1 {
                push(format!("G({n};±{gens:?})"), circulant(n, &gens).expect("valid generators"));
            }
        }
    }
    for (n, gens) in [
        (16, vec![1, 4]),
        (20, vec![1, 3]),
        (24, vec![1, 5, 12]),
        (30, vec![1, 10]),
        (32, vec![1, 8, 16]),
        (48, vec![1, 2, 3]),
        (64, vec![1, 16]),
    ] {
        push(format!("G({n};±{gens:?})"), circulant(n, &gens).expect("valid generators"));
    }
    for n in 13..=16 {
        push(format!("K{n}"), complete(n).expect("valid order"));
    }
    for dim in 2..=6 {
        push(format!("Q{dim}"), hypercube(dim).expect("valid dimension"));
    }
    for bits in 3..=5 {
        let a = Arc::new(boolean_vector_group(bits).expect("valid width"));
        let mut set: Vec<usize> = (1..=bits).map(|i| a.unit(i)).collect();
        set.push((1 << bits) - 1);
        let spec = CayleySpec::new(a, set).expect("involutions without identity");
        push(format!("folded-Q{}", bits + 1), cayley_graph(&spec));
    }
    for n in 3..=4 {
        push(format!("CCC{n}"), shift_semidirect_cayley(n, &[1]).expect("valid input"));
    }
    push("SDP(4;±[1, 2])".into(), shift_semidirect_cayley(4, &[1, 2]).expect("valid input"));
    out
}

/// The case split for a connected vertex-transitive `d`-regular graph on
/// `n ≥ 4` vertices with `d ≥ 2`: if `n` is odd or the graph is
/// triangle-free, `λ′ = 2d − 2`; otherwise `λ′ = 2d − 2` or
/// `d ≤ λ′ ≤ 2d − 3` with `λ′ | n`.
pub fn check_transitive_dichotomy(instance: &str, g: &Graph, lambda_prime: Option<usize>) -> BoundReport {
    let mut rep = BoundReport::default();
    let n = g.vertex_count();
    let Some(d) = g.regular_degree() else {
        return rep;
    };
    let scope = n >= 4 && d >= 2 && g.is_connected();
    let forced = n % 2 == 1 || !g.has_triangle();
    let lp = lambda_prime.unwrap_or(0);
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
    claim(
        "transitive.dichotomy.optimal",
        "order odd or triangle-free",
        scope && forced,
        Relation::Equal,
        lambda_prime.into(),
        (2 * d - 2).into(),
    );
    let below = scope && !forced && lp != 2 * d - 2;
    claim("transitive.dichotomy.lower", "λ′ ≠ 2d − 2", below, Relation::AtMost, d.into(), lambda_prime.into());
    claim("transitive.dichotomy.upper", "λ′ ≠ 2d − 2", below, Relation::AtMost, lambda_prime.into(), (2 * d - 3).into());
    claim(
        "transitive.dichotomy.divides-order",
        "λ′ ≠ 2d − 2",
        below,
        Relation::Equal,
        (if lp == 0 { n } else { n % lp }).into(),
        0usize.into(),
    );
    rep
}

/// Classifies every corpus graph and records the report sandwiches, the
/// report invariants and the vertex-transitive case split.
pub fn check_cayley_corpus(opts: &LambdaPrimeOptions) -> Result<BoundReport, VerifyError> {
    let parts: Vec<Result<BoundReport, VerifyError>> = cayley_corpus()
        .par_iter()
        .map(|c| {
            let r = classify(&c.graph, opts)?;
            let mut rep = BoundReport::default();
            record_sandwiches(&mut rep, &c.name, &r);
            let violations = check_invariants(&c.graph, &r);
            for v in &violations {
                debug!("{}: {v}", c.name);
            }
            rep.record(
                &c.name,
                Claim {
                    id: "report.invariants",
                    hypothesis: "",
                    applicable: true,
                    relation: Relation::Equal,
                    left: violations.len().into(),
                    right: 0usize.into(),
                },
            );
            rep.extend(check_transitive_dichotomy(&c.name, &c.graph, r.lambda_prime));
            Ok(rep)
        })
        .collect();
    let mut out = BoundReport::default();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn connected_random_regular<R: Rng>(n: usize, d: usize, rng: &mut R) -> (Graph, u64) {
    loop {
        let seed = rng.gen();
        if let Ok(g) = random_regular(n, d, seed) {
            if g.is_connected() {
                return (g, seed);
            }
        }
    }
}

/// `count` seeded products `G₁ ® G₂` with `G₁ = random_regular(n₁, δ₁)`,
/// `3 ≤ δ₁ ≤ 6`, `n₁ ≤ 12`, and `G₂ = random_regular(δ₁, δ₂)`, both
/// connected, wired by sorted-neighbour rotation maps. Every applicable
/// product claim is recorded.
pub fn random_product_sweep(seed: u64, count: usize, opts: &LambdaPrimeOptions) -> Result<BoundReport, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(count);
    for i in 0..count {
        let d1 = rng.gen_range(3..=6);
        let n1 = loop {
            let n1 = rng.gen_range(d1 + 1..=12);
            if n1 * d1 % 2 == 0 {
                break n1;
            }
        };
        let d2 = loop {
            let d2 = rng.gen_range(2..d1);
            if d1 * d2 % 2 == 0 {
                break d2;
            }
        };
        let (g1, s1) = connected_random_regular(n1, d1, &mut rng);
        let (g2, s2) = connected_random_regular(d1, d2, &mut rng);
        cases.push((format!("sweep{i}: RR({n1},{d1};{s1}) ® RR({d1},{d2};{s2})"), g1, g2));
    }
    let opts = LambdaPrimeOptions {
        use_vertex_transitivity: false,
        ..*opts
    };
    let parts: Vec<Result<BoundReport, VerifyError>> = cases
        .par_iter()
        .map(|(name, g1, g2)| {
            let rot = default_rotation_map(g1, RotationStrategy::SortedNeighbors)?;
            let (m, mut rep) = check_product_bounds(name, g1, &rot, g2, &opts)?;
            record_cut_vertex_bound(&mut rep, name, &m.g1);
            Ok(rep)
        })
        .collect();
    let mut out = BoundReport::default();
    for p in parts {
        out.extend(p?);
    }
    info!("random product sweep: {} claims over {count} products", out.records.len());
    Ok(out)
}

/// A regular `G₁` with a cut-vertex whose product with `G₂` falls below
/// `min{λ₁, λ₂ + 1}`, showing the lower bound needs `κ₁ ≥ 2`.
#[derive(Debug, Clone, Serialize)]
pub struct CutVertexWitness {
    #[serde(skip)]
    pub g1: Graph,
    #[serde(skip)]
    pub g2: Graph,
    pub blob_order: usize,
    pub seed: u64,
    pub kappa1: usize,
    pub lambda1: usize,
    pub lambda2: usize,
    pub product_lambda: usize,
    pub product_cut: CutCertificate,
    pub report: BoundReport,
}

/// Seeded search over 8-regular graphs made of a vertex `0` joined to four
/// vertices in each of two blobs, replaced by `C₈`. Returns the first
/// instance with `λ(G₁ ® C₈) < min{λ₁, λ₂ + 1}`.
pub fn cut_vertex_witness(seed: u64) -> Result<Option<CutVertexWitness>, VerifyError> {
    const D: usize = 8;
    const LINKS: usize = 4;
    let g2 = cycle(D).expect("valid order");
    let lambda2 = edge_connectivity(&g2)?.0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..64 {
        let h = [9, 10, 11][attempt % 3];
        let degrees: Vec<usize> = (0..h).map(|i| if i < LINKS { D - 1 } else { D }).collect();
        let mut edges = Vec::new();
        for blob in 0..2 {
            let offset = 1 + blob * h;
            let b = match random_with_degrees(&degrees, &mut rng) {
                Ok(b) if b.is_connected() => b,
                _ => continue,
            };
            edges.extend(b.edges().map(|(u, v)| (u + offset, v + offset)));
            edges.extend((0..LINKS).map(|i| (0, i + offset)));
        }
        let Ok(g1) = Graph::from_edges(1 + 2 * h, edges) else {
            continue;
        };
        if g1.regular_degree() != Some(D) || !g1.is_connected() {
            continue;
        }
        let kappa1 = vertex_connectivity(&g1);
        let lambda1 = edge_connectivity(&g1)?.0;
        let rot = default_rotation_map(&g1, RotationStrategy::SortedNeighbors)?;
        let (product, _) = replacement_product(&g1, &rot, &g2)?;
        let (product_lambda, product_cut) = edge_connectivity(&product)?;
        let bound = lambda1.min(lambda2 + 1);
        debug!("cut-vertex search attempt {attempt}: κ₁ = {kappa1}, λ = {product_lambda}, bound {bound}");
        if kappa1 == 1 && product_lambda < bound {
            let mut report = BoundReport::default();
            let instance = format!("cut-vertex witness h={h}");
            report.record(
                &instance,
                Claim {
                    id: "lambda.lower.needs-two-connected-base",
                    hypothesis: "κ₁ = 1",
                    applicable: true,
                    relation: Relation::LessThan,
                    left: product_lambda.into(),
                    right: bound.into(),
                },
            );
            return Ok(Some(CutVertexWitness {
                g1,
                g2,
                blob_order: h,
                seed,
                kappa1,
                lambda1,
                lambda2,
                product_lambda,
                product_cut,
                report,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::restricted_edge_connectivity;

    #[test]
    fn corpus_is_connected_and_small() {
        let corpus = cayley_corpus();
        assert!(corpus.len() > 100);
        for c in &corpus {
            assert!(c.graph.is_connected(), "{}", c.name);
            assert!(c.graph.vertex_count() <= 64, "{}", c.name);
            assert!(c.graph.regular_degree().is_some(), "{}", c.name);
        }
    }

    #[test]
    fn dichotomy_on_known_graphs() {
        let ccc3 = shift_semidirect_cayley(3, &[1]).unwrap();
        let lp = restricted_edge_connectivity(&ccc3, &LambdaPrimeOptions::transitive()).unwrap().value;
        let rep = check_transitive_dichotomy("CCC3", &ccc3, Some(lp));
        assert!(rep.all_hold());
        assert_eq!(rep.count(super::super::ClaimStatus::Holds), 3);

        let wrong = check_transitive_dichotomy("Q3", &hypercube(3).unwrap(), Some(3));
        assert_eq!(wrong.failures().count(), 1);
    }

    #[test]
    fn sweep_is_deterministic_and_holds() {
        let opts = LambdaPrimeOptions::default();
        let a = random_product_sweep(7, 4, &opts).unwrap();
        assert_eq!(a, random_product_sweep(7, 4, &opts).unwrap());
        assert!(a.all_hold(), "{:#?}", a.failures().collect::<Vec<_>>());
    }

    #[test]
    fn witness_is_found() {
        let w = cut_vertex_witness(1).unwrap().expect("witness");
        assert_eq!(w.kappa1, 1);
        assert!(w.product_lambda < w.lambda1.min(w.lambda2 + 1));
        assert!(w.report.all_hold());
    }
}
