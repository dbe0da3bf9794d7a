//! Canonical graph families.
//!
//! Numbering conventions:
//! * circulants use vertices `0..n`; ports `2t` and `2t + 1` carry the
//!   generators `+s` and `-s` for the `t`-th smallest generator `s`
//!   (a generator equal to `n/2` gets the single port `2t`);
//! * hypercube vertex ids are the binary value of the bit string, bit `i`
//!   (least significant first) being the `i+1`-th coordinate, and port `i`
//!   flips bit `i`;
//! * the star's centre is vertex `0`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{Graph, RotationMap};

/// Largest hypercube dimension built in memory.
pub const MAX_HYPERCUBE_DIM: usize = 24;

const MAX_RESTARTS: usize = 2_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("{family}: parameter {param} = {value} is below the minimum {min}")]
    TooSmall {
        family: &'static str,
        param: &'static str,
        value: usize,
        min: usize,
    },
    #[error("circulant({n}): generator {s} is outside 1..={max}")]
    GeneratorOutOfRange { n: usize, s: usize, max: usize },
    #[error("circulant needs at least one generator")]
    NoGenerators,
    #[error("hypercube dimension {0} exceeds {MAX_HYPERCUBE_DIM}")]
    TooLarge(usize),
    #[error("random_regular({n}, {d}): n·d must be even")]
    OddDegreeSum { n: usize, d: usize },
    #[error("random_regular({n}, {d}): degree must be below n")]
    DegreeTooLarge { n: usize, d: usize },
    #[error("degree sequence {0:?} is not realisable as a simple graph")]
    NotGraphical(Vec<usize>),
    #[error("no simple graph found after {MAX_RESTARTS} restarts; try other parameters or seed")]
    RejectionBudgetExhausted,
}

/// A named family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Family {
    Circulant { n: usize, gens: Vec<usize> },
    Hypercube { dim: usize },
    Complete { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    RandomRegular { n: usize, d: usize, seed: u64 },
}

impl Family {
    pub fn build(&self) -> Result<Graph, ConstructError> {
        match self {
            Family::Circulant { n, gens } => circulant(*n, gens),
            Family::Hypercube { dim } => hypercube(*dim),
            Family::Complete { n } => complete(*n),
            Family::Cycle { n } => cycle(*n),
            Family::Star { n } => star(*n),
            Family::RandomRegular { n, d, seed } => random_regular(*n, *d, *seed),
        }
    }
}

fn at_least(family: &'static str, param: &'static str, value: usize, min: usize) -> Result<(), ConstructError> {
    if value < min {
        Err(ConstructError::TooSmall {
            family,
            param,
            value,
            min,
        })
    } else {
        Ok(())
    }
}

/// `G(n; ±S)`: `i ~ j` iff `|j - i| ≡ ±s (mod n)` for some `s ∈ S`.
pub fn circulant(n: usize, gens: &[usize]) -> Result<Graph, ConstructError> {
    at_least("circulant", "n", n, 3)?;
    let mut gens = gens.to_vec();
    gens.sort_unstable();
    gens.dedup();
    if gens.is_empty() {
        return Err(ConstructError::NoGenerators);
    }
    if let Some(&s) = gens.iter().find(|&&s| s == 0 || s > n / 2) {
        return Err(ConstructError::GeneratorOutOfRange { n, s, max: n / 2 });
    }
    let ports: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|x| {
            let mut p = Vec::with_capacity(2 * gens.len());
            for (t, &s) in gens.iter().enumerate() {
                if 2 * s == n {
                    p.push(((x + s) % n, 2 * t));
                } else {
                    p.push(((x + s) % n, 2 * t + 1));
                    p.push(((x + n - s) % n, 2 * t));
                }
            }
            p
        })
        .collect();
    let edges = ports
        .iter()
        .enumerate()
        .flat_map(|(x, p)| p.iter().map(move |&(y, _)| (x, y)))
        .collect::<Vec<_>>();
    let g = Graph::from_edges(n, edges).expect("circulant edges are in range");
    Ok(g.with_rotation_map(RotationMap::from_ports(ports))
        .expect("circulant port labelling is an involution"))
}

/// `Q_dim` with the bit-flip port labelling attached.
pub fn hypercube(dim: usize) -> Result<Graph, ConstructError> {
    at_least("hypercube", "dim", dim, 1)?;
    if dim > MAX_HYPERCUBE_DIM {
        return Err(ConstructError::TooLarge(dim));
    }
    let n = 1usize << dim;
    let ports: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|x| (0..dim).map(|i| (x ^ (1 << i), i)).collect())
        .collect();
    let edges = (0..n)
        .flat_map(|x| (0..dim).map(move |i| (x, x ^ (1 << i))))
        .filter(|&(x, y)| x < y)
        .collect::<Vec<_>>();
    let g = Graph::from_edges(n, edges).expect("hypercube edges are in range");
    Ok(g.with_rotation_map(RotationMap::from_ports(ports))
        .expect("bit-flip labelling is an involution"))
}

pub fn complete(n: usize) -> Result<Graph, ConstructError> {
    at_least("complete", "n", n, 1)?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("in range"))
}

pub fn cycle(n: usize) -> Result<Graph, ConstructError> {
    at_least("cycle", "n", n, 3)?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).expect("in range"))
}

/// `K_{1, n-1}` on `n` vertices, centre `0`.
pub fn star(n: usize) -> Result<Graph, ConstructError> {
    at_least("star", "n", n, 2)?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (0, i)).collect::<Vec<_>>()).expect("in range"))
}

/// Some simple `d`-regular graph on `n` vertices, deterministic in `seed`.
///
/// Stubs are paired at random, never pairing two stubs of one vertex or of
/// an already-adjacent pair; a dead end restarts from scratch. Dense
/// requests (`2d ≥ n`) build the complement of an `(n-1-d)`-regular graph.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph, ConstructError> {
    if d >= n {
        return Err(ConstructError::DegreeTooLarge { n, d });
    }
    if (n * d) % 2 == 1 {
        return Err(ConstructError::OddDegreeSum { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if 2 * d >= n {
        let sparse = random_with_degrees(&vec![n - 1 - d; n], &mut rng)?;
        return Ok(sparse.complement());
    }
    random_with_degrees(&vec![d; n], &mut rng)
}

/// Random simple graph with the given degree sequence (vertex `v` gets
/// `degrees[v]`), using the same stub-pairing scheme as
/// [`random_regular`].
pub fn random_with_degrees<R: Rng>(degrees: &[usize], rng: &mut R) -> Result<Graph, ConstructError> {
    let n = degrees.len();
    let total: usize = degrees.iter().sum();
    if total % 2 == 1 || degrees.iter().any(|&d| d >= n.max(1)) && total > 0 {
        return Err(ConstructError::NotGraphical(degrees.to_vec()));
    }
    'restart: for _ in 0..MAX_RESTARTS {
        let mut stubs: Vec<usize> = degrees
            .iter()
            .enumerate()
            .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
            .collect();
        stubs.shuffle(rng);
        let mut adj = vec![Vec::<usize>::new(); n];
        while !stubs.is_empty() {
            let len = stubs.len();
            let ok = |i: usize, j: usize, adj: &[Vec<usize>]| {
                i != j && stubs[i] != stubs[j] && !adj[stubs[i]].contains(&stubs[j])
            };
            let mut pick = None;
            for _ in 0..32 {
                let (i, j) = (rng.gen_range(0..len), rng.gen_range(0..len));
                if ok(i, j, &adj) {
                    pick = Some((i, j));
                    break;
                }
            }
            if pick.is_none() {
                let valid: Vec<(usize, usize)> = (0..len)
                    .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
                    .filter(|&(i, j)| ok(i, j, &adj))
                    .collect();
                match valid.choose(rng) {
                    Some(&p) => pick = Some(p),
                    None => continue 'restart,
                }
            }
            let (i, j) = pick.expect("pair chosen");
            let (u, v) = (stubs[i], stubs[j]);
            adj[u].push(v);
            adj[v].push(u);
            let (hi, lo) = (i.max(j), i.min(j));
            stubs.swap_remove(hi);
            stubs.swap_remove(lo);
        }
        let edges = adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect::<Vec<_>>();
        return Ok(Graph::from_edges(n, edges).expect("in range"));
    }
    Err(ConstructError::RejectionBudgetExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_figures() {
        let a = circulant(8, &[1, 3]).unwrap();
        assert_eq!(a.regular_degree(), Some(4));
        assert_eq!(a.edge_count(), 16);
        let b = circulant(8, &[1, 3, 4]).unwrap();
        assert_eq!(b.regular_degree(), Some(5));
        assert_eq!(b.edge_count(), 20);
        assert!(circulant(5, &[1]).unwrap().same_edges(&cycle(5).unwrap()));
    }

    #[test]
    fn circulant_rotation_is_an_automorphism() {
        for (n, gens) in [(8, vec![1, 3]), (9, vec![1, 2]), (10, vec![2, 5]), (11, vec![1, 2, 3])] {
            let g = circulant(n, &gens).unwrap();
            assert!(g.regular_degree().is_some());
            for (u, v) in g.edges() {
                assert!(g.has_edge((u + 1) % n, (v + 1) % n));
            }
        }
    }

    #[test]
    fn circulant_rejects_bad_generators() {
        assert!(matches!(
            circulant(8, &[5]),
            Err(ConstructError::GeneratorOutOfRange { s: 5, .. })
        ));
        assert!(matches!(circulant(8, &[0]), Err(ConstructError::GeneratorOutOfRange { .. })));
        assert_eq!(circulant(8, &[]), Err(ConstructError::NoGenerators));
        assert!(circulant(2, &[1]).is_err());
    }

    #[test]
    fn hypercubes() {
        assert!(hypercube(1).unwrap().same_edges(&complete(2).unwrap()));
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.edge_count(), 12);
        assert_eq!(q3.regular_degree(), Some(3));
        assert_eq!(q3.rotation_map().unwrap().rotate(5, 1), (7, 1));
        assert!(hypercube(0).is_err());
    }

    #[test]
    fn small_named_graphs() {
        assert!(complete(4).unwrap().same_edges(&circulant(4, &[1, 2]).unwrap()));
        assert!(cycle(3).unwrap().same_edges(&complete(3).unwrap()));
        let s = star(5).unwrap();
        assert!(s.is_star());
        assert_eq!(s.edge_count(), 4);
        assert!(cycle(2).is_err());
        assert!(star(1).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn random_regular_cases() {
        let g = random_regular(8, 3, 1).unwrap();
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g, random_regular(8, 3, 1).unwrap());
        assert_eq!(random_regular(5, 3, 1), Err(ConstructError::OddDegreeSum { n: 5, d: 3 }));
        assert!(random_regular(6, 5, 7).unwrap().same_edges(&complete(6).unwrap()));
        assert_eq!(random_regular(4, 4, 0), Err(ConstructError::DegreeTooLarge { n: 4, d: 4 }));
    }

    #[test]
    fn random_regular_degree_sweep() {
        for seed in 0..40 {
            for n in 4..=14 {
                for d in 1..n {
                    if n * d % 2 == 1 {
                        continue;
                    }
                    let g = random_regular(n, d, seed).unwrap();
                    assert_eq!(g.regular_degree(), Some(d), "n={n} d={d} seed={seed}");
                }
            }
        }
    }
}
