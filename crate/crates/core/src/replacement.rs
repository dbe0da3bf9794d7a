//! Replacement products `G₁ ® G₂`.
//!
//! Every vertex `x` of a `δ₁`-regular `G₁` is replaced by a copy of a graph
//! `G₂` on `δ₁` vertices; copy vertex `(x, i)` carries the edge leaving `x`
//! through port `i`. Product vertex `(x, i)` has id `x·δ₁ + i`.

use serde::Serialize;

use crate::families::circulant;
use crate::graph::{Edge, Graph, RotationError, RotationMap};
use crate::group::{
    build_semidirect_cayley, cayley_graph, AssumptionError, CayleyError, CayleySpec, Group, SemidirectCayleyInput,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RotationStrategy {
    /// Port `i` leads to the `i`-th smallest neighbour.
    SortedNeighbors,
    /// Port `i` flips bit `i`; requires the canonical hypercube numbering.
    HypercubeDims,
    /// The circulant labelling of [`crate::families::circulant`]; the
    /// generators are read off vertex 0.
    CirculantGens,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReplacementError {
    #[error("{0} is not regular")]
    NotRegular(&'static str),
    #[error("G₂ must have δ₁ = {expected} vertices, found {found}")]
    FiberSizeMismatch { expected: usize, found: usize },
    #[error("G₁ has no edges")]
    Edgeless,
    #[error("rotation map: {0}")]
    Rotation(#[from] RotationError),
    #[error("rotation strategy {strategy:?} does not apply: {reason}")]
    StrategyNotApplicable {
        strategy: RotationStrategy,
        reason: &'static str,
    },
}

/// Builds a rotation map for a regular graph.
pub fn default_rotation_map(g: &Graph, strategy: RotationStrategy) -> Result<RotationMap, ReplacementError> {
    let d = g.regular_degree().ok_or(ReplacementError::NotRegular("G₁"))?;
    let n = g.vertex_count();
    let not_applicable = |reason| ReplacementError::StrategyNotApplicable { strategy, reason };
    let rot = match strategy {
        RotationStrategy::SortedNeighbors => RotationMap::from_ports(
            (0..n)
                .map(|x| {
                    g.neighbors(x)
                        .iter()
                        .map(|&y| {
                            let back = g.neighbors(y).binary_search(&x).expect("symmetric adjacency");
                            (y, back)
                        })
                        .collect()
                })
                .collect(),
        ),
        RotationStrategy::HypercubeDims => {
            if n != 1 << d || !(0..n).all(|x| (0..d).all(|i| g.has_edge(x, x ^ (1 << i)))) {
                return Err(not_applicable("graph is not a hypercube in canonical numbering"));
            }
            RotationMap::from_ports((0..n).map(|x| (0..d).map(|i| (x ^ (1 << i), i)).collect()).collect())
        }
        RotationStrategy::CirculantGens => {
            let mut gens: Vec<usize> = g.neighbors(0).iter().map(|&y| y.min(n - y)).collect();
            gens.sort_unstable();
            gens.dedup();
            let c = circulant(n, &gens).map_err(|_| not_applicable("graph is not a circulant"))?;
            if !c.same_edges(g) {
                return Err(not_applicable("graph is not a circulant"));
            }
            c.rotation_map().expect("circulants carry ports").clone()
        }
    };
    rot.validate(g)?;
    Ok(rot)
}

/// The copies `{x} × V(G₂)`, block `x` holding ids `x·δ₁ .. (x+1)·δ₁`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl BlockPartition {
    pub fn block_of(&self, v: usize) -> usize {
        v / self.blocks[0].len()
    }
}

/// `G₁ ® G₂` under the port labelling `rot`.
pub fn replacement_product(g1: &Graph, rot: &RotationMap, g2: &Graph) -> Result<(Graph, BlockPartition), ReplacementError> {
    let d1 = g1.regular_degree().ok_or(ReplacementError::NotRegular("G₁"))?;
    if d1 == 0 {
        return Err(ReplacementError::Edgeless);
    }
    g2.regular_degree().ok_or(ReplacementError::NotRegular("G₂"))?;
    if g2.vertex_count() != d1 {
        return Err(ReplacementError::FiberSizeMismatch {
            expected: d1,
            found: g2.vertex_count(),
        });
    }
    rot.validate(g1)?;
    let n = g1.vertex_count();
    let id = |x: usize, i: usize| x * d1 + i;
    let mut edges: Vec<Edge> = Vec::with_capacity(n * (g2.edge_count() + d1));
    for x in 0..n {
        edges.extend(g2.edges().map(|(i, j)| (id(x, i), id(x, j))));
        for i in 0..d1 {
            let (y, j) = rot.rotate(x, i);
            if x < y {
                edges.push((id(x, i), id(y, j)));
            }
        }
    }
    let g = Graph::from_edges(n * d1, edges).expect("product ids are in range");
    let blocks = (0..n).map(|x| (0..d1).map(|i| id(x, i)).collect()).collect();
    Ok((g, BlockPartition { blocks }))
}

/// Number of product edges joining different blocks.
pub fn cross_edge_count(g1: &Graph, rot: &RotationMap, g2: &Graph) -> Result<usize, ReplacementError> {
    let (g, blocks) = replacement_product(g1, rot, g2)?;
    Ok(g.edges().filter(|&(u, v)| blocks.block_of(u) != blocks.block_of(v)).count())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub edges_equal: bool,
    /// Smallest edge present in exactly one of the two graphs.
    pub witness: Option<Edge>,
    pub witness_labels: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorrespondenceError {
    #[error(transparent)]
    Assumption(#[from] AssumptionError),
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Replacement(#[from] ReplacementError),
}

/// The rotation map of `C_A(S_A)` induced by the action:
/// `rot(y, i) = (y·φ_i(x), i)`, one port per element `i` of `B`.
pub fn induced_rotation_map(input: &SemidirectCayleyInput) -> RotationMap {
    let (ga, gb) = (input.action.target(), input.action.acting());
    RotationMap::from_ports(
        (0..ga.order())
            .map(|y| (0..gb.order()).map(|i| (ga.op(y, input.action.apply(i, input.x)), i)).collect())
            .collect(),
    )
}

/// Builds `C_{A⋊B}(S)` and `C_A(S_A) ® C_B(S_B)` (with the induced rotation
/// map) and compares their edge sets under the identity on ids.
pub fn check_cayley_replacement(input: &SemidirectCayleyInput, seed: u64) -> Result<CorrespondenceReport, CorrespondenceError> {
    let (spec, product, _) = build_semidirect_cayley(input, seed)?;
    let cayley = cayley_graph(&spec);
    let g1 = cayley_graph(&CayleySpec::new(input.action.target().clone(), input.a_gens.clone())?);
    let g2 = cayley_graph(&CayleySpec::new(input.action.acting().clone(), input.b_gens.clone())?);
    let rot = induced_rotation_map(input);
    rot.validate(&g1).map_err(ReplacementError::from)?;
    let (replaced, _) = replacement_product(&g1, &rot, &g2)?;

    let witness = first_difference(&cayley, &replaced);
    Ok(CorrespondenceReport {
        vertex_count: cayley.vertex_count(),
        edge_count: cayley.edge_count(),
        edges_equal: witness.is_none() && cayley.vertex_count() == replaced.vertex_count(),
        witness,
        witness_labels: witness.map(|(u, v)| (product.label(u), product.label(v))),
    })
}

fn first_difference(a: &Graph, b: &Graph) -> Option<Edge> {
    let (mut ea, mut eb) = (a.edges().peekable(), b.edges().peekable());
    loop {
        match (ea.peek(), eb.peek()) {
            (None, None) => return None,
            (Some(&x), None) | (None, Some(&x)) => return Some(x),
            (Some(&x), Some(&y)) if x == y => {
                ea.next();
                eb.next();
            }
            (Some(&x), Some(&y)) => return Some(x.min(y)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, hypercube};
    use crate::group::shift_semidirect_input;

    #[test]
    fn sorted_neighbours_on_k4_and_c5() {
        let k4 = complete(4).unwrap();
        let rot = default_rotation_map(&k4, RotationStrategy::SortedNeighbors).unwrap();
        assert_eq!(rot.ports(0).iter().map(|p| p.0).collect::<Vec<_>>(), vec![1, 2, 3]);
        let c5 = cycle(5).unwrap();
        let rot = default_rotation_map(&c5, RotationStrategy::SortedNeighbors).unwrap();
        for x in 0..5 {
            for i in 0..2 {
                let (y, j) = rot.rotate(x, i);
                assert_eq!(rot.rotate(y, j), (x, i));
            }
        }
    }

    #[test]
    fn hypercube_dims_labels_both_ends_equally() {
        let q3 = hypercube(3).unwrap();
        let rot = default_rotation_map(&q3, RotationStrategy::HypercubeDims).unwrap();
        for x in 0..8 {
            for i in 0..3 {
                assert_eq!(rot.rotate(x, i), (x ^ (1 << i), i));
            }
        }
        assert!(default_rotation_map(&complete(4).unwrap(), RotationStrategy::HypercubeDims).is_err());
    }

    #[test]
    fn circulant_strategy_recovers_generators() {
        let g = circulant(9, &[1, 2]).unwrap();
        let plain = Graph::from_edges(9, g.edges().collect::<Vec<_>>()).unwrap();
        let rot = default_rotation_map(&plain, RotationStrategy::CirculantGens).unwrap();
        assert_eq!(&rot, g.rotation_map().unwrap());
        assert!(default_rotation_map(&hypercube(3).unwrap(), RotationStrategy::CirculantGens).is_err());
    }

    #[test]
    fn k4_replaced_by_triangles() {
        let k4 = complete(4).unwrap();
        let rot = default_rotation_map(&k4, RotationStrategy::SortedNeighbors).unwrap();
        let (g, blocks) = replacement_product(&k4, &rot, &cycle(3).unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.min_edge_degree().unwrap(), 4);
        assert_eq!(blocks.blocks.len(), 4);
        assert_eq!(cross_edge_count(&k4, &rot, &cycle(3).unwrap()).unwrap(), 6);
    }

    #[test]
    fn cube_connected_cycles() {
        let q3 = hypercube(3).unwrap();
        let rot = default_rotation_map(&q3, RotationStrategy::HypercubeDims).unwrap();
        let (g, _) = replacement_product(&q3, &rot, &cycle(3).unwrap()).unwrap();
        assert_eq!((g.vertex_count(), g.regular_degree()), (24, Some(3)));
        assert!(g.is_connected());
        assert_eq!(cross_edge_count(&q3, &rot, &cycle(3).unwrap()).unwrap(), 12);
        let k3 = complete(3).unwrap();
        let (inflated, _) = replacement_product(&q3, &rot, &k3).unwrap();
        assert_eq!(inflated.vertex_count(), 24);
    }

    #[test]
    fn inflation_cross_edges() {
        let g = circulant(7, &[1, 2]).unwrap();
        let rot = g.rotation_map().unwrap().clone();
        assert_eq!(cross_edge_count(&g, &rot, &complete(4).unwrap()).unwrap(), 14);
    }

    #[test]
    fn rejects_bad_factors() {
        let k4 = complete(4).unwrap();
        let rot = default_rotation_map(&k4, RotationStrategy::SortedNeighbors).unwrap();
        assert_eq!(
            replacement_product(&k4, &rot, &cycle(4).unwrap()).unwrap_err(),
            ReplacementError::FiberSizeMismatch { expected: 3, found: 4 }
        );
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            default_rotation_map(&path, RotationStrategy::SortedNeighbors).unwrap_err(),
            ReplacementError::NotRegular("G₁")
        );
    }

    #[test]
    fn cayley_equals_replacement() {
        for (n, gens) in [(3, vec![1]), (4, vec![1]), (6, vec![1, 2])] {
            let report = check_cayley_replacement(&shift_semidirect_input(n, &gens).unwrap(), 0).unwrap();
            assert!(report.edges_equal, "n={n}: {report:?}");
            assert_eq!(report.vertex_count, n << n);
        }
    }

    #[test]
    fn mismatch_produces_witness() {
        let c4 = cycle(4).unwrap();
        let mut edges: Vec<_> = c4.edges().collect();
        edges[0] = (0, 2);
        let other = Graph::from_edges(4, edges).unwrap();
        assert_eq!(first_difference(&c4, &other), Some((0, 1)));
        assert_eq!(first_difference(&c4, &c4), None);
    }
}
