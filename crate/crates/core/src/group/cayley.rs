use std::collections::VecDeque;
use std::sync::Arc;

use serde::Serialize;

use super::{
    boolean_vector_group, orbit, shift_action, validate_action, Action, ActionReport, ActionViolation, Group,
    GroupError, GroupRef, SemidirectProduct,
};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CayleyError {
    #[error("element {0} is not in the group")]
    OutOfRange(usize),
    #[error("the identity is in the connection set")]
    IdentityInSet,
    #[error("connection set is not closed under inverses: {0} lacks its inverse")]
    NotInverseClosed(usize),
}

/// A group with an inverse-closed connection set avoiding the identity.
#[derive(Debug, Clone)]
pub struct CayleySpec {
    group: GroupRef,
    connection_set: Vec<usize>,
}

impl CayleySpec {
    pub fn new(group: GroupRef, mut connection_set: Vec<usize>) -> Result<Self, CayleyError> {
        connection_set.sort_unstable();
        connection_set.dedup();
        if let Some(&s) = connection_set.iter().find(|&&s| s >= group.order()) {
            return Err(CayleyError::OutOfRange(s));
        }
        if connection_set.binary_search(&group.identity()).is_ok() {
            return Err(CayleyError::IdentityInSet);
        }
        if let Some(&s) = connection_set
            .iter()
            .find(|&&s| connection_set.binary_search(&group.inverse(s)).is_err())
        {
            return Err(CayleyError::NotInverseClosed(s));
        }
        Ok(CayleySpec { group, connection_set })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    /// Sorted connection set.
    pub fn connection_set(&self) -> &[usize] {
        &self.connection_set
    }
}

/// `C_Γ(S)`: vertex ids are element ids and `x ~ x·s` for `s ∈ S`.
pub fn cayley_graph(spec: &CayleySpec) -> Graph {
    let g = &spec.group;
    let edges: Vec<_> = (0..g.order())
        .flat_map(|x| spec.connection_set.iter().map(move |&s| (x, g.op(x, s))))
        .filter(|&(x, y)| x < y)
        .collect();
    Graph::from_edges(g.order(), edges).expect("group elements are in range")
}

/// Whether `set` generates the whole group.
pub fn generates(group: &dyn Group, set: &[usize]) -> bool {
    let n = group.order();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([group.identity()]);
    seen[group.identity()] = true;
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &s in set {
            let y = group.op(x, s);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count == n
}

/// Inputs to the semidirect Cayley construction: `S_A = x^B`, `S_B`, and
/// `S = {(e_A, b) : b ∈ S_B} ∪ {(x, e_B)}`.
#[derive(Debug, Clone)]
pub struct SemidirectCayleyInput {
    pub action: Action,
    pub a_gens: Vec<usize>,
    pub b_gens: Vec<usize>,
    pub x: usize,
}

/// `A = (ℤ₂)ⁿ`, `B = ℤ_n` with the shift action, `S_A = {e₁..e_n}`,
/// `S_B = ±gens` and `x = e₁`.
pub fn shift_semidirect_input(n: usize, gens: &[usize]) -> Result<SemidirectCayleyInput, GroupError> {
    let a = boolean_vector_group(n)?;
    let mut b_gens: Vec<usize> = gens.iter().flat_map(|&s| [s % n, (n - s % n) % n]).collect();
    b_gens.sort_unstable();
    b_gens.dedup();
    Ok(SemidirectCayleyInput {
        action: shift_action(n)?,
        a_gens: (1..=n).map(|i| a.unit(i)).collect(),
        b_gens,
        x: a.unit(1),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssumptionReport {
    pub group_order: usize,
    pub connection_set: Vec<String>,
    pub b_gens_inverse_closed: bool,
    pub x_is_involution: bool,
    pub s_inverse_closed: bool,
    /// `S = S⁻¹ ⟺ (S_B = S_B⁻¹ ∧ x = x⁻¹)` evaluated on this input.
    pub symmetry_equivalence_holds: bool,
    pub action: ActionReport,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AssumptionError {
    #[error("invalid action: {0}")]
    InvalidAction(#[from] ActionViolation),
    #[error("|S_A| = {s_a} differs from |B| = {b}")]
    SizeMismatch { s_a: usize, b: usize },
    #[error("|B| = {0} must be at least 2")]
    ActingGroupTooSmall(usize),
    #[error("x is not in S_A")]
    XNotInGenerators,
    #[error("S_A is not the orbit of x")]
    NotAnOrbit,
    #[error("S_B does not generate B")]
    BNotGenerated,
    #[error("S_A does not generate A")]
    ANotGenerated,
    #[error("S is not inverse-closed (S_B inverse-closed: {b_gens_inverse_closed}, x involution: {x_is_involution})")]
    NotSymmetric {
        b_gens_inverse_closed: bool,
        x_is_involution: bool,
    },
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Checks the construction's preconditions and returns the Cayley spec over
/// `A ⋊_φ B` together with the product group.
pub fn build_semidirect_cayley(
    input: &SemidirectCayleyInput,
    seed: u64,
) -> Result<(CayleySpec, Arc<SemidirectProduct>, AssumptionReport), AssumptionError> {
    let action_report = validate_action(&input.action, seed)?;
    let (ga, gb) = (input.action.target().clone(), input.action.acting().clone());
    let mut a_gens = input.a_gens.clone();
    a_gens.sort_unstable();
    a_gens.dedup();
    let mut b_gens = input.b_gens.clone();
    b_gens.sort_unstable();
    b_gens.dedup();

    if gb.order() < 2 {
        return Err(AssumptionError::ActingGroupTooSmall(gb.order()));
    }
    if a_gens.len() != gb.order() {
        return Err(AssumptionError::SizeMismatch {
            s_a: a_gens.len(),
            b: gb.order(),
        });
    }
    if a_gens.binary_search(&input.x).is_err() {
        return Err(AssumptionError::XNotInGenerators);
    }
    if orbit(&input.action, input.x) != a_gens {
        return Err(AssumptionError::NotAnOrbit);
    }
    if !generates(gb.as_ref(), &b_gens) {
        return Err(AssumptionError::BNotGenerated);
    }
    if !generates(ga.as_ref(), &a_gens) {
        return Err(AssumptionError::ANotGenerated);
    }

    let product = Arc::new(SemidirectProduct::new_unchecked(input.action.clone()));
    let mut s: Vec<usize> = b_gens.iter().map(|&b| product.id(ga.identity(), b)).collect();
    s.push(product.id(input.x, gb.identity()));
    s.sort_unstable();
    s.dedup();
    let s_inverse_closed = s.iter().all(|&y| s.binary_search(&product.inverse(y)).is_ok());
    let b_gens_inverse_closed = b_gens.iter().all(|&b| b_gens.binary_search(&gb.inverse(b)).is_ok());
    let x_is_involution = ga.inverse(input.x) == input.x;
    if !s_inverse_closed {
        return Err(AssumptionError::NotSymmetric {
            b_gens_inverse_closed,
            x_is_involution,
        });
    }
    let report = AssumptionReport {
        group_order: product.order(),
        connection_set: s.iter().map(|&y| product.label(y)).collect(),
        b_gens_inverse_closed,
        x_is_involution,
        s_inverse_closed,
        symmetry_equivalence_holds: s_inverse_closed == (b_gens_inverse_closed && x_is_involution),
        action: action_report,
    };
    let group: GroupRef = product.clone();
    let spec = CayleySpec::new(group, s)?;
    Ok((spec, product, report))
}

/// `C_{(ℤ₂)ⁿ⋊ℤ_n}(S)` for `S_B = ±gens`; `gens = [1]` gives the
/// cube-connected cycles `CCC_n`.
pub fn shift_semidirect_cayley(n: usize, gens: &[usize]) -> Result<Graph, AssumptionError> {
    let (spec, _, _) = build_semidirect_cayley(&shift_semidirect_input(n, gens)?, 0)?;
    Ok(cayley_graph(&spec))
}
