use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{boolean_vector_group, cyclic_group, CheckMode, GroupError, GroupRef};

/// Pair count above which [`validate_action`] samples instead of
/// enumerating.
pub const EXHAUSTIVE_ACTION_PAIRS: usize = 1 << 20;
const EXHAUSTIVE_TRIPLES: usize = 1 << 26;
const SAMPLED_CHECKS: usize = 1 << 18;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionMap {
    /// `φ_b` is the identity for every `b`.
    Trivial,
    /// `φ_i` moves bit `p` of an `bits`-bit word to bit `(p + i) mod bits`.
    BitRotation { bits: usize },
    /// `table[b][a] = φ_b(a)`.
    Table(Vec<Vec<usize>>),
}

/// An action of `acting` (B) on `target` (A), `φ: B → Aut(A)`.
#[derive(Debug, Clone)]
pub struct Action {
    acting: GroupRef,
    target: GroupRef,
    map: ActionMap,
}

impl Action {
    pub fn new(acting: GroupRef, target: GroupRef, map: ActionMap) -> Self {
        Action { acting, target, map }
    }

    pub fn trivial(acting: GroupRef, target: GroupRef) -> Self {
        Action::new(acting, target, ActionMap::Trivial)
    }

    pub fn acting(&self) -> &GroupRef {
        &self.acting
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    pub fn map(&self) -> &ActionMap {
        &self.map
    }

    /// `φ_b(a)`.
    pub fn apply(&self, b: usize, a: usize) -> usize {
        match &self.map {
            ActionMap::Trivial => a,
            ActionMap::BitRotation { bits } => {
                let n = *bits;
                let i = b % n;
                let mask = (1usize << n) - 1;
                if i == 0 {
                    a
                } else {
                    ((a << i) | (a >> (n - i))) & mask
                }
            }
            ActionMap::Table(t) => t[b][a],
        }
    }
}

/// `ℤ_n` acting on `(ℤ₂)ⁿ` by cyclic coordinate shift, normalised so that
/// `φ_i(e₁) = e_{i+1}`.
pub fn shift_action(n: usize) -> Result<Action, GroupError> {
    let a = boolean_vector_group(n)?;
    let b = cyclic_group(n)?;
    Ok(Action::new(Arc::new(b), Arc::new(a), ActionMap::BitRotation { bits: n }))
}

/// Sorted orbit `x^B = {φ_b(x) : b ∈ B}`.
pub fn orbit(act: &Action, x: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..act.acting.order()).map(|b| act.apply(b, x)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub mode: CheckMode,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub triples_total: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActionViolation {
    #[error("φ_{b} maps {a} outside the target group")]
    OutOfRange { b: usize, a: usize },
    #[error("φ_{b} is not a bijection")]
    NotBijective { b: usize },
    #[error("φ_{b} does not fix the identity")]
    IdentityNotFixed { b: usize },
    #[error("φ_{b}({a}⁻¹) ≠ φ_{b}({a})⁻¹")]
    InverseNotPreserved { b: usize, a: usize },
    #[error("φ_{b}({a1}·{a2}) ≠ φ_{b}({a1})·φ_{b}({a2})")]
    NotHomomorphism { b: usize, a1: usize, a2: usize },
    #[error("φ_({b1}·{b2})({a}) ≠ φ_{b1}(φ_{b2}({a}))")]
    NotComposition { b1: usize, b2: usize, a: usize },
    #[error("φ_e is not the identity map at {a}")]
    IdentityNotTrivial { a: usize },
}

/// Checks that `φ` is a homomorphism `B → Aut(A)`.
///
/// Per-pair checks (bijectivity, fixed identity, inverses, `φ_e = id`) are
/// exhaustive when `|A|·|B| ≤ 2²⁰`; the two triple identities are
/// exhaustive while their triple count stays below `2²⁶`. Anything larger
/// is sampled with `seed` and the report says so.
pub fn validate_action(act: &Action, seed: u64) -> Result<ActionReport, ActionViolation> {
    let (na, nb) = (act.target.order(), act.acting.order());
    let (ga, gb) = (&act.target, &act.acting);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sampled = false;

    let pairs = na * nb;
    let pair_list: Box<dyn Iterator<Item = (usize, usize)>> = if pairs <= EXHAUSTIVE_ACTION_PAIRS {
        Box::new((0..nb).flat_map(move |b| (0..na).map(move |a| (b, a))))
    } else {
        sampled = true;
        let picks: Vec<_> = (0..SAMPLED_CHECKS)
            .map(|_| (rng.gen_range(0..nb), rng.gen_range(0..na)))
            .collect();
        Box::new(picks.into_iter())
    };
    let mut pairs_checked = 0;
    for (b, a) in pair_list {
        let image = act.apply(b, a);
        if image >= na {
            return Err(ActionViolation::OutOfRange { b, a });
        }
        if act.apply(b, ga.inverse(a)) != ga.inverse(image) {
            return Err(ActionViolation::InverseNotPreserved { b, a });
        }
        if b == gb.identity() && image != a {
            return Err(ActionViolation::IdentityNotTrivial { a });
        }
        pairs_checked += 1;
    }
    if pairs <= EXHAUSTIVE_ACTION_PAIRS {
        for b in 0..nb {
            if act.apply(b, ga.identity()) != ga.identity() {
                return Err(ActionViolation::IdentityNotFixed { b });
            }
            let mut seen = vec![false; na];
            for a in 0..na {
                let image = act.apply(b, a);
                if seen[image] {
                    return Err(ActionViolation::NotBijective { b });
                }
                seen[image] = true;
            }
        }
    } else {
        for b in 0..nb {
            if act.apply(b, ga.identity()) != ga.identity() {
                return Err(ActionViolation::IdentityNotFixed { b });
            }
        }
    }

    let hom_total = (nb * na) as u128 * na as u128;
    let comp_total = (nb * nb) as u128 * na as u128;
    let triples_total = hom_total + comp_total;
    let hom = |b: usize, a1: usize, a2: usize| {
        if act.apply(b, ga.op(a1, a2)) != ga.op(act.apply(b, a1), act.apply(b, a2)) {
            Err(ActionViolation::NotHomomorphism { b, a1, a2 })
        } else {
            Ok(())
        }
    };
    let comp = |b1: usize, b2: usize, a: usize| {
        if act.apply(gb.op(b1, b2), a) != act.apply(b1, act.apply(b2, a)) {
            Err(ActionViolation::NotComposition { b1, b2, a })
        } else {
            Ok(())
        }
    };
    let mut triples_checked = 0;
    if hom_total <= EXHAUSTIVE_TRIPLES as u128 {
        for b in 0..nb {
            for a1 in 0..na {
                for a2 in 0..na {
                    hom(b, a1, a2)?;
                }
            }
        }
        triples_checked += hom_total as usize;
    } else {
        sampled = true;
        for _ in 0..SAMPLED_CHECKS {
            hom(rng.gen_range(0..nb), rng.gen_range(0..na), rng.gen_range(0..na))?;
        }
        triples_checked += SAMPLED_CHECKS;
    }
    if comp_total <= EXHAUSTIVE_TRIPLES as u128 {
        for b1 in 0..nb {
            for b2 in 0..nb {
                for a in 0..na {
                    comp(b1, b2, a)?;
                }
            }
        }
        triples_checked += comp_total as usize;
    } else {
        sampled = true;
        for _ in 0..SAMPLED_CHECKS {
            comp(rng.gen_range(0..nb), rng.gen_range(0..nb), rng.gen_range(0..na))?;
        }
        triples_checked += SAMPLED_CHECKS;
    }

    Ok(ActionReport {
        mode: if sampled {
            CheckMode::Sampled {
                samples: SAMPLED_CHECKS,
                seed,
            }
        } else {
            CheckMode::Exhaustive
        },
        pairs_checked,
        triples_checked,
        triples_total,
    })
}
