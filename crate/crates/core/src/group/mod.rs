//! Finite groups with elements encoded as dense ids `0..order`.

mod action;
mod cayley;
mod semidirect;

use std::fmt::Debug;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use action::{orbit, shift_action, validate_action, Action, ActionMap, ActionReport, ActionViolation};
pub use cayley::{
    build_semidirect_cayley, cayley_graph, generates, shift_semidirect_cayley, shift_semidirect_input, AssumptionError, AssumptionReport,
    CayleyError, CayleySpec, SemidirectCayleyInput,
};
pub use semidirect::{semidirect_product, SemidirectProduct};

/// Largest group order whose axioms are checked on every triple.
pub const EXHAUSTIVE_GROUP_ORDER: usize = 512;
/// Largest bit width of [`BooleanVectorGroup`].
pub const MAX_BOOLEAN_BITS: usize = 24;

pub trait Group: Debug + Send + Sync {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn op(&self, a: usize, b: usize) -> usize;
    fn inverse(&self, a: usize) -> usize;
    /// Human-readable name of element `a`.
    fn label(&self, a: usize) -> String;
}

pub type GroupRef = Arc<dyn Group>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("cyclic group order must be at least 1")]
    EmptyCyclic,
    #[error("boolean vector length {0} is outside 1..={MAX_BOOLEAN_BITS}")]
    BitsOutOfRange(usize),
}

/// `ℤ_n` under addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicGroup {
    n: usize,
}

pub fn cyclic_group(n: usize) -> Result<CyclicGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::EmptyCyclic);
    }
    Ok(CyclicGroup { n })
}

impl Group for CyclicGroup {
    fn order(&self) -> usize {
        self.n
    }
    fn identity(&self) -> usize {
        0
    }
    fn op(&self, a: usize, b: usize) -> usize {
        (a + b) % self.n
    }
    fn inverse(&self, a: usize) -> usize {
        (self.n - a) % self.n
    }
    fn label(&self, a: usize) -> String {
        a.to_string()
    }
}

/// `(ℤ₂)ⁿ` under XOR. Element ids are the words themselves; coordinate
/// `i` (1-based, as in `e_i`) is bit `i - 1`, and labels list bit 0 first,
/// so `e₁` prints as `100` when `n = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BooleanVectorGroup {
    bits: usize,
}

pub fn boolean_vector_group(bits: usize) -> Result<BooleanVectorGroup, GroupError> {
    if bits == 0 || bits > MAX_BOOLEAN_BITS {
        return Err(GroupError::BitsOutOfRange(bits));
    }
    Ok(BooleanVectorGroup { bits })
}

impl BooleanVectorGroup {
    pub fn bits(&self) -> usize {
        self.bits
    }

    /// The unit vector `e_i`, `1 ≤ i ≤ bits`; `e_0` is the zero word.
    pub fn unit(&self, i: usize) -> usize {
        assert!(i <= self.bits, "unit vector index out of range");
        if i == 0 {
            0
        } else {
            1 << (i - 1)
        }
    }
}

impl Group for BooleanVectorGroup {
    fn order(&self) -> usize {
        1 << self.bits
    }
    fn identity(&self) -> usize {
        0
    }
    fn op(&self, a: usize, b: usize) -> usize {
        a ^ b
    }
    fn inverse(&self, a: usize) -> usize {
        a
    }
    fn label(&self, a: usize) -> String {
        (0..self.bits).map(|i| if a >> i & 1 == 1 { '1' } else { '0' }).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupViolation {
    #[error("{a}·{b} = {result} is not an element")]
    NotClosed { a: usize, b: usize, result: usize },
    #[error("identity fails on {0}")]
    Identity(usize),
    #[error("inverse fails on {0}")]
    Inverse(usize),
    #[error("({a}·{b})·{c} ≠ {a}·({b}·{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

const SAMPLED_TRIPLES: usize = 1 << 16;

/// Checks closure, identity, inverses and associativity. Associativity is
/// exhaustive up to [`EXHAUSTIVE_GROUP_ORDER`] and sampled with `seed`
/// above it.
pub fn validate_group(g: &dyn Group, seed: u64) -> Result<CheckMode, GroupViolation> {
    let n = g.order();
    let e = g.identity();
    let checked = |a: usize, b: usize| -> Result<usize, GroupViolation> {
        let r = g.op(a, b);
        if r >= n {
            Err(GroupViolation::NotClosed { a, b, result: r })
        } else {
            Ok(r)
        }
    };
    for a in 0..n {
        if checked(e, a)? != a || checked(a, e)? != a {
            return Err(GroupViolation::Identity(a));
        }
        let inv = g.inverse(a);
        if inv >= n || checked(a, inv)? != e || checked(inv, a)? != e {
            return Err(GroupViolation::Inverse(a));
        }
    }
    let assoc = |a: usize, b: usize, c: usize| -> Result<(), GroupViolation> {
        if checked(checked(a, b)?, c)? != checked(a, checked(b, c)?)? {
            Err(GroupViolation::NotAssociative { a, b, c })
        } else {
            Ok(())
        }
    };
    if n <= EXHAUSTIVE_GROUP_ORDER {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assoc(a, b, c)?;
                }
            }
        }
        Ok(CheckMode::Exhaustive)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_TRIPLES {
            assoc(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
        Ok(CheckMode::Sampled {
            samples: SAMPLED_TRIPLES,
            seed,
        })
    }
}
