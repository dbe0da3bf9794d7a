use std::sync::Arc;

use super::{validate_action, Action, ActionViolation, Group};

/// `A ⋊_φ B` on pairs `(a, b)`, encoded as the id `a·|B| + b`.
///
/// With this encoding the Cayley graph of the product numbers its vertices
/// exactly like the replacement product `C_A(S_A) ® C_B(S_B)`.
#[derive(Debug, Clone)]
pub struct SemidirectProduct {
    action: Action,
    nb: usize,
}

/// Validates `act` and forms the semidirect product of its target by its
/// acting group.
pub fn semidirect_product(act: Action, seed: u64) -> Result<Arc<SemidirectProduct>, ActionViolation> {
    validate_action(&act, seed)?;
    Ok(Arc::new(SemidirectProduct::new_unchecked(act)))
}

impl SemidirectProduct {
    /// Skips action validation; [`semidirect_product`] is the checked path.
    pub fn new_unchecked(action: Action) -> Self {
        let nb = action.acting().order();
        SemidirectProduct { action, nb }
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn pair(&self, id: usize) -> (usize, usize) {
        (id / self.nb, id % self.nb)
    }

    pub fn id(&self, a: usize, b: usize) -> usize {
        a * self.nb + b
    }
}

impl Group for SemidirectProduct {
    fn order(&self) -> usize {
        self.action.target().order() * self.nb
    }

    fn identity(&self) -> usize {
        self.id(self.action.target().identity(), self.action.acting().identity())
    }

    /// `(a₁, b₁)(a₂, b₂) = (a₁·φ_{b₁}(a₂), b₁b₂)`.
    fn op(&self, x: usize, y: usize) -> usize {
        let ((a1, b1), (a2, b2)) = (self.pair(x), self.pair(y));
        let (ga, gb) = (self.action.target(), self.action.acting());
        self.id(ga.op(a1, self.action.apply(b1, a2)), gb.op(b1, b2))
    }

    /// `(a, b)⁻¹ = (φ_{b⁻¹}(a⁻¹), b⁻¹)`.
    fn inverse(&self, x: usize) -> usize {
        let (a, b) = self.pair(x);
        let (ga, gb) = (self.action.target(), self.action.acting());
        let binv = gb.inverse(b);
        self.id(self.action.apply(binv, ga.inverse(a)), binv)
    }

    fn label(&self, x: usize) -> String {
        let (a, b) = self.pair(x);
        format!("({},{})", self.action.target().label(a), self.action.acting().label(b))
    }
}
