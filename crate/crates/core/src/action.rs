use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::homsearch::AutomorphismGroup;

/// An action of `actor` on `target` by automorphisms: `perms[b][x] = b·x`.
#[derive(Clone, PartialEq, Eq)]
pub struct Action {
    actor: FiniteGroup,
    target: FiniteGroup,
    perms: Vec<Vec<usize>>,
}

impl Action {
    pub fn new(actor: FiniteGroup, target: FiniteGroup, perms: Vec<Vec<usize>>) -> Result<Self> {
        if perms.len() != actor.order() {
            return Err(Error::NotAction(format!(
                "{} permutations for an actor of order {}",
                perms.len(),
                actor.order()
            )));
        }
        for (b, p) in perms.iter().enumerate() {
            if p.len() != target.order() || p.iter().any(|&v| v >= target.order()) {
                return Err(Error::NotAction(format!("row {b} is not a map on the target")));
            }
            if !GroupHom::new_unchecked(target.clone(), target.clone(), p.clone()).is_isomorphism() {
                return Err(Error::NotAction(format!("row {b} is not a bijection")));
            }
            for x in target.elements() {
                for y in target.elements() {
                    if p[target.mul(x, y)] != target.mul(p[x], p[y]) {
                        return Err(Error::NotAction(format!("row {b} is not an automorphism")));
                    }
                }
            }
        }
        for b in actor.elements() {
            for c in actor.elements() {
                let bc = actor.mul(b, c);
                if target.elements().any(|x| perms[bc][x] != perms[b][perms[c][x]]) {
                    return Err(Error::NotAction(format!("({b}*{c}) acts differently from {b} after {c}")));
                }
            }
        }
        Ok(Action { actor, target, perms })
    }

    pub(crate) fn new_unchecked(actor: FiniteGroup, target: FiniteGroup, perms: Vec<Vec<usize>>) -> Self {
        Action { actor, target, perms }
    }

    pub fn trivial(actor: &FiniteGroup, target: &FiniteGroup) -> Self {
        let id: Vec<usize> = target.elements().collect();
        Action::new_unchecked(actor.clone(), target.clone(), vec![id; actor.order()])
    }

    /// The action obtained from a homomorphism `actor → Aut(target)`.
    pub fn from_aut_hom(hom: &GroupHom, auts: &AutomorphismGroup) -> Self {
        let perms = hom.map().iter().map(|&a| auts.perm(a).to_vec()).collect();
        Action::new_unchecked(hom.domain().clone(), auts.target().clone(), perms)
    }

    pub fn actor(&self) -> &FiniteGroup {
        &self.actor
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn perm(&self, b: usize) -> &[usize] {
        &self.perms[b]
    }

    #[inline]
    pub fn apply(&self, b: usize, x: usize) -> usize {
        self.perms[b][x]
    }

    pub fn is_trivial(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(i, &v)| i == v))
    }
}

impl std::fmt::Debug for Action {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Action({} on {}: {:?})", self.actor.label(), self.target.label(), self.perms)
    }
}
