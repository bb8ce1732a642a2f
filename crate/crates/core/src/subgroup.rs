use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;

/// A subgroup of a fixed parent group, stored as a sorted element list plus a
/// membership mask.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    elements: Vec<usize>,
    members: FixedBitSet,
}

impl Subgroup {
    /// Validates that `elements` is a subgroup of `parent`.
    pub fn new(parent: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&bad) = elements.iter().find(|&&x| x >= parent.order()) {
            return Err(Error::NotSubgroup(format!("element {bad} out of range")));
        }
        let sub = Self::from_sorted_unchecked(parent, elements);
        if !sub.contains(0) {
            return Err(Error::NotSubgroup("missing identity".into()));
        }
        for &a in &sub.elements {
            if !sub.contains(parent.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &sub.elements {
                if !sub.contains(parent.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        Ok(sub)
    }

    pub(crate) fn from_sorted_unchecked(parent: &FiniteGroup, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let mut members = FixedBitSet::with_capacity(parent.order());
        elements.iter().for_each(|&x| members.insert(x));
        Subgroup { parent: parent.clone(), elements, members }
    }

    pub(crate) fn from_mask(parent: &FiniteGroup, members: FixedBitSet) -> Self {
        let elements = members.ones().collect();
        Subgroup { parent: parent.clone(), elements, members }
    }

    /// Subgroup generated by `gens`.
    pub fn generated(parent: &FiniteGroup, gens: &[usize]) -> Self {
        let (mask, _) = parent.closure_mask(gens);
        Self::from_mask(parent, mask)
    }

    pub fn trivial(parent: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(parent, vec![0])
    }

    pub fn whole(parent: &FiniteGroup) -> Self {
        Self::from_sorted_unchecked(parent, parent.elements().collect())
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub(crate) fn mask(&self) -> &FixedBitSet {
        &self.members
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.generators().iter().all(|&x| self.elements.iter().all(|&a| self.contains(g.conj(x, a))))
    }

    /// Realizes the subgroup as a group in its own right, together with the
    /// inclusion. Index `i` of the new group is the `i`-th smallest element,
    /// so the identity stays at `0`.
    pub fn materialize(&self) -> (FiniteGroup, GroupHom) {
        let g = &self.parent;
        let mut position = vec![usize::MAX; g.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            position[x] = i;
        }
        let els = &self.elements;
        let group = FiniteGroup::from_fn_unchecked(els.len(), None, |a, b| position[g.mul(els[a], els[b])]);
        let incl = GroupHom::new_unchecked(group.clone(), g.clone(), els.clone());
        (group, incl)
    }

    /// Position of `x` in the materialized indexing.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    /// Inclusion of this subgroup into its parent, with the domain
    /// materialized.
    pub fn inclusion(&self) -> GroupHom {
        self.materialize().1
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.parent == other.parent
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({} ≤ {}: {:?})", self.order(), self.parent.label(), self.elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn validation() {
        let z4 = catalog::cyclic(4);
        assert!(Subgroup::new(&z4, vec![0, 2]).is_ok());
        assert!(Subgroup::new(&z4, vec![0, 1]).is_err());
        assert!(Subgroup::new(&z4, vec![2]).is_err());
        assert!(Subgroup::new(&z4, vec![0, 9]).is_err());
    }

    #[test]
    fn materialize_keeps_identity_at_zero() {
        let s3 = catalog::symmetric3();
        let a3 = catalog::sign_hom(&s3).kernel();
        let (g, incl) = a3.materialize();
        assert_eq!(g.order(), 3);
        assert!(g.check_axioms().is_ok());
        assert!(incl.is_homomorphism());
        assert!(incl.is_injective());
        assert_eq!(incl.apply(0), 0);
        assert!(a3.is_normal());
    }
}
