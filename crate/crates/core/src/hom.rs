use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// A homomorphism between finite groups, stored as its value table.
///
/// Composition follows `(f∘g)(x) = f(g(x))` everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    domain: FiniteGroup,
    codomain: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    /// Validates that `map` is a homomorphism `domain → codomain`.
    pub fn new(domain: FiniteGroup, codomain: FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != domain.order() {
            return Err(Error::LengthMismatch { expected: domain.order(), found: map.len() });
        }
        if let Some((index, &value)) = map.iter().enumerate().find(|(_, &v)| v >= codomain.order()) {
            return Err(Error::IndexOutOfRange { index, value });
        }
        let hom = GroupHom { domain, codomain, map };
        if let Some((x, y)) = hom.first_violation() {
            return Err(Error::NotHomomorphism(x, y));
        }
        Ok(hom)
    }

    pub(crate) fn new_unchecked(domain: FiniteGroup, codomain: FiniteGroup, map: Vec<usize>) -> Self {
        debug_assert_eq!(map.len(), domain.order());
        GroupHom { domain, codomain, map }
    }

    fn first_violation(&self) -> Option<(usize, usize)> {
        let (d, c) = (&self.domain, &self.codomain);
        for x in d.elements() {
            for y in d.elements() {
                if self.map[d.mul(x, y)] != c.mul(self.map[x], self.map[y]) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom::new_unchecked(group.clone(), group.clone(), group.elements().collect())
    }

    /// The zero morphism, sending everything to the identity.
    pub fn zero(domain: &FiniteGroup, codomain: &FiniteGroup) -> Self {
        GroupHom::new_unchecked(domain.clone(), codomain.clone(), vec![0; domain.order()])
    }

    pub fn domain(&self) -> &FiniteGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteGroup {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.codomain != self.domain {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {:?} after a map into {:?}",
                self.domain, inner.codomain
            )));
        }
        Ok(GroupHom::new_unchecked(
            inner.domain.clone(),
            self.codomain.clone(),
            inner.map.iter().map(|&x| self.map[x]).collect(),
        ))
    }

    pub fn kernel(&self) -> Subgroup {
        let els = self.domain.elements().filter(|&x| self.map[x] == 0).collect();
        Subgroup::from_sorted_unchecked(&self.domain, els)
    }

    pub fn image(&self) -> Subgroup {
        let mut els: Vec<usize> = self.map.clone();
        els.sort_unstable();
        els.dedup();
        Subgroup::from_sorted_unchecked(&self.codomain, els)
    }

    /// Image of a subgroup of the domain.
    pub fn image_of(&self, sub: &Subgroup) -> Subgroup {
        let mut els: Vec<usize> = sub.elements().iter().map(|&x| self.map[x]).collect();
        els.sort_unstable();
        els.dedup();
        Subgroup::from_sorted_unchecked(&self.codomain, els)
    }

    pub fn is_injective(&self) -> bool {
        self.map.iter().filter(|&&v| v == 0).count() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.codomain.order()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective()
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Pointwise equality of the underlying maps, ignoring (co)domain handles.
    pub fn same_map(&self, other: &GroupHom) -> bool {
        self.map == other.map
    }

    /// Restriction along the inclusion of `sub`, written in the materialized
    /// indexing of [`Subgroup::materialize`].
    pub fn restrict(&self, sub: &Subgroup, sub_group: &FiniteGroup) -> GroupHom {
        GroupHom::new_unchecked(
            sub_group.clone(),
            self.codomain.clone(),
            sub.elements().iter().map(|&x| self.map[x]).collect(),
        )
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(GroupHom::new_unchecked(self.codomain.clone(), self.domain.clone(), inv))
    }

    /// Full homomorphism check. Quadratic in the domain order.
    pub fn is_homomorphism(&self) -> bool {
        self.first_violation().is_none()
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupHom({} -> {}: {:?})", self.domain.label(), self.codomain.label(), self.map)
    }
}
