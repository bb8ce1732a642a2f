//! Subobject-lattice operations inside a fixed ambient group.

use std::collections::{BTreeSet, VecDeque};

use crate::construct::direct_product;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::subgroup::Subgroup;

fn same_parent(a: &Subgroup, b: &Subgroup) -> Result<()> {
    if a.parent() == b.parent() {
        Ok(())
    } else {
        Err(Error::ShapeMismatch("subgroups live in different groups".into()))
    }
}

/// Smallest subgroup containing both.
pub fn join(a: &Subgroup, b: &Subgroup) -> Subgroup {
    debug_assert!(same_parent(a, b).is_ok());
    let g = a.parent();
    let gens: Vec<usize> = g.generators_of(a).into_iter().chain(g.generators_of(b)).collect();
    Subgroup::generated(g, &gens)
}

pub fn join_all<'a>(parent: &FiniteGroup, subs: impl IntoIterator<Item = &'a Subgroup>) -> Subgroup {
    subs.into_iter().fold(Subgroup::trivial(parent), |acc, s| join(&acc, s))
}

pub fn meet(a: &Subgroup, b: &Subgroup) -> Subgroup {
    debug_assert!(same_parent(a, b).is_ok());
    let mut mask = a.mask().clone();
    mask.intersect_with(b.mask());
    Subgroup::from_mask(a.parent(), mask)
}

/// Smallest normal subgroup containing `set`.
pub fn normal_closure(parent: &FiniteGroup, set: &[usize]) -> Subgroup {
    let g = parent;
    let conj_gens = g.generators();
    // conjugation-closed set generated by `set`
    let mut seen = vec![false; g.order()];
    let mut seeds = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &x in set {
        if !seen[x] {
            seen[x] = true;
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        seeds.push(x);
        for &c in conj_gens {
            let y = g.conj(c, x);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    Subgroup::generated(g, &seeds)
}

/// The cooperator `A × C → G`, `(a, c) ↦ f(a)·g(c)`, when it is a
/// homomorphism, i.e. exactly when the images of `f` and `g` commute
/// elementwise.
pub fn cooperate(f: &GroupHom, g: &GroupHom) -> Option<GroupHom> {
    let target = f.codomain();
    assert!(target == g.codomain(), "cooperate needs a common codomain");
    let (fi, gi) = (f.image(), g.image());
    let commute = fi.elements().iter().all(|&x| gi.elements().iter().all(|&y| target.commutes(x, y)));
    if !commute {
        return None;
    }
    let a = f.domain();
    let product = direct_product(a, g.domain());
    let n = a.order();
    let map = product.elements().map(|p| target.mul(f.apply(p % n), g.apply(p / n))).collect();
    Some(GroupHom::new_unchecked(product, target.clone(), map))
}

/// Huq commutator `[A, B]`: the normal closure of all `a b a⁻¹ b⁻¹`.
pub fn huq_commutator(a: &Subgroup, b: &Subgroup) -> Subgroup {
    debug_assert!(same_parent(a, b).is_ok());
    let g = a.parent();
    let ga = g.generators_of(a);
    let gb = g.generators_of(b);
    // commutators of generators suffice up to normal closure
    let mut comms: Vec<usize> = ga
        .iter()
        .flat_map(|&x| gb.iter().map(move |&y| (x, y)))
        .map(|(x, y)| g.commutator(x, y))
        .filter(|&c| c != 0)
        .collect();
    comms.sort_unstable();
    comms.dedup();
    normal_closure(g, &comms)
}

/// Centralizer of a set of elements.
pub fn centralizer_of_set(parent: &FiniteGroup, set: &[usize]) -> Subgroup {
    let els = parent.elements().filter(|&b| set.iter().all(|&x| parent.commutes(b, x))).collect();
    Subgroup::from_sorted_unchecked(parent, els)
}

/// `Z_B(A, f)`: the elements of `B` commuting with the whole image of `f`.
pub fn centralizer(f: &GroupHom) -> Subgroup {
    let gens: Vec<usize> = {
        let im = f.image();
        f.codomain().generators_of(&im)
    };
    centralizer_of_set(f.codomain(), &gens)
}

pub fn centralizer_of(sub: &Subgroup) -> Subgroup {
    centralizer_of_set(sub.parent(), &sub.parent().generators_of(sub))
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    centralizer_of_set(g, g.generators())
}

/// `N_G(A) = { g : g A g⁻¹ = A }`.
pub fn normalizer(a: &Subgroup) -> Subgroup {
    let g = a.parent();
    let gens = g.generators_of(a);
    let els = g.elements().filter(|&x| gens.iter().all(|&y| a.contains(g.conj(x, y)))).collect();
    Subgroup::from_sorted_unchecked(g, els)
}

/// `h⁻¹(S)`
pub fn preimage(h: &GroupHom, s: &Subgroup) -> Subgroup {
    debug_assert!(h.codomain() == s.parent());
    let els = h.domain().elements().filter(|&a| s.contains(h.apply(a))).collect();
    Subgroup::from_sorted_unchecked(h.domain(), els)
}

impl FiniteGroup {
    /// A small generating set for a subgroup, built greedily from its
    /// elements in increasing order.
    pub fn generators_of(&self, sub: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Subgroup::trivial(self);
        for &x in sub.elements() {
            if span.order() == sub.order() {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = Subgroup::generated(self, &gens);
            }
        }
        gens
    }
}

/// Every subgroup of `g`, ordered by (order, elements). Built by closing the
/// set of cyclic subgroups under joins with cyclic subgroups; cached per
/// group.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let lists = g.subgroup_cache().get_or_init(|| {
        let cyclic: BTreeSet<Vec<usize>> =
            g.elements().map(|x| Subgroup::generated(g, &[x]).elements().to_vec()).collect();
        let cyclic: Vec<Subgroup> = cyclic.into_iter().map(|e| Subgroup::from_sorted_unchecked(g, e)).collect();
        let mut found: BTreeSet<Vec<usize>> = cyclic.iter().map(|c| c.elements().to_vec()).collect();
        let mut frontier: Vec<Subgroup> = cyclic.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &cyclic {
                    if c.is_subset_of(h) {
                        continue;
                    }
                    let j = join(h, c);
                    if found.insert(j.elements().to_vec()) {
                        next.push(j);
                    }
                }
            }
            frontier = next;
        }
        let mut lists: Vec<Vec<usize>> = found.into_iter().collect();
        lists.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        lists
    });
    lists.iter().map(|e| Subgroup::from_sorted_unchecked(g, e.clone())).collect()
}

pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    all_subgroups(g).into_iter().filter(Subgroup::is_normal).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, S3_12, S3_123, S3_13};

    fn s3() -> FiniteGroup {
        catalog::symmetric3()
    }

    #[test]
    fn join_meet_basics() {
        let g = s3();
        let a = Subgroup::generated(&g, &[S3_12]);
        let b = Subgroup::generated(&g, &[S3_13]);
        assert_eq!(join(&a, &Subgroup::trivial(&g)), a);
        assert_eq!(meet(&a, &Subgroup::whole(&g)), a);
        assert!(join(&a, &b).is_whole());
        assert!(meet(&a, &b).is_trivial());
    }

    #[test]
    fn normal_closures_in_s3() {
        let g = s3();
        assert!(normal_closure(&g, &[S3_12]).is_whole());
        let a3 = normal_closure(&g, &[S3_123]);
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal());
    }

    #[test]
    fn cooperator_cases() {
        let d4 = catalog::dihedral(4);
        let z = center(&d4).inclusion();
        let c = cooperate(&z, &z).expect("center commutes with itself");
        assert!(c.is_homomorphism());

        let g = s3();
        let a = Subgroup::generated(&g, &[S3_12]).inclusion();
        let b = Subgroup::generated(&g, &[S3_13]).inclusion();
        assert!(cooperate(&a, &b).is_none());
        let zero = GroupHom::zero(&catalog::cyclic(4), &g);
        assert!(cooperate(&a, &zero).unwrap().is_homomorphism());
    }

    #[test]
    fn huq_commutators_in_s3() {
        let g = s3();
        let whole = Subgroup::whole(&g);
        let triv = Subgroup::trivial(&g);
        assert!(huq_commutator(&whole, &triv).is_trivial());
        assert_eq!(huq_commutator(&whole, &whole).elements(), &[0, S3_123, 4]);
        let a = Subgroup::generated(&g, &[S3_12]);
        let b = Subgroup::generated(&g, &[S3_13]);
        assert_eq!(huq_commutator(&a, &b).order(), 3);
    }

    #[test]
    fn centralizers() {
        let g = s3();
        assert!(centralizer(&GroupHom::zero(&catalog::cyclic(2), &g)).is_whole());
        let a3 = catalog::sign_hom(&g).kernel();
        assert_eq!(centralizer(&a3.inclusion()), a3);
        let z6 = catalog::cyclic(6);
        let f = GroupHom::new(catalog::cyclic(3), z6.clone(), vec![0, 2, 4]).unwrap();
        assert!(centralizer(&f).is_whole());
    }

    #[test]
    fn normalizers() {
        let g = s3();
        let a3 = catalog::sign_hom(&g).kernel();
        assert!(normalizer(&a3).is_whole());
        let t = Subgroup::generated(&g, &[S3_12]);
        assert_eq!(normalizer(&t), t);
        assert!(normalizer(&Subgroup::trivial(&g)).is_whole());
    }

    #[test]
    fn preimages() {
        let g = s3();
        let sign = catalog::sign_hom(&g);
        assert!(preimage(&sign, &Subgroup::whole(sign.codomain())).is_whole());
        assert_eq!(preimage(&sign, &Subgroup::trivial(sign.codomain())), sign.kernel());
        assert_eq!(preimage(&sign, &Subgroup::trivial(sign.codomain())).order(), 3);
    }

    #[test]
    fn subgroup_counts() {
        // known subgroup counts
        let cases = [("S3", 6), ("V4", 5), ("D4", 10), ("Q8", 6), ("A4", 10), ("Z12", 6), ("D6", 16), ("Z2^4", 67)];
        for (name, count) in cases {
            let g = catalog::by_name(name).unwrap();
            assert_eq!(all_subgroups(&g).len(), count, "{name}");
        }
        assert_eq!(normal_subgroups(&catalog::alternating4()).len(), 3);
    }
}
