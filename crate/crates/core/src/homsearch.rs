//! Homomorphism enumeration by backtracking over generator images.
//!
//! A homomorphism is determined by the images of a generating set. Given a
//! candidate assignment we walk the right Cayley graph of the domain from the
//! identity, propagating `f(x·g) = f(x)·f(g)`. If every edge is consistent the
//! resulting map is a homomorphism: every element is a positive word in the
//! generators, and the propagation rule is exactly multiplicativity on the
//! last letter.

use std::collections::{HashMap, VecDeque};
use std::ops::ControlFlow;

use crate::action::Action;
use crate::group::FiniteGroup;
use crate::hom::GroupHom;

/// Tries to extend `gen_images` (indexed like `dom.generators()`) to a
/// homomorphism.
pub fn extend_from_generators(dom: &FiniteGroup, cod: &FiniteGroup, gen_images: &[usize]) -> Option<Vec<usize>> {
    let gens = dom.generators();
    debug_assert_eq!(gens.len(), gen_images.len());
    let mut map = vec![usize::MAX; dom.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(gen_images) {
            let y = dom.mul(x, g);
            let val = cod.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = val;
                queue.push_back(y);
            } else if map[y] != val {
                return None;
            }
        }
    }
    Some(map)
}

/// Visits every homomorphism `dom → cod` whose generator images are drawn
/// from `candidates[i]` for the `i`-th generator of `dom`.
pub fn search_homs(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    candidates: &[Vec<usize>],
    mut visit: impl FnMut(Vec<usize>) -> ControlFlow<()>,
) {
    assert_eq!(candidates.len(), dom.generators().len());
    let mut images = vec![0; candidates.len()];
    fn rec(
        depth: usize,
        dom: &FiniteGroup,
        cod: &FiniteGroup,
        candidates: &[Vec<usize>],
        images: &mut Vec<usize>,
        visit: &mut dyn FnMut(Vec<usize>) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if depth == candidates.len() {
            if let Some(map) = extend_from_generators(dom, cod, images) {
                return visit(map);
            }
            return ControlFlow::Continue(());
        }
        for &c in &candidates[depth] {
            images[depth] = c;
            rec(depth + 1, dom, cod, candidates, images, visit)?;
        }
        ControlFlow::Continue(())
    }
    let _ = rec(0, dom, cod, candidates, &mut images, &mut visit);
}

/// Candidate images for each generator: elements whose order divides the
/// generator's order.
pub fn order_dividing_candidates(dom: &FiniteGroup, cod: &FiniteGroup) -> Vec<Vec<usize>> {
    dom.generators()
        .iter()
        .map(|&g| {
            let k = dom.element_order(g);
            cod.elements().filter(|&c| k.is_multiple_of(cod.element_order(c))).collect()
        })
        .collect()
}

/// All homomorphisms `dom → cod`, in lexicographic order of generator images.
pub fn homomorphisms(dom: &FiniteGroup, cod: &FiniteGroup) -> Vec<GroupHom> {
    let mut out = Vec::new();
    search_homs(dom, cod, &order_dividing_candidates(dom, cod), |map| {
        out.push(GroupHom::new_unchecked(dom.clone(), cod.clone(), map));
        ControlFlow::Continue(())
    });
    out
}

pub fn endomorphisms(g: &FiniteGroup) -> Vec<GroupHom> {
    homomorphisms(g, g)
}

fn iso_candidates(dom: &FiniteGroup, cod: &FiniteGroup) -> Vec<Vec<usize>> {
    dom.generators()
        .iter()
        .map(|&g| {
            let k = dom.element_order(g);
            cod.elements().filter(|&c| cod.element_order(c) == k).collect()
        })
        .collect()
}

fn is_bijective(map: &[usize]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
}

/// All isomorphisms `g → h`.
pub fn isomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Vec<GroupHom> {
    let mut out = Vec::new();
    if g.order() != h.order() {
        return out;
    }
    search_homs(g, h, &iso_candidates(g, h), |map| {
        if is_bijective(&map) {
            out.push(GroupHom::new_unchecked(g.clone(), h.clone(), map));
        }
        ControlFlow::Continue(())
    });
    out
}

/// First isomorphism `g → h` satisfying `accept`, if any.
pub fn find_isomorphism_where(
    g: &FiniteGroup,
    h: &FiniteGroup,
    mut accept: impl FnMut(&GroupHom) -> bool,
) -> Option<GroupHom> {
    if g.order() != h.order() {
        return None;
    }
    let mut mine = g.element_orders().to_vec();
    let mut theirs = h.element_orders().to_vec();
    mine.sort_unstable();
    theirs.sort_unstable();
    if mine != theirs {
        return None;
    }
    let mut found = None;
    search_homs(g, h, &iso_candidates(g, h), |map| {
        if is_bijective(&map) {
            let f = GroupHom::new_unchecked(g.clone(), h.clone(), map);
            if accept(&f) {
                found = Some(f);
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    found
}

pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupHom> {
    find_isomorphism_where(g, h, |_| true)
}

pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

/// `Aut(X)` realized as a finite group. Element `i` of [`group`] is the
/// automorphism [`perm(i)`]; the product `i·j` is the composite `perm(i) ∘
/// perm(j)`.
///
/// [`group`]: AutomorphismGroup::group
/// [`perm(i)`]: AutomorphismGroup::perm
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    group: FiniteGroup,
    target: FiniteGroup,
    perms: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl AutomorphismGroup {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn perm(&self, a: usize) -> &[usize] {
        &self.perms[a]
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn index_of(&self, perm: &[usize]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// The tautological action of `Aut(X)` on `X`.
    pub fn evaluation(&self) -> Action {
        Action::new_unchecked(self.group.clone(), self.target.clone(), self.perms.clone())
    }

    /// Homomorphisms `b → Aut(X)`, i.e. all actions of `b` on `X`.
    pub fn actions_of(&self, b: &FiniteGroup) -> Vec<Action> {
        homomorphisms(b, &self.group).iter().map(|h| Action::from_aut_hom(h, self)).collect()
    }
}

/// The full automorphism group, by backtracking over generator images.
pub fn automorphism_group(x: &FiniteGroup) -> AutomorphismGroup {
    let mut perms: Vec<Vec<usize>> = isomorphisms(x, x).into_iter().map(|f| f.map().to_vec()).collect();
    perms.sort();
    debug_assert!(x.order() > 8 || perms == automorphisms_bruteforce(x));
    let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let n = perms.len();
    let group = FiniteGroup::from_fn_unchecked(n, Some(format!("Aut({})", x.label())), |i, j| {
        let composite: Vec<usize> = perms[j].iter().map(|&v| perms[i][v]).collect();
        index[&composite]
    });
    AutomorphismGroup { group, target: x.clone(), perms, index }
}

/// Automorphisms by scanning every bijection fixing the identity. Sorted.
/// Factorial cost; meant as a cross-check for small orders.
pub fn automorphisms_bruteforce(x: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = x.order();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, x: &FiniteGroup, out: &mut Vec<Vec<usize>>) {
        let n = perm.len();
        if k == n {
            let ok = x.elements().all(|a| x.elements().all(|b| perm[x.mul(a, b)] == x.mul(perm[a], perm[b])));
            if ok {
                out.push(perm.clone());
            }
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            rec(k + 1, perm, x, out);
            perm.swap(k, i);
        }
    }
    if n > 1 {
        rec(1, &mut perm, x, &mut out);
    } else {
        out.push(perm);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(automorphism_group(&catalog::cyclic(2)).group().order(), 1);
        assert_eq!(automorphism_group(&catalog::cyclic(3)).group().order(), 2);
        assert_eq!(automorphism_group(&catalog::klein4()).group().order(), 6);
        assert_eq!(automorphism_group(&catalog::symmetric3()).group().order(), 6);
        assert_eq!(automorphism_group(&catalog::cyclic(8)).group().order(), 4);
        assert_eq!(automorphism_group(&catalog::quaternion8()).group().order(), 24);
        assert_eq!(automorphism_group(&catalog::dihedral(4)).group().order(), 8);
    }

    #[test]
    fn backtracking_matches_bruteforce_up_to_order_8() {
        for g in catalog::groups_up_to(8) {
            let fast: Vec<Vec<usize>> = automorphism_group(&g).perms().to_vec();
            assert_eq!(fast, automorphisms_bruteforce(&g), "{g:?}");
        }
    }

    #[test]
    fn automorphism_table_is_composition() {
        let auts = automorphism_group(&catalog::klein4());
        let a = auts.group();
        assert!(a.check_axioms().is_ok());
        for i in a.elements() {
            assert!(GroupHom::new(auts.target().clone(), auts.target().clone(), auts.perm(i).to_vec()).is_ok());
            for j in a.elements() {
                let ij = a.mul(i, j);
                for x in auts.target().elements() {
                    assert_eq!(auts.perm(ij)[x], auts.perm(i)[auts.perm(j)[x]]);
                }
            }
        }
        assert!(are_isomorphic(a, &catalog::symmetric3()));
    }

    #[test]
    fn hom_counts() {
        // |Hom(Z_m, Z_n)| = gcd(m, n)
        for m in 1..=8 {
            for n in 1..=8 {
                let gcd = (1..=m.min(n)).rev().find(|d| m % d == 0 && n % d == 0).unwrap();
                assert_eq!(homomorphisms(&catalog::cyclic(m), &catalog::cyclic(n)).len(), gcd);
            }
        }
        // Hom(S3, S3): zero, 6 automorphisms, 3 maps onto a transposition subgroup
        assert_eq!(endomorphisms(&catalog::symmetric3()).len(), 10);
        for h in homomorphisms(&catalog::klein4(), &catalog::symmetric3()) {
            assert!(h.is_homomorphism());
        }
    }

    #[test]
    fn isomorphism_detection() {
        assert!(are_isomorphic(
            &catalog::cyclic(6),
            &crate::construct::direct_product(&catalog::cyclic(2), &catalog::cyclic(3))
        ));
        assert!(!are_isomorphic(&catalog::cyclic(4), &catalog::klein4()));
        assert!(!are_isomorphic(&catalog::dihedral(4), &catalog::quaternion8()));
    }
}
