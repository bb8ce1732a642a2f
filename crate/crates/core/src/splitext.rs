//! Split extensions of groups, their morphisms, the generic split extension
//! `Aut(X) ⋉ X`, faithfulness, and the brute-force terminality oracle.

use std::collections::HashMap;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::action::Action;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::homsearch::{automorphism_group, search_homs, AutomorphismGroup};
use crate::lattice::{centralizer, join, meet};
use crate::report::{classify, CaseFailure, VerifyReport};

/// `X --κ--> A <--β-- B` with `α: A → B`, `αβ = 1`, `κ = ker α`.
#[derive(Clone)]
pub struct SplitExtension {
    kappa: GroupHom,
    alpha: GroupHom,
    beta: GroupHom,
    /// `κ⁻¹` on `image κ`, `usize::MAX` elsewhere.
    kappa_inv: Vec<usize>,
}

impl SplitExtension {
    /// Validates `(κ, α, β)`.
    pub fn new(kappa: GroupHom, alpha: GroupHom, beta: GroupHom) -> Result<Self> {
        if alpha.domain() != kappa.codomain()
            || beta.domain() != alpha.codomain()
            || beta.codomain() != kappa.codomain()
        {
            return Err(Error::ShapeMismatch("κ: X→A, α: A→B, β: B→A expected".into()));
        }
        if !alpha.compose(&beta)?.is_identity() {
            return Err(Error::SectionNotSplit);
        }
        if !kappa.is_injective() {
            return Err(Error::KernelMismatch("κ is not injective".into()));
        }
        if kappa.image() != alpha.kernel() {
            return Err(Error::KernelMismatch("image of κ differs from ker α".into()));
        }
        let ext = Self::new_unchecked(kappa, alpha, beta);
        debug_assert!(join(&ext.kappa.image(), &ext.beta.image()).is_whole());
        Ok(ext)
    }

    pub(crate) fn new_unchecked(kappa: GroupHom, alpha: GroupHom, beta: GroupHom) -> Self {
        let mut kappa_inv = vec![usize::MAX; kappa.codomain().order()];
        for (x, &a) in kappa.map().iter().enumerate() {
            kappa_inv[a] = x;
        }
        SplitExtension { kappa, alpha, beta, kappa_inv }
    }

    pub fn kernel(&self) -> &FiniteGroup {
        self.kappa.domain()
    }

    pub fn total(&self) -> &FiniteGroup {
        self.kappa.codomain()
    }

    pub fn base(&self) -> &FiniteGroup {
        self.alpha.codomain()
    }

    pub fn kappa(&self) -> &GroupHom {
        &self.kappa
    }

    pub fn alpha(&self) -> &GroupHom {
        &self.alpha
    }

    pub fn beta(&self) -> &GroupHom {
        &self.beta
    }

    /// Preimage of `a` under `κ`, if `a` lies in the kernel.
    pub fn kappa_preimage(&self, a: usize) -> Option<usize> {
        Some(self.kappa_inv[a]).filter(|&x| x != usize::MAX)
    }

    /// The unique `(x, b)` with `a = κ(x)·β(b)`.
    pub fn decompose(&self, a: usize) -> (usize, usize) {
        let total = self.total();
        let b = self.alpha.apply(a);
        let k = total.mul(a, total.inv(self.beta.apply(b)));
        (self.kappa_inv[k], b)
    }

    /// `φ_b(x) = κ⁻¹(β(b) κ(x) β(b)⁻¹)`.
    pub fn action(&self) -> Action {
        let total = self.total();
        let perms = self
            .base()
            .elements()
            .map(|b| {
                let bb = self.beta.apply(b);
                self.kernel().elements().map(|x| self.kappa_inv[total.conj(bb, self.kappa.apply(x))]).collect()
            })
            .collect();
        Action::new_unchecked(self.base().clone(), self.kernel().clone(), perms)
    }
}

impl std::fmt::Debug for SplitExtension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SplitExtension({} -> {} <-> {})", self.kernel().label(), self.total().label(), self.base().label())
    }
}

/// `X ⋊_φ B` on pairs `(x, b)` stored at `x + |X|·b`, with
/// `(x, b)(x', b') = (x·φ_b(x'), b b')`.
pub fn semidirect_product(action: &Action) -> SplitExtension {
    let (x, b) = (action.target(), action.actor());
    let n = x.order();
    let name = match (x.name(), b.name()) {
        (Some(xn), Some(bn)) => Some(format!("{xn}:{bn}")),
        _ => None,
    };
    let total = FiniteGroup::from_fn_unchecked(n * b.order(), name, |p, q| {
        let (x1, b1, x2, b2) = (p % n, p / n, q % n, q / n);
        x.mul(x1, action.apply(b1, x2)) + n * b.mul(b1, b2)
    });
    let kappa = GroupHom::new_unchecked(x.clone(), total.clone(), x.elements().collect());
    let alpha = GroupHom::new_unchecked(total.clone(), b.clone(), total.elements().map(|p| p / n).collect());
    let beta = GroupHom::new_unchecked(b.clone(), total, b.elements().map(|c| c * n).collect());
    SplitExtension::new_unchecked(kappa, alpha, beta)
}

/// `X ⋊ B` for the trivial action, i.e. the product extension.
pub fn product_extension(x: &FiniteGroup, b: &FiniteGroup) -> SplitExtension {
    semidirect_product(&Action::trivial(b, x))
}

/// The generic split extension `Aut(X) ⋉ X` with the evaluation action.
pub fn generic_split_extension(x: &FiniteGroup) -> SplitExtension {
    generic_split_extension_with(x).0
}

pub fn generic_split_extension_with(x: &FiniteGroup) -> (SplitExtension, AutomorphismGroup) {
    let auts = automorphism_group(x);
    (semidirect_product(&auts.evaluation()), auts)
}

/// The extension `X → X → 1`.
pub fn kernel_only_extension(x: &FiniteGroup) -> SplitExtension {
    product_extension(x, &FiniteGroup::trivial())
}

/// A morphism of split extensions:
/// `vκ = κ'u`, `vβ = β'w`, `wα = α'v`.
#[derive(Clone, Debug)]
pub struct SplitExtMorphism {
    pub u: GroupHom,
    pub v: GroupHom,
    pub w: GroupHom,
}

impl SplitExtMorphism {
    pub fn new(
        source: &SplitExtension,
        target: &SplitExtension,
        u: GroupHom,
        v: GroupHom,
        w: GroupHom,
    ) -> Result<Self> {
        let check = |lhs: GroupHom, rhs: GroupHom, what: &str| {
            if lhs.same_map(&rhs) {
                Ok(())
            } else {
                Err(Error::RelationViolated(what.into()))
            }
        };
        check(v.compose(source.kappa())?, target.kappa().compose(&u)?, "vκ = κ'u")?;
        check(v.compose(source.beta())?, target.beta().compose(&w)?, "vβ = β'w")?;
        check(w.compose(source.alpha())?, target.alpha().compose(&v)?, "wα = α'v")?;
        Ok(SplitExtMorphism { u, v, w })
    }
}

/// Indexes the base of a target extension by the automorphism each element
/// induces on the kernel.
pub(crate) struct TargetIndex<'a> {
    ext: &'a SplitExtension,
    by_action: HashMap<Vec<usize>, Vec<usize>>,
}

impl<'a> TargetIndex<'a> {
    pub(crate) fn new(ext: &'a SplitExtension) -> Self {
        let action = ext.action();
        let mut by_action: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for c in ext.base().elements() {
            by_action.entry(action.perm(c).to_vec()).or_default().push(c);
        }
        TargetIndex { ext, by_action }
    }

    /// Base maps `w` (as value tables) for which `(id, v, w)` is a morphism
    /// from `source`, together with the reconstructed `v`.
    ///
    /// `v` is forced: `A = κ(X)·β(B)` elementwise, so
    /// `v(κ(x)β(b)) = κ'(x)β'(w(b))`. If `v` is a homomorphism then
    /// `β'(w b)` acts on `κ'(X)` as `β(b)` acts on `κ(X)`, so generator images
    /// are drawn only from bases elements inducing the same automorphism.
    /// Every surviving candidate is still checked as a full homomorphism.
    pub(crate) fn morphisms_from(
        &self,
        source: &SplitExtension,
        mut accept_w: impl FnMut(&[usize]) -> bool,
    ) -> Vec<(Vec<usize>, Vec<usize>)> {
        let target = self.ext;
        let (b, b2) = (source.base(), target.base());
        let phi = source.action();
        let empty = Vec::new();
        let candidates: Vec<Vec<usize>> = b
            .generators()
            .iter()
            .map(|&g| {
                let k = b.element_order(g);
                self.by_action
                    .get(phi.perm(g))
                    .unwrap_or(&empty)
                    .iter()
                    .copied()
                    .filter(|&c| k % b2.element_order(c) == 0)
                    .collect()
            })
            .collect();
        let a = source.total();
        let a2 = target.total();
        let decomposition: Vec<(usize, usize)> = a.elements().map(|p| source.decompose(p)).collect();
        let mut out = Vec::new();
        search_homs(b, b2, &candidates, |w| {
            if !accept_w(&w) {
                return ControlFlow::Continue(());
            }
            let v: Vec<usize> = decomposition
                .iter()
                .map(|&(x, c)| a2.mul(target.kappa().apply(x), target.beta().apply(w[c])))
                .collect();
            let is_hom = a.elements().all(|p| a.elements().all(|q| v[a.mul(p, q)] == a2.mul(v[p], v[q])));
            if is_hom {
                out.push((w, v));
            }
            ControlFlow::Continue(())
        });
        out
    }
}

fn check_same_kernel(e: &SplitExtension, e2: &SplitExtension) -> Result<()> {
    if e.kernel() == e2.kernel() {
        Ok(())
    } else {
        Err(Error::KernelMismatch("extensions have different kernels".into()))
    }
}

/// All morphisms `E → E'` that are the identity on kernels.
pub fn morphisms_between(e: &SplitExtension, e2: &SplitExtension) -> Result<Vec<SplitExtMorphism>> {
    check_same_kernel(e, e2)?;
    let index = TargetIndex::new(e2);
    index
        .morphisms_from(e, |_| true)
        .into_iter()
        .map(|(w, v)| {
            let u = GroupHom::new_unchecked(e.kernel().clone(), e2.kernel().clone(), e.kernel().elements().collect());
            let v = GroupHom::new_unchecked(e.total().clone(), e2.total().clone(), v);
            let w = GroupHom::new_unchecked(e.base().clone(), e2.base().clone(), w);
            SplitExtMorphism::new(e, e2, u, v, w)
        })
        .collect()
}

/// Isomorphism `A → A'` commuting with `κ`, `α`, `β` when both extensions
/// have the same kernel and base.
pub fn isomorphism_fixing_structure(e: &SplitExtension, e2: &SplitExtension) -> Option<GroupHom> {
    if e.kernel() != e2.kernel() || e.base() != e2.base() {
        return None;
    }
    let id: Vec<usize> = e.base().elements().collect();
    let index = TargetIndex::new(e2);
    let found = index.morphisms_from(e, |w| w == id.as_slice());
    found
        .into_iter()
        .next()
        .map(|(_, v)| GroupHom::new_unchecked(e.total().clone(), e2.total().clone(), v))
        .filter(GroupHom::is_isomorphism)
}

/// Faithfulness via the centralizer criterion: `Z_A(X, κ) ∧ β(B) = 0`.
pub fn is_faithful_criterion(e: &SplitExtension) -> bool {
    meet(&centralizer(e.kappa()), &e.beta().image()).is_trivial()
}

/// One member of the fiber over a fixed kernel: a catalog base together with
/// one of its actions.
#[derive(Clone, Debug)]
pub struct FiberCase {
    pub base: String,
    pub action_index: usize,
    pub extension: SplitExtension,
}

/// Every split extension with kernel `X` whose base is a catalog group, one
/// per action, in catalog order.
pub fn fiber_extensions(auts: &AutomorphismGroup, catalog: &[FiniteGroup]) -> Vec<FiberCase> {
    catalog
        .iter()
        .flat_map(|b| {
            auts.actions_of(b).into_iter().enumerate().map(move |(i, act)| FiberCase {
                base: b.label(),
                action_index: i,
                extension: semidirect_product(&act),
            })
        })
        .collect()
}

/// Counts morphisms from each fiber case into `candidate`, in parallel, in
/// fiber order.
pub fn morphism_counts(candidate: &SplitExtension, fiber: &[FiberCase]) -> Vec<usize> {
    let index = TargetIndex::new(candidate);
    fiber.par_iter().map(|case| index.morphisms_from(&case.extension, |_| true).len()).collect()
}

/// Faithfulness by brute force: at most one morphism from every member of
/// the fiber.
pub fn is_faithful_bruteforce(e: &SplitExtension, catalog: &[FiniteGroup]) -> bool {
    let auts = automorphism_group(e.kernel());
    is_faithful_against(e, &fiber_extensions(&auts, catalog))
}

pub fn is_faithful_against(e: &SplitExtension, fiber: &[FiberCase]) -> bool {
    morphism_counts(e, fiber).into_iter().all(|c| c <= 1)
}

/// Checks that exactly one morphism reaches `candidate` from every member of
/// the catalog fiber over its kernel.
pub fn verify_generic(candidate: &SplitExtension, catalog: &[FiniteGroup]) -> VerifyReport {
    let auts = automorphism_group(candidate.kernel());
    verify_generic_against(candidate, &fiber_extensions(&auts, catalog))
}

pub fn verify_generic_against(candidate: &SplitExtension, fiber: &[FiberCase]) -> VerifyReport {
    let counts = morphism_counts(candidate, fiber);
    let failures = fiber
        .iter()
        .zip(&counts)
        .filter_map(|(case, &n)| {
            classify(n).map(|kind| CaseFailure {
                base: case.base.clone(),
                structure: None,
                action: case.action_index,
                kind,
                morphisms: n,
            })
        })
        .collect();
    VerifyReport {
        kernel: candidate.kernel().label(),
        candidate_order: candidate.total().order(),
        cases_checked: fiber.len(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::construct::direct_product_maps;
    use crate::homsearch::are_isomorphic;

    fn inversion_z3() -> Action {
        Action::new(catalog::cyclic(2), catalog::cyclic(3), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn semidirect_products_of_z3_by_z2() {
        let triv = product_extension(&catalog::cyclic(3), &catalog::cyclic(2));
        assert_eq!(triv.total().order(), 6);
        assert!(triv.total().is_abelian());
        assert!(are_isomorphic(triv.total(), &catalog::cyclic(6)));
        let inv = semidirect_product(&inversion_z3());
        assert!(!inv.total().is_abelian());
        assert!(inv.total().check_axioms().is_ok());
        for e in [&triv, &inv] {
            assert!(SplitExtension::new(e.kappa().clone(), e.alpha().clone(), e.beta().clone()).is_ok());
        }
        let x_only = kernel_only_extension(&catalog::symmetric3());
        assert!(are_isomorphic(x_only.total(), &catalog::symmetric3()));
    }

    #[test]
    fn product_maps_form_a_split_extension() {
        let m = direct_product_maps(&catalog::cyclic(3), &catalog::cyclic(2));
        assert!(SplitExtension::new(m.inject_first.clone(), m.second.clone(), m.inject_second.clone()).is_ok());
        // wrong section
        let bad_beta = GroupHom::zero(&catalog::cyclic(2), &m.product);
        assert_eq!(
            SplitExtension::new(m.inject_first.clone(), m.second.clone(), bad_beta).unwrap_err(),
            Error::SectionNotSplit
        );
        // κ onto the wrong factor
        let z2 = catalog::cyclic(2);
        let m2 = direct_product_maps(&z2, &z2);
        assert!(matches!(
            SplitExtension::new(m2.inject_second.clone(), m2.second.clone(), m2.inject_second.clone()),
            Err(Error::KernelMismatch(_))
        ));
    }

    #[test]
    fn action_round_trip() {
        let triv = product_extension(&catalog::cyclic(3), &catalog::cyclic(2));
        assert!(triv.action().is_trivial());
        let inv = inversion_z3();
        assert_eq!(semidirect_product(&inv).action(), inv);
    }

    #[test]
    fn generic_extension_orders() {
        assert_eq!(generic_split_extension(&catalog::cyclic(2)).total().order(), 2);
        let g3 = generic_split_extension(&catalog::cyclic(3));
        assert_eq!(g3.total().order(), 6);
        assert!(!g3.total().is_abelian());
        assert_eq!(generic_split_extension(&catalog::klein4()).total().order(), 24);
    }

    #[test]
    fn morphism_enumeration_examples() {
        let z3 = catalog::cyclic(3);
        let g = generic_split_extension(&z3);
        let self_maps = morphisms_between(&g, &g).unwrap();
        assert!(self_maps.iter().any(|m| m.v.is_identity() && m.w.is_identity()));
        let triv = product_extension(&z3, &catalog::cyclic(2));
        assert_eq!(morphisms_between(&triv, &g).unwrap().len(), 1);
        let z2 = catalog::cyclic(2);
        let g2 = generic_split_extension(&z2);
        let other = product_extension(&z2, &catalog::klein4());
        assert_eq!(morphisms_between(&other, &g2).unwrap().len(), 1);
        assert!(matches!(morphisms_between(&triv, &g2), Err(Error::KernelMismatch(_))));
    }

    #[test]
    fn faithfulness_criterion_examples() {
        assert!(is_faithful_criterion(&generic_split_extension(&catalog::cyclic(3))));
        assert!(!is_faithful_criterion(&product_extension(&catalog::cyclic(3), &catalog::cyclic(2))));
        assert!(is_faithful_criterion(&kernel_only_extension(&catalog::klein4())));
    }

    #[test]
    fn faithfulness_bruteforce_examples() {
        let cat = catalog::groups_up_to(4);
        assert!(is_faithful_bruteforce(&generic_split_extension(&catalog::cyclic(3)), &cat));
        assert!(is_faithful_bruteforce(&kernel_only_extension(&catalog::cyclic(3)), &cat));
        assert!(!is_faithful_bruteforce(&product_extension(&catalog::cyclic(3), &catalog::cyclic(2)), &cat));
    }

    #[test]
    fn verify_generic_examples() {
        let cat = catalog::groups_up_to(6);
        let r = verify_generic(&generic_split_extension(&catalog::cyclic(3)), &cat);
        assert!(r.passed(), "{r:?}");
        let r = verify_generic(&kernel_only_extension(&catalog::cyclic(3)), &cat);
        assert!(!r.passed());
        assert!(r.failures.iter().all(|f| f.kind == crate::report::FailureKind::Missing));
        let r = verify_generic(&kernel_only_extension(&catalog::cyclic(2)), &cat);
        assert!(r.passed());
    }

    #[test]
    fn isomorphism_fixing_structure_round_trip() {
        let e = generic_split_extension(&catalog::symmetric3());
        let rebuilt = semidirect_product(&e.action());
        let v = isomorphism_fixing_structure(&e, &rebuilt).expect("iso");
        assert!(v.is_homomorphism());
    }
}
