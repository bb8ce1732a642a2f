//! Internal groupoids in groups (cat¹-groups) and the construction of their
//! split extension classifier as the largest groupoid sub-extension of the
//! reflexive-graph classifier.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::lattice::{all_subgroups, centralizer, huq_commutator, join, meet, preimage};
use crate::report::VerifyReport;
use crate::rgraph::{
    rg_classifier, rg_fiber, rg_is_faithful, rg_verify_generic_against, RGSplitExtension, RGSubgraph, ReflexiveGraph,
    RgFiberCase,
};
use crate::splitext::SplitExtension;
use crate::subgroup::Subgroup;

/// `[ker s, ker t] = 0`
pub fn is_groupoid(r: &ReflexiveGraph) -> bool {
    let p = r.parts();
    huq_commutator(&p.ker_s, &p.ker_t).is_trivial()
}

/// A reflexive graph whose source and target kernels commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InternalGroupoid(ReflexiveGraph);

impl InternalGroupoid {
    pub fn new(r: ReflexiveGraph) -> Result<Self> {
        if is_groupoid(&r) {
            Ok(InternalGroupoid(r))
        } else {
            Err(Error::NotGroupoid)
        }
    }

    pub fn graph(&self) -> &ReflexiveGraph {
        &self.0
    }

    pub fn into_graph(self) -> ReflexiveGraph {
        self.0
    }
}

/// The largest sub-reflexive-graph `B̃` of the base with
/// `[*B̃, X_*] = 0 = [B̃_*, *X]`, computed inside the total group as
///
/// `((Z_A(*X) ∧ B_*) ∨ B₀) ∧ ((Z_A(X_*) ∧ *B) ∨ B₀)`
///
/// and pulled back along `β`.
pub fn b_tilde(e: &RGSplitExtension) -> RGSubgraph {
    let ext = e.extension();
    let (kappa, beta) = (ext.kappa(), ext.beta());
    let xp = e.kernel_graph().parts();
    let bp = e.base_graph().parts();
    let z1 = centralizer(&kappa.compose(&xp.ker_s.inclusion()).expect("shapes"));
    let z2 = centralizer(&kappa.compose(&xp.ker_t.inclusion()).expect("shapes"));
    let objects = beta.image_of(&bp.objects);
    let left = join(&meet(&z1, &beta.image_of(&bp.ker_t)), &objects);
    let right = join(&meet(&z2, &beta.image_of(&bp.ker_s)), &objects);
    let inside_a = meet(&left, &right);
    let tilde = preimage(beta, &inside_a);
    RGSubgraph::new(e.base_graph(), tilde).expect("B̃ is closed under s and t")
}

/// The two commutators that `B̃` is required to kill, computed in the total
/// group for a sub-reflexive-graph `sub` of the base.
pub fn partial_composition_commutators(e: &RGSplitExtension, sub: &Subgroup) -> (Subgroup, Subgroup) {
    let ext = e.extension();
    let (kappa, beta) = (ext.kappa(), ext.beta());
    let xp = e.kernel_graph().parts();
    let bp = e.base_graph().parts();
    let star_sub = meet(sub, &bp.ker_s);
    let sub_star = meet(sub, &bp.ker_t);
    (
        huq_commutator(&beta.image_of(&star_sub), &kappa.image_of(&xp.ker_t)),
        huq_commutator(&beta.image_of(&sub_star), &kappa.image_of(&xp.ker_s)),
    )
}

/// A split extension of groupoids, realized as a sub-extension of some
/// reflexive-graph extension.
#[derive(Clone, Debug)]
pub struct GroupoidSplitExtension {
    ext: RGSplitExtension,
    total_in_parent: Subgroup,
    base_in_parent: Subgroup,
}

impl GroupoidSplitExtension {
    /// Validates that kernel, total and base are groupoids.
    pub fn new(ext: RGSplitExtension) -> Result<Self> {
        let total = Subgroup::whole(ext.extension().total());
        let base = Subgroup::whole(ext.extension().base());
        Self::with_parent(ext, total, base)
    }

    fn with_parent(ext: RGSplitExtension, total_in_parent: Subgroup, base_in_parent: Subgroup) -> Result<Self> {
        if !is_groupoid(ext.kernel_graph()) {
            return Err(Error::KernelNotGroupoid);
        }
        if !is_groupoid(ext.total_graph()) || !is_groupoid(ext.base_graph()) {
            return Err(Error::NotGroupoid);
        }
        Ok(GroupoidSplitExtension { ext, total_in_parent, base_in_parent })
    }

    pub fn extension(&self) -> &RGSplitExtension {
        &self.ext
    }

    /// `Ã` as a subgroup of the total group it was cut out of.
    pub fn total_in_parent(&self) -> &Subgroup {
        &self.total_in_parent
    }

    /// `B̃` as a subgroup of the base it was cut out of.
    pub fn base_in_parent(&self) -> &Subgroup {
        &self.base_in_parent
    }
}

/// The sub-split-extension over an `s,t`-closed subgroup `sub` of the base:
/// total `α⁻¹(sub)`, with `κ`, `α`, `β` restricted. Returns the materialized
/// extension and `α⁻¹(sub)` as a subgroup of the original total group.
pub fn pullback_along(e: &RGSplitExtension, sub: &Subgroup) -> (RGSplitExtension, Subgroup) {
    let ext = e.extension();
    let total_sub = preimage(ext.alpha(), sub);
    let (a_graph, _) = e.total_graph().restrict(&total_sub);
    let (b_graph, _) = e.base_graph().restrict(sub);
    let (a, b) = (a_graph.carrier().clone(), b_graph.carrier().clone());
    let pos_a = |p: usize| total_sub.position(p).expect("in pullback");
    let pos_b = |q: usize| sub.position(q).expect("in base subgroup");
    let x = ext.kernel().clone();
    let kappa =
        GroupHom::new_unchecked(x.clone(), a.clone(), x.elements().map(|y| pos_a(ext.kappa().apply(y))).collect());
    let alpha = GroupHom::new_unchecked(
        a.clone(),
        b.clone(),
        total_sub.elements().iter().map(|&p| pos_b(ext.alpha().apply(p))).collect(),
    );
    let beta = GroupHom::new_unchecked(b, a, sub.elements().iter().map(|&q| pos_a(ext.beta().apply(q))).collect());
    let restricted = SplitExtension::new(kappa, alpha, beta).expect("pullback of a split extension splits");
    let out = RGSplitExtension::new(restricted, e.kernel_graph().clone(), a_graph, b_graph)
        .expect("restriction of a graph extension");
    (out, total_sub)
}

/// The largest sub-split-extension of groupoids with kernel `X` of a faithful
/// reflexive-graph extension whose kernel is a groupoid: pull back along
/// [`b_tilde`].
pub fn largest_groupoid_subextension(e: &RGSplitExtension) -> Result<GroupoidSplitExtension> {
    if !is_groupoid(e.kernel_graph()) {
        return Err(Error::KernelNotGroupoid);
    }
    if !rg_is_faithful(e) {
        return Err(Error::NotFaithful);
    }
    let tilde = b_tilde(e);
    let (sub_ext, total_sub) = pullback_along(e, tilde.elements());
    debug_assert!(is_groupoid(sub_ext.base_graph()), "B̃ must be a groupoid");
    debug_assert!(is_groupoid(sub_ext.total_graph()), "Ã must be a groupoid");
    GroupoidSplitExtension::with_parent(sub_ext, total_sub, tilde.elements().clone())
}

/// The split extension classifier of an internal groupoid.
pub fn groupoid_classifier(x: &InternalGroupoid) -> GroupoidSplitExtension {
    let c = rg_classifier(x.graph());
    largest_groupoid_subextension(&c.extension).expect("the graph classifier is faithful over a groupoid kernel")
}

/// [`groupoid_classifier`] for an unvalidated reflexive graph.
pub fn groupoid_classifier_of(x: &ReflexiveGraph) -> Result<GroupoidSplitExtension> {
    let g = InternalGroupoid::new(x.clone()).map_err(|_| Error::KernelNotGroupoid)?;
    Ok(groupoid_classifier(&g))
}

/// Bases `B'` (as `s,t`-closed subgroups of the base) whose pulled-back
/// sub-extension consists of groupoids, found by scanning every subgroup.
pub fn groupoid_subextension_bases(e: &RGSplitExtension) -> Vec<Subgroup> {
    let b = e.base_graph();
    all_subgroups(b.carrier())
        .into_iter()
        .filter(|sub| b.is_closed(sub))
        .filter(|sub| {
            let (pulled, _) = pullback_along(e, sub);
            is_groupoid(pulled.base_graph()) && is_groupoid(pulled.total_graph())
        })
        .collect()
}

/// The groupoid part of the reflexive-graph fiber: cases whose base and
/// total graphs are groupoids.
pub fn grpd_fiber(x: &ReflexiveGraph, catalog: &[FiniteGroup]) -> Vec<RgFiberCase> {
    rg_fiber(x, catalog)
        .into_iter()
        .filter(|c| is_groupoid(c.extension.base_graph()) && is_groupoid(c.extension.total_graph()))
        .collect()
}

pub fn grpd_verify_generic(candidate: &GroupoidSplitExtension, catalog: &[FiniteGroup]) -> VerifyReport {
    let fiber = grpd_fiber(candidate.extension().kernel_graph(), catalog);
    rg_verify_generic_against(candidate.extension(), &fiber)
}
