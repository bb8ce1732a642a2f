//! Reflexive graphs in groups, presented as a group `G` with endomorphisms
//! `s`, `t` such that `s∘t = t` and `t∘s = s`.
//!
//! `s = eσ` sends an arrow to the identity arrow on its source, `t = eτ` to
//! the one on its target. The objects-part `G₀` is the common image (and fixed
//! subgroup) of `s` and `t`. A split extension of reflexive graphs is a split
//! extension of the carriers whose three maps commute with `s` and `t`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::action::Action;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::homsearch::{automorphism_group, endomorphisms, AutomorphismGroup};
use crate::lattice::{centralizer, meet, preimage};
use crate::report::{classify, CaseFailure, VerifyReport};
use crate::splitext::{semidirect_product, SplitExtension, TargetIndex};
use crate::subgroup::Subgroup;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReflexiveGraph {
    carrier: FiniteGroup,
    s: GroupHom,
    t: GroupHom,
}

impl ReflexiveGraph {
    pub fn new(carrier: FiniteGroup, s: GroupHom, t: GroupHom) -> Result<Self> {
        for (name, e) in [("s", &s), ("t", &t)] {
            if e.domain() != &carrier || e.codomain() != &carrier {
                return Err(Error::ShapeMismatch(format!("{name} is not an endomorphism of the carrier")));
            }
        }
        if !s.compose(&t)?.same_map(&t) {
            return Err(Error::RelationViolated("s∘t = t".into()));
        }
        if !t.compose(&s)?.same_map(&s) {
            return Err(Error::RelationViolated("t∘s = s".into()));
        }
        let g = ReflexiveGraph { carrier, s, t };
        debug_assert!(g.s.compose(&g.s).unwrap().same_map(&g.s));
        debug_assert!(g.t.compose(&g.t).unwrap().same_map(&g.t));
        debug_assert!({
            let p = g.parts();
            p.objects == g.s.image() && p.objects == g.t.image()
        });
        Ok(g)
    }

    /// Builds from raw value tables, validating homomorphism and relations.
    pub fn from_maps(carrier: &FiniteGroup, s: Vec<usize>, t: Vec<usize>) -> Result<Self> {
        let s = GroupHom::new(carrier.clone(), carrier.clone(), s)?;
        let t = GroupHom::new(carrier.clone(), carrier.clone(), t)?;
        ReflexiveGraph::new(carrier.clone(), s, t)
    }

    pub(crate) fn new_unchecked(carrier: FiniteGroup, s: GroupHom, t: GroupHom) -> Self {
        ReflexiveGraph { carrier, s, t }
    }

    /// `s = t = 1`: only identity arrows.
    pub fn discrete(g: &FiniteGroup) -> Self {
        let id = GroupHom::identity(g);
        ReflexiveGraph::new_unchecked(g.clone(), id.clone(), id)
    }

    /// `s = t = 0`: a single object, every element a loop on it.
    pub fn one_object(g: &FiniteGroup) -> Self {
        let zero = GroupHom::zero(g, g);
        ReflexiveGraph::new_unchecked(g.clone(), zero.clone(), zero)
    }

    pub fn carrier(&self) -> &FiniteGroup {
        &self.carrier
    }

    pub fn s(&self) -> &GroupHom {
        &self.s
    }

    pub fn t(&self) -> &GroupHom {
        &self.t
    }

    pub fn parts(&self) -> RgParts {
        let g = &self.carrier;
        let fix = g.elements().filter(|&x| self.s.apply(x) == x).collect();
        RgParts { ker_s: self.s.kernel(), ker_t: self.t.kernel(), objects: Subgroup::from_sorted_unchecked(g, fix) }
    }

    pub fn is_discrete(&self) -> bool {
        self.s.is_identity() && self.t.is_identity()
    }

    /// Whether a subgroup of the carrier is closed under `s` and `t`.
    pub fn is_closed(&self, sub: &Subgroup) -> bool {
        sub.elements().iter().all(|&x| sub.contains(self.s.apply(x)) && sub.contains(self.t.apply(x)))
    }

    /// Restriction to an `s,t`-closed subgroup, materialized, with its
    /// inclusion.
    pub fn restrict(&self, sub: &Subgroup) -> (ReflexiveGraph, GroupHom) {
        debug_assert!(self.is_closed(sub));
        let (g, incl) = sub.materialize();
        let pos = |x: usize| sub.position(x).expect("closed under s and t");
        let s = sub.elements().iter().map(|&x| pos(self.s.apply(x))).collect();
        let t = sub.elements().iter().map(|&x| pos(self.t.apply(x))).collect();
        let r = ReflexiveGraph::new_unchecked(
            g.clone(),
            GroupHom::new_unchecked(g.clone(), g.clone(), s),
            GroupHom::new_unchecked(g.clone(), g, t),
        );
        (r, incl)
    }

    /// Whether `f: self → other` on carriers commutes with `s` and `t`.
    pub fn is_graph_morphism(&self, other: &ReflexiveGraph, f: &[usize]) -> bool {
        self.carrier
            .elements()
            .all(|x| f[self.s.apply(x)] == other.s.apply(f[x]) && f[self.t.apply(x)] == other.t.apply(f[x]))
    }
}

impl std::fmt::Debug for ReflexiveGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ReflexiveGraph({}, s={:?}, t={:?})", self.carrier.label(), self.s.map(), self.t.map())
    }
}

/// `*G = ker s`, `G_* = ker t` and the objects-part `G₀ = Fix(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RgParts {
    pub ker_s: Subgroup,
    pub ker_t: Subgroup,
    pub objects: Subgroup,
}

pub fn rg_parts(r: &ReflexiveGraph) -> RgParts {
    r.parts()
}

/// A sub-reflexive-graph: an `s,t`-closed subgroup of the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RGSubgraph {
    graph: ReflexiveGraph,
    elements: Subgroup,
}

impl RGSubgraph {
    pub fn new(graph: &ReflexiveGraph, elements: Subgroup) -> Result<Self> {
        if elements.parent() != graph.carrier() {
            return Err(Error::ShapeMismatch("subgroup of a different group".into()));
        }
        if !graph.is_closed(&elements) {
            return Err(Error::RelationViolated("subgraph not closed under s and t".into()));
        }
        Ok(RGSubgraph { graph: graph.clone(), elements })
    }

    pub fn whole(graph: &ReflexiveGraph) -> Self {
        RGSubgraph { graph: graph.clone(), elements: Subgroup::whole(graph.carrier()) }
    }

    pub fn graph(&self) -> &ReflexiveGraph {
        &self.graph
    }

    pub fn elements(&self) -> &Subgroup {
        &self.elements
    }
}

/// Every reflexive-graph structure on `g`: ordered pairs of endomorphisms with
/// `s∘t = t` and `t∘s = s`, ordered by position in the endomorphism list.
pub fn rg_structures(g: &FiniteGroup) -> Vec<ReflexiveGraph> {
    let idempotents: Vec<GroupHom> =
        endomorphisms(g).into_iter().filter(|e| e.compose(e).map(|ee| ee.same_map(e)).unwrap_or(false)).collect();
    let mut out = Vec::new();
    for s in &idempotents {
        for t in &idempotents {
            let st = t.map().iter().map(|&x| s.apply(x));
            let ts = s.map().iter().map(|&x| t.apply(x));
            if st.eq(t.map().iter().copied()) && ts.eq(s.map().iter().copied()) {
                out.push(ReflexiveGraph::new_unchecked(g.clone(), s.clone(), t.clone()));
            }
        }
    }
    out
}

/// An action of `B` on `X` compatible with both graph structures:
/// `s_X∘φ_b = φ_{s_B b}∘s_X` and `t_X∘φ_b = φ_{t_B b}∘t_X`.
#[derive(Clone, Debug)]
pub struct CompatibleAction {
    action: Action,
    kernel_graph: ReflexiveGraph,
    base_graph: ReflexiveGraph,
}

fn compatibility_violation(action: &Action, x: &ReflexiveGraph, b: &ReflexiveGraph) -> Option<&'static str> {
    let bg = b.carrier();
    for c in bg.elements() {
        let (sc, tc) = (b.s().apply(c), b.t().apply(c));
        for y in x.carrier().elements() {
            if x.s().apply(action.apply(c, y)) != action.apply(sc, x.s().apply(y)) {
                return Some("s_X∘φ_b = φ_{s b}∘s_X");
            }
            if x.t().apply(action.apply(c, y)) != action.apply(tc, x.t().apply(y)) {
                return Some("t_X∘φ_b = φ_{t b}∘t_X");
            }
        }
    }
    None
}

impl CompatibleAction {
    pub fn new(action: Action, kernel_graph: &ReflexiveGraph, base_graph: &ReflexiveGraph) -> Result<Self> {
        if action.target() != kernel_graph.carrier() || action.actor() != base_graph.carrier() {
            return Err(Error::ShapeMismatch("action does not match the graph carriers".into()));
        }
        if let Some(rule) = compatibility_violation(&action, kernel_graph, base_graph) {
            return Err(Error::IncompatibleAction(rule.into()));
        }
        Ok(CompatibleAction { action, kernel_graph: kernel_graph.clone(), base_graph: base_graph.clone() })
    }

    pub fn is_compatible(action: &Action, x: &ReflexiveGraph, b: &ReflexiveGraph) -> bool {
        compatibility_violation(action, x, b).is_none()
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn kernel_graph(&self) -> &ReflexiveGraph {
        &self.kernel_graph
    }

    pub fn base_graph(&self) -> &ReflexiveGraph {
        &self.base_graph
    }
}

/// A split extension of reflexive graphs.
#[derive(Clone, Debug)]
pub struct RGSplitExtension {
    ext: SplitExtension,
    kernel_graph: ReflexiveGraph,
    total_graph: ReflexiveGraph,
    base_graph: ReflexiveGraph,
}

impl RGSplitExtension {
    pub fn new(
        ext: SplitExtension,
        kernel_graph: ReflexiveGraph,
        total_graph: ReflexiveGraph,
        base_graph: ReflexiveGraph,
    ) -> Result<Self> {
        if kernel_graph.carrier() != ext.kernel()
            || total_graph.carrier() != ext.total()
            || base_graph.carrier() != ext.base()
        {
            return Err(Error::ShapeMismatch("graph carriers differ from the extension".into()));
        }
        let checks = [
            (kernel_graph.is_graph_morphism(&total_graph, ext.kappa().map()), "κ commutes with s, t"),
            (total_graph.is_graph_morphism(&base_graph, ext.alpha().map()), "α commutes with s, t"),
            (base_graph.is_graph_morphism(&total_graph, ext.beta().map()), "β commutes with s, t"),
        ];
        if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
            return Err(Error::RelationViolated((*what).into()));
        }
        Ok(RGSplitExtension { ext, kernel_graph, total_graph, base_graph })
    }

    pub fn extension(&self) -> &SplitExtension {
        &self.ext
    }

    pub fn kernel_graph(&self) -> &ReflexiveGraph {
        &self.kernel_graph
    }

    pub fn total_graph(&self) -> &ReflexiveGraph {
        &self.total_graph
    }

    pub fn base_graph(&self) -> &ReflexiveGraph {
        &self.base_graph
    }

    /// The action by conjugation, which is always compatible.
    pub fn compatible_action(&self) -> CompatibleAction {
        let action = self.ext.action();
        debug_assert!(CompatibleAction::is_compatible(&action, &self.kernel_graph, &self.base_graph));
        CompatibleAction { action, kernel_graph: self.kernel_graph.clone(), base_graph: self.base_graph.clone() }
    }
}

/// Semidirect product with `s_A(x, b) = (s_X x, s_B b)` and likewise for `t`.
pub fn rg_split_extension(phi: &CompatibleAction) -> RGSplitExtension {
    let ext = semidirect_product(phi.action());
    let (x, b) = (phi.kernel_graph(), phi.base_graph());
    let n = x.carrier().order();
    let a = ext.total().clone();
    let lift = |ex: &GroupHom, eb: &GroupHom| {
        let map = a.elements().map(|p| ex.apply(p % n) + n * eb.apply(p / n)).collect();
        GroupHom::new_unchecked(a.clone(), a.clone(), map)
    };
    let total_graph = ReflexiveGraph::new_unchecked(a.clone(), lift(x.s(), b.s()), lift(x.t(), b.t()));
    debug_assert!(total_graph.s().is_homomorphism() && total_graph.t().is_homomorphism());
    RGSplitExtension::new(ext, x.clone(), total_graph, b.clone()).expect("compatible action gives a graph extension")
}

/// Builds the extension for an action, checking compatibility first.
pub fn rg_split_extension_checked(x: &ReflexiveGraph, b: &ReflexiveGraph, action: Action) -> Result<RGSplitExtension> {
    Ok(rg_split_extension(&CompatibleAction::new(action, x, b)?))
}

/// The split extension classifier of a reflexive graph `X`.
#[derive(Clone, Debug)]
pub struct RgClassifier {
    pub auts: AutomorphismGroup,
    /// `(f, g, h)` as indices into `auts`, in the order of the base group.
    pub triples: Vec<[usize; 3]>,
    pub base: ReflexiveGraph,
    pub action: CompatibleAction,
    pub extension: RGSplitExtension,
}

/// `[X] = { (f, g, h) ∈ Aut(X)³ : s f = g s, t f = h t, g and h commute with
/// s and t }` with componentwise product, `S(f,g,h) = (g,g,g)`,
/// `T(f,g,h) = (h,h,h)`, acting on `X` through `f`.
///
/// Terminality: a compatible action `φ` of `B` factors uniquely as
/// `b ↦ (φ_b, φ_{s b}, φ_{t b})`, since equivariance of the factorization
/// forces the second and third components.
pub fn rg_classifier(x: &ReflexiveGraph) -> RgClassifier {
    let auts = automorphism_group(x.carrier());
    let aut = auts.group();
    let n = aut.order();
    let (s, t) = (x.s().map(), x.t().map());
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&v| p[v]).collect() };
    let commutes_with_st: Vec<bool> = (0..n)
        .map(|g| {
            let p = auts.perm(g);
            compose(s, p) == compose(p, s) && compose(t, p) == compose(p, t)
        })
        .collect();
    let mut triples = Vec::new();
    for f in 0..n {
        let pf = auts.perm(f);
        let (sf, tf) = (compose(s, pf), compose(t, pf));
        for g in (0..n).filter(|&g| commutes_with_st[g]) {
            if compose(auts.perm(g), s) != sf {
                continue;
            }
            for h in (0..n).filter(|&h| commutes_with_st[h]) {
                if compose(auts.perm(h), t) == tf {
                    triples.push([f, g, h]);
                }
            }
        }
    }
    // lexicographic, so (0,0,0) comes first
    let index: HashMap<[usize; 3], usize> = triples.iter().enumerate().map(|(i, &tr)| (tr, i)).collect();
    let name = Some(format!("[{}]", x.carrier().label()));
    let group = FiniteGroup::from_fn_unchecked(triples.len(), name, |i, j| {
        let (a, b) = (triples[i], triples[j]);
        index[&[aut.mul(a[0], b[0]), aut.mul(a[1], b[1]), aut.mul(a[2], b[2])]]
    });
    let s_map = triples.iter().map(|tr| index[&[tr[1]; 3]]).collect();
    let t_map = triples.iter().map(|tr| index[&[tr[2]; 3]]).collect();
    let base = ReflexiveGraph::new_unchecked(
        group.clone(),
        GroupHom::new_unchecked(group.clone(), group.clone(), s_map),
        GroupHom::new_unchecked(group.clone(), group.clone(), t_map),
    );
    let perms = triples.iter().map(|tr| auts.perm(tr[0]).to_vec()).collect();
    let action = CompatibleAction {
        action: Action::new_unchecked(group, x.carrier().clone(), perms),
        kernel_graph: x.clone(),
        base_graph: base.clone(),
    };
    debug_assert!(CompatibleAction::is_compatible(action.action(), x, &base));
    let extension = rg_split_extension(&action);
    RgClassifier { auts, triples, base, action, extension }
}

/// Centralizer of a sub-reflexive-graph: `Z ∧ s⁻¹(Z) ∧ t⁻¹(Z)` where `Z`
/// centralizes the underlying subgroup.
pub fn rg_centralizer(sub: &RGSubgraph) -> RGSubgraph {
    let graph = sub.graph();
    let z = centralizer(&sub.elements().inclusion());
    let els = meet(&meet(&z, &preimage(graph.s(), &z)), &preimage(graph.t(), &z));
    debug_assert!(graph.is_closed(&els));
    RGSubgraph { graph: graph.clone(), elements: els }
}

/// Faithfulness criterion for graph extensions:
/// `Z ∧ s⁻¹(Z) ∧ t⁻¹(Z) ∧ β(B) = 0` with `Z = Z_A(X, κ)`.
pub fn rg_is_faithful(e: &RGSplitExtension) -> bool {
    let ext = e.extension();
    let a = e.total_graph();
    let z = centralizer(ext.kappa());
    let zz = meet(&meet(&z, &preimage(a.s(), &z)), &preimage(a.t(), &z));
    meet(&zz, &ext.beta().image()).is_trivial()
}

/// One member of the reflexive-graph fiber over a fixed kernel.
#[derive(Clone, Debug)]
pub struct RgFiberCase {
    pub base: String,
    pub structure: usize,
    pub action_index: usize,
    pub extension: RGSplitExtension,
}

/// Every graph split extension with kernel `x` whose base carrier is a
/// catalog group: all structures on each base, all compatible actions.
pub fn rg_fiber(x: &ReflexiveGraph, catalog: &[FiniteGroup]) -> Vec<RgFiberCase> {
    let auts = automorphism_group(x.carrier());
    rg_fiber_with(x, &auts, catalog)
}

pub fn rg_fiber_with(x: &ReflexiveGraph, auts: &AutomorphismGroup, catalog: &[FiniteGroup]) -> Vec<RgFiberCase> {
    let per_base: Vec<Vec<RgFiberCase>> = catalog
        .par_iter()
        .map(|b| {
            let actions = auts.actions_of(b);
            let mut out = Vec::new();
            for (si, structure) in rg_structures(b).into_iter().enumerate() {
                for (ai, act) in actions.iter().enumerate() {
                    if CompatibleAction::is_compatible(act, x, &structure) {
                        let phi = CompatibleAction {
                            action: act.clone(),
                            kernel_graph: x.clone(),
                            base_graph: structure.clone(),
                        };
                        out.push(RgFiberCase {
                            base: b.label(),
                            structure: si,
                            action_index: ai,
                            extension: rg_split_extension(&phi),
                        });
                    }
                }
            }
            out
        })
        .collect();
    per_base.into_iter().flatten().collect()
}

/// Morphisms of graph split extensions `source → target` that are the
/// identity on kernels, as `(w, v)` value tables.
pub fn rg_morphisms(source: &RGSplitExtension, target: &RGSplitExtension) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    if source.kernel_graph() != target.kernel_graph() {
        return Err(Error::KernelMismatch("graph extensions have different kernels".into()));
    }
    Ok(rg_morphisms_via(&TargetIndex::new(target.extension()), source, target))
}

fn rg_morphisms_via(
    index: &TargetIndex<'_>,
    source: &RGSplitExtension,
    target: &RGSplitExtension,
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (b, b2) = (source.base_graph(), target.base_graph());
    index
        .morphisms_from(source.extension(), |w| b.is_graph_morphism(b2, w))
        .into_iter()
        .filter(|(_, v)| source.total_graph().is_graph_morphism(target.total_graph(), v))
        .collect()
}

pub fn rg_morphism_counts(candidate: &RGSplitExtension, fiber: &[RgFiberCase]) -> Vec<usize> {
    let index = TargetIndex::new(candidate.extension());
    fiber.par_iter().map(|case| rg_morphisms_via(&index, &case.extension, candidate).len()).collect()
}

/// Brute-force faithfulness over a graph fiber: at most one morphism from
/// each case.
pub fn rg_is_faithful_against(e: &RGSplitExtension, fiber: &[RgFiberCase]) -> bool {
    rg_morphism_counts(e, fiber).into_iter().all(|c| c <= 1)
}

pub fn rg_verify_generic(candidate: &RGSplitExtension, catalog: &[FiniteGroup]) -> VerifyReport {
    rg_verify_generic_against(candidate, &rg_fiber(candidate.kernel_graph(), catalog))
}

pub fn rg_verify_generic_against(candidate: &RGSplitExtension, fiber: &[RgFiberCase]) -> VerifyReport {
    let counts = rg_morphism_counts(candidate, fiber);
    let failures = fiber
        .iter()
        .zip(&counts)
        .filter_map(|(case, &n)| {
            classify(n).map(|kind| CaseFailure {
                base: case.base.clone(),
                structure: Some(case.structure),
                action: case.action_index,
                kind,
                morphisms: n,
            })
        })
        .collect();
    VerifyReport {
        kernel: candidate.kernel_graph().carrier().label(),
        candidate_order: candidate.extension().total().order(),
        cases_checked: fiber.len(),
        failures,
    }
}

/// The extension `X → X → 0` of reflexive graphs.
pub fn rg_kernel_only(x: &ReflexiveGraph) -> RGSplitExtension {
    let one = ReflexiveGraph::discrete(&FiniteGroup::trivial());
    let phi = CompatibleAction {
        action: Action::trivial(one.carrier(), x.carrier()),
        kernel_graph: x.clone(),
        base_graph: one,
    };
    rg_split_extension(&phi)
}

/// Product extension of graphs with the trivial action.
pub fn rg_product(x: &ReflexiveGraph, b: &ReflexiveGraph) -> RGSplitExtension {
    let phi = CompatibleAction {
        action: Action::trivial(b.carrier(), x.carrier()),
        kernel_graph: x.clone(),
        base_graph: b.clone(),
    };
    rg_split_extension(&phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, S3_12};
    use crate::homsearch::are_isomorphic;
    use crate::lattice::center;

    #[test]
    fn make_rg_examples() {
        let g = catalog::symmetric3();
        assert!(ReflexiveGraph::from_maps(&g, g.elements().collect(), g.elements().collect()).is_ok());
        assert!(ReflexiveGraph::from_maps(&g, vec![0; 6], vec![0; 6]).is_ok());
        let err = ReflexiveGraph::from_maps(&g, g.elements().collect(), vec![0; 6]).unwrap_err();
        assert!(matches!(err, Error::RelationViolated(_)), "{err:?}");
    }

    #[test]
    fn parts_of_standard_graphs() {
        let g = catalog::symmetric3();
        let d = ReflexiveGraph::discrete(&g).parts();
        assert!(d.ker_s.is_trivial() && d.ker_t.is_trivial() && d.objects.is_whole());
        let o = ReflexiveGraph::one_object(&g).parts();
        assert!(o.ker_s.is_whole() && o.ker_t.is_whole() && o.objects.is_trivial());
    }

    #[test]
    fn structures_satisfy_relations() {
        for g in catalog::groups_up_to(8) {
            for r in rg_structures(&g) {
                assert!(ReflexiveGraph::new(g.clone(), r.s().clone(), r.t().clone()).is_ok());
                let p = r.parts();
                assert_eq!(p.objects, r.s().image());
                assert_eq!(p.objects, r.t().image());
                let fix_t: Vec<usize> = g.elements().filter(|&x| r.t().apply(x) == x).collect();
                assert_eq!(p.objects.elements(), fix_t.as_slice());
            }
        }
        // S3: idempotents are 0, 1 and three retractions onto transposition
        // subgroups; only the diagonal pairs satisfy both relations.
        let count = rg_structures(&catalog::symmetric3()).len();
        assert_eq!(count, 5);
    }

    #[test]
    fn compatible_actions() {
        let z2 = catalog::cyclic(2);
        let z3 = catalog::cyclic(3);
        let inv = Action::new(z2.clone(), z3.clone(), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let x = ReflexiveGraph::one_object(&z3);
        let b = ReflexiveGraph::discrete(&z2);
        let e = rg_split_extension_checked(&x, &b, inv.clone()).unwrap();
        assert_eq!(e.extension().total().order(), 6);
        assert_eq!(e.compatible_action().action(), &inv);
        // discrete X with s_B = 0: s_X φ_b = φ_0 s_X forces φ trivial
        let xd = ReflexiveGraph::discrete(&z3);
        let b0 = ReflexiveGraph::one_object(&z2);
        assert!(matches!(rg_split_extension_checked(&xd, &b0, inv), Err(Error::IncompatibleAction(_))));
        let p = rg_product(&xd, &b0);
        assert!(RGSplitExtension::new(
            p.extension().clone(),
            p.kernel_graph().clone(),
            p.total_graph().clone(),
            p.base_graph().clone()
        )
        .is_ok());
    }

    #[test]
    fn classifier_shapes() {
        let z3 = catalog::cyclic(3);
        let c = rg_classifier(&ReflexiveGraph::one_object(&z3));
        assert_eq!(c.base.carrier().order(), 8);
        let c = rg_classifier(&ReflexiveGraph::discrete(&catalog::symmetric3()));
        assert!(c.base.is_discrete());
        assert!(are_isomorphic(c.base.carrier(), &catalog::symmetric3()));
        let c = rg_classifier(&ReflexiveGraph::one_object(&catalog::cyclic(2)));
        assert_eq!(c.base.carrier().order(), 1);
    }

    #[test]
    fn classifier_base_is_a_graph() {
        for g in catalog::groups_up_to(6) {
            for x in rg_structures(&g) {
                let c = rg_classifier(&x);
                assert!(c.base.s().is_homomorphism() && c.base.t().is_homomorphism());
                assert!(ReflexiveGraph::new(c.base.carrier().clone(), c.base.s().clone(), c.base.t().clone()).is_ok());
                assert!(c.action.action().perms().len() == c.base.carrier().order());
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = catalog::symmetric3();
        let a = ReflexiveGraph::one_object(&g);
        let triv = RGSubgraph::new(&a, Subgroup::trivial(&g)).unwrap();
        assert!(rg_centralizer(&triv).elements().is_whole());
        assert!(rg_centralizer(&RGSubgraph::whole(&a)).elements().is_trivial());
        let d4 = catalog::dihedral(4);
        let disc = ReflexiveGraph::discrete(&d4);
        assert_eq!(rg_centralizer(&RGSubgraph::whole(&disc)).elements(), &center(&d4));
        let t = Subgroup::generated(&g, &[S3_12]);
        assert!(RGSubgraph::new(&ReflexiveGraph::discrete(&g), t).is_ok());
    }

    #[test]
    fn faithfulness_examples() {
        let z3 = catalog::cyclic(3);
        let c = rg_classifier(&ReflexiveGraph::one_object(&z3));
        assert!(rg_is_faithful(&c.extension));
        let p = rg_product(&ReflexiveGraph::discrete(&z3), &ReflexiveGraph::discrete(&catalog::cyclic(2)));
        assert!(!rg_is_faithful(&p));
        assert!(rg_is_faithful(&rg_kernel_only(&ReflexiveGraph::one_object(&catalog::symmetric3()))));
    }

    #[test]
    fn verify_classifier_small() {
        let cat = catalog::groups_up_to(4);
        let x = ReflexiveGraph::one_object(&catalog::cyclic(3));
        let c = rg_classifier(&x);
        let r = rg_verify_generic(&c.extension, &cat);
        assert!(r.passed(), "{r:?}");
        let r = rg_verify_generic(&rg_kernel_only(&x), &cat);
        assert!(!r.passed());
        let x2 = ReflexiveGraph::one_object(&catalog::cyclic(2));
        assert!(rg_verify_generic(&rg_kernel_only(&x2), &cat).passed());
    }
}
