//! Executable checks of the commutator and extension identities used by the
//! groupoid construction, and a runner that sweeps them over a catalog.
//!
//! Conditional laws count the cases whose hypotheses fail as vacuous instead
//! of silently dropping them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::groupoid::{b_tilde, is_groupoid, pullback_along};
use crate::hom::GroupHom;
use crate::homsearch::automorphism_group;
use crate::lattice::{all_subgroups, huq_commutator, join, meet};
use crate::rgraph::{rg_classifier, rg_fiber, rg_is_faithful, rg_structures, RGSplitExtension};
use crate::splitext::{semidirect_product, SplitExtension};
use crate::subgroup::Subgroup;

/// `[K,[L,M]] ≤ [[K,L],M] ∨ [[M,K],L]` for normal subgroups.
pub fn check_jacobi(k: &Subgroup, l: &Subgroup, m: &Subgroup) -> Result<bool> {
    if !(k.is_normal() && l.is_normal() && m.is_normal()) {
        return Err(Error::NotNormal);
    }
    let lhs = huq_commutator(k, &huq_commutator(l, m));
    let rhs = join(&huq_commutator(&huq_commutator(k, l), m), &huq_commutator(&huq_commutator(m, k), l));
    Ok(lhs.is_subset_of(&rhs))
}

/// `[A₁ ∨ A₂, B] = [A₁, B] ∨ [A₂, B]`.
pub fn check_join_distributivity(a1: &Subgroup, a2: &Subgroup, b: &Subgroup) -> bool {
    huq_commutator(&join(a1, a2), b) == join(&huq_commutator(a1, b), &huq_commutator(a2, b))
}

/// For `K ≤ X` with `κ(K)` normal in the total group, `J = κ(K) ∨ β(B)`
/// carries a split extension of `B` with kernel exactly `K`.
pub fn check_lift(e: &SplitExtension, k: &Subgroup) -> Result<bool> {
    if k.parent() != e.kernel() {
        return Err(Error::ShapeMismatch("K must be a subgroup of the kernel".into()));
    }
    let kk = e.kappa().image_of(k);
    if !kk.is_normal() {
        return Err(Error::NotNormalInTotal);
    }
    let j = join(&kk, &e.beta().image());
    if meet(&j, &e.kappa().image()) != kk {
        return Ok(false);
    }
    let (jg, _) = j.materialize();
    let (kg, _) = k.materialize();
    let pos = |a: usize| j.position(a).expect("inside J");
    let kappa = GroupHom::new_unchecked(
        kg.clone(),
        jg.clone(),
        k.elements().iter().map(|&x| pos(e.kappa().apply(x))).collect(),
    );
    let alpha = GroupHom::new_unchecked(
        jg.clone(),
        e.base().clone(),
        j.elements().iter().map(|&a| e.alpha().apply(a)).collect(),
    );
    let beta =
        GroupHom::new_unchecked(e.base().clone(), jg, e.base().elements().map(|b| pos(e.beta().apply(b))).collect());
    Ok([&kappa, &alpha, &beta].iter().all(|h| h.is_homomorphism()) && SplitExtension::new(kappa, alpha, beta).is_ok())
}

struct GraphCommutators {
    kappa_x: Subgroup,
    x_star_s: Subgroup,
    x_star_t: Subgroup,
    b_star_s: Subgroup,
    b_star_t: Subgroup,
}

fn graph_commutators(e: &RGSplitExtension) -> GraphCommutators {
    let ext = e.extension();
    let xp = e.kernel_graph().parts();
    let bp = e.base_graph().parts();
    GraphCommutators {
        kappa_x: ext.kappa().image(),
        x_star_s: ext.kappa().image_of(&xp.ker_s),
        x_star_t: ext.kappa().image_of(&xp.ker_t),
        b_star_s: ext.beta().image_of(&bp.ker_s),
        b_star_t: ext.beta().image_of(&bp.ker_t),
    }
}

/// `X` a groupoid and `[*B, X_*] = 0 = [B_*, *X]`.
fn partial_composition_hypotheses(e: &RGSplitExtension, c: &GraphCommutators) -> bool {
    is_groupoid(e.kernel_graph())
        && huq_commutator(&c.b_star_s, &c.x_star_t).is_trivial()
        && huq_commutator(&c.b_star_t, &c.x_star_s).is_trivial()
}

/// `[X, [A_*, *A]] = 0` whenever `X` is a groupoid and
/// `[*B, X_*] = 0 = [B_*, *X]`. `None` when the hypotheses fail.
pub fn check_kernel_commutator_lemma(e: &RGSplitExtension) -> Option<bool> {
    let c = graph_commutators(e);
    if !partial_composition_hypotheses(e, &c) {
        return None;
    }
    let ap = e.total_graph().parts();
    Some(huq_commutator(&c.kappa_x, &huq_commutator(&ap.ker_t, &ap.ker_s)).is_trivial())
}

/// `A` is a groupoid whenever `X` and `B` are and
/// `[*B, X_*] = 0 = [B_*, *X]`. `None` when the hypotheses fail.
pub fn check_extension_closed(e: &RGSplitExtension) -> Option<bool> {
    let c = graph_commutators(e);
    if !is_groupoid(e.base_graph()) || !partial_composition_hypotheses(e, &c) {
        return None;
    }
    Some(is_groupoid(e.total_graph()))
}

/// For a faithful extension: `B` is a groupoid iff `[X, [B_*, *B]] = 0`.
pub fn check_faithful_codomain_groupoid(e: &RGSplitExtension) -> Result<bool> {
    if !rg_is_faithful(e) {
        return Err(Error::NotFaithful);
    }
    let bp = e.base_graph().parts();
    let inner = e.extension().beta().image_of(&huq_commutator(&bp.ker_t, &bp.ker_s));
    let commutes = huq_commutator(&e.extension().kappa().image(), &inner).is_trivial();
    Ok(is_groupoid(e.base_graph()) == commutes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Jacobi,
    JoinDistributivity,
    Lift,
    KernelCommutator,
    ExtensionClosed,
    FaithfulCodomain,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::Jacobi,
        Law::JoinDistributivity,
        Law::Lift,
        Law::KernelCommutator,
        Law::ExtensionClosed,
        Law::FaithfulCodomain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Jacobi => "jacobi",
            Law::JoinDistributivity => "join_distributivity",
            Law::Lift => "lift",
            Law::KernelCommutator => "kernel_commutator",
            Law::ExtensionClosed => "extension_closed",
            Law::FaithfulCodomain => "faithful_codomain",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Law {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Law::ALL.into_iter().find(|l| l.name() == s).ok_or_else(|| format!("unknown law {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    /// The group or extension the case lives in.
    pub group: String,
    /// The subgroups involved, as sorted element lists.
    pub subgroups: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: Law,
    pub cases_checked: usize,
    pub applicable: usize,
    pub vacuous: usize,
    pub failures: Vec<LawFailure>,
    pub pass: bool,
}

#[derive(Default)]
struct Tally {
    cases: usize,
    vacuous: usize,
    failures: Vec<LawFailure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.vacuous += other.vacuous;
        self.failures.extend(other.failures);
        self
    }

    fn report(self, law: Law) -> LawReport {
        LawReport {
            law,
            cases_checked: self.cases,
            applicable: self.cases - self.vacuous,
            vacuous: self.vacuous,
            pass: self.failures.is_empty(),
            failures: self.failures,
        }
    }
}

/// How far the extension-based laws reach into the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawConfig {
    /// Kernel and base order bound for the lift lemma's split extensions.
    pub split_max_order: usize,
    /// Kernel and base carrier bound for reflexive-graph extensions.
    pub graph_max_order: usize,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig { split_max_order: 6, graph_max_order: 4 }
    }
}

/// Every subgroup of a group with memoized joins and commutators, addressed by
/// position in [`all_subgroups`].
struct SubgroupTables {
    subs: Vec<Subgroup>,
    join: Vec<Vec<usize>>,
    comm: Vec<Vec<usize>>,
}

impl SubgroupTables {
    fn new(g: &FiniteGroup) -> Self {
        let subs = all_subgroups(g);
        let index: HashMap<&[usize], usize> = subs.iter().enumerate().map(|(i, s)| (s.elements(), i)).collect();
        let lookup = |s: &Subgroup| index[s.elements()];
        let n = subs.len();
        let mut join_t = vec![vec![0; n]; n];
        let mut comm_t = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i..n {
                let jn = lookup(&join(&subs[i], &subs[j]));
                let cm = lookup(&huq_commutator(&subs[i], &subs[j]));
                join_t[i][j] = jn;
                join_t[j][i] = jn;
                comm_t[i][j] = cm;
                comm_t[j][i] = cm;
            }
        }
        SubgroupTables { subs, join: join_t, comm: comm_t }
    }

    fn witness(&self, ids: &[usize]) -> Vec<Vec<usize>> {
        ids.iter().map(|&i| self.subs[i].elements().to_vec()).collect()
    }
}

fn jacobi_over(g: &FiniteGroup, t: &SubgroupTables) -> Tally {
    let normal: Vec<usize> = (0..t.subs.len()).filter(|&i| t.subs[i].is_normal()).collect();
    let mut tally = Tally::default();
    for &k in &normal {
        for &l in &normal {
            for &m in &normal {
                tally.cases += 1;
                let lhs = t.comm[k][t.comm[l][m]];
                let rhs = t.join[t.comm[t.comm[k][l]][m]][t.comm[t.comm[m][k]][l]];
                if !t.subs[lhs].is_subset_of(&t.subs[rhs]) {
                    tally.failures.push(LawFailure { group: g.label(), subgroups: t.witness(&[k, l, m]) });
                }
            }
        }
    }
    tally
}

fn join_distributivity_over(g: &FiniteGroup, t: &SubgroupTables) -> Tally {
    let n = t.subs.len();
    let mut tally = Tally::default();
    for a1 in 0..n {
        for a2 in 0..n {
            for b in 0..n {
                tally.cases += 1;
                if t.comm[t.join[a1][a2]][b] != t.join[t.comm[a1][b]][t.comm[a2][b]] {
                    tally.failures.push(LawFailure { group: g.label(), subgroups: t.witness(&[a1, a2, b]) });
                }
            }
        }
    }
    tally
}

fn bounded(catalog: &[FiniteGroup], max: usize) -> Vec<FiniteGroup> {
    catalog.iter().filter(|g| g.order() <= max).cloned().collect()
}

/// Every semidirect product `X ⋊ B` with both factors from the catalog,
/// labelled `X:B#action`.
fn split_cases(catalog: &[FiniteGroup], max: usize) -> Vec<(String, SplitExtension)> {
    let small = bounded(catalog, max);
    small
        .par_iter()
        .flat_map_iter(|x| {
            let auts = automorphism_group(x);
            small
                .iter()
                .flat_map(|b| {
                    auts.actions_of(b)
                        .into_iter()
                        .enumerate()
                        .map(|(i, a)| (format!("{}:{}#{i}", x.label(), b.label()), semidirect_product(&a)))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Reflexive-graph extensions: the fiber of every graph structure on every
/// small catalog group, plus each structure's classifier and, for groupoid
/// kernels, the classifier pulled back along `B̃`.
fn graph_cases(catalog: &[FiniteGroup], max: usize) -> Vec<(String, RGSplitExtension)> {
    let small = bounded(catalog, max);
    let kernels: Vec<(String, crate::rgraph::ReflexiveGraph)> = small
        .iter()
        .flat_map(|g| {
            rg_structures(g)
                .into_iter()
                .enumerate()
                .map(|(i, r)| (format!("{}[{i}]", g.label()), r))
                .collect::<Vec<_>>()
        })
        .collect();
    kernels
        .par_iter()
        .flat_map_iter(|(name, x)| {
            let mut out: Vec<(String, RGSplitExtension)> = rg_fiber(x, &small)
                .into_iter()
                .map(|c| (format!("{name}:{}[{}]#{}", c.base, c.structure, c.action_index), c.extension))
                .collect();
            let classifier = rg_classifier(x).extension;
            if is_groupoid(x) {
                let (pulled, _) = pullback_along(&classifier, b_tilde(&classifier).elements());
                out.push((format!("{name}:classifier"), classifier));
                out.push((format!("{name}:classifier~"), pulled));
            } else {
                out.push((format!("{name}:classifier"), classifier));
            }
            out
        })
        .collect()
}

fn gated<E: Sync>(cases: &[(String, E)], check: impl Fn(&E) -> Option<bool> + Sync) -> Tally {
    let outcomes: Vec<Option<bool>> = cases.par_iter().map(|(_, e)| check(e)).collect();
    let mut tally = Tally::default();
    for ((name, _), o) in cases.iter().zip(outcomes) {
        tally.cases += 1;
        match o {
            None => tally.vacuous += 1,
            Some(true) => {}
            Some(false) => tally.failures.push(LawFailure { group: name.clone(), subgroups: Vec::new() }),
        }
    }
    tally
}

fn lift_over(cases: &[(String, SplitExtension)]) -> Tally {
    let per_case: Vec<Tally> = cases
        .par_iter()
        .map(|(name, e)| {
            let mut tally = Tally::default();
            for k in all_subgroups(e.kernel()) {
                tally.cases += 1;
                match check_lift(e, &k) {
                    Err(_) => tally.vacuous += 1,
                    Ok(true) => {}
                    Ok(false) => {
                        tally.failures.push(LawFailure { group: name.clone(), subgroups: vec![k.elements().to_vec()] })
                    }
                }
            }
            tally
        })
        .collect();
    per_case.into_iter().fold(Tally::default(), Tally::merge)
}

/// Runs the selected laws over `catalog`, in the order given. Results do not
/// depend on the number of worker threads.
pub fn run_laws(catalog: &[FiniteGroup], laws: &[Law], config: LawConfig) -> Vec<LawReport> {
    let wants = |l: Law| laws.contains(&l);
    let tables: Vec<(FiniteGroup, SubgroupTables)> = if wants(Law::Jacobi) || wants(Law::JoinDistributivity) {
        catalog.par_iter().map(|g| (g.clone(), SubgroupTables::new(g))).collect()
    } else {
        Vec::new()
    };
    let splits = if wants(Law::Lift) { split_cases(catalog, config.split_max_order) } else { Vec::new() };
    let graphs = if wants(Law::KernelCommutator) || wants(Law::ExtensionClosed) || wants(Law::FaithfulCodomain) {
        graph_cases(catalog, config.graph_max_order)
    } else {
        Vec::new()
    };
    laws.iter()
        .map(|&law| {
            let tally = match law {
                Law::Jacobi => tables
                    .par_iter()
                    .map(|(g, t)| jacobi_over(g, t))
                    .collect::<Vec<_>>()
                    .into_iter()
                    .fold(Tally::default(), Tally::merge),
                Law::JoinDistributivity => tables
                    .par_iter()
                    .map(|(g, t)| join_distributivity_over(g, t))
                    .collect::<Vec<_>>()
                    .into_iter()
                    .fold(Tally::default(), Tally::merge),
                Law::Lift => lift_over(&splits),
                Law::KernelCommutator => gated(&graphs, check_kernel_commutator_lemma),
                Law::ExtensionClosed => gated(&graphs, check_extension_closed),
                Law::FaithfulCodomain => gated(&graphs, |e| check_faithful_codomain_groupoid(e).ok()),
            };
            tally.report(law)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, S3_12, S3_13};
    use crate::rgraph::{rg_product, ReflexiveGraph};

    #[test]
    fn jacobi_examples() {
        let s3 = catalog::symmetric3();
        let all = Subgroup::whole(&s3);
        assert!(check_jacobi(&all, &all, &all).unwrap());
        let t = Subgroup::generated(&s3, &[S3_12]);
        assert_eq!(check_jacobi(&t, &all, &all), Err(Error::NotNormal));
        let z4 = catalog::cyclic(4);
        let w = Subgroup::whole(&z4);
        assert!(check_jacobi(&w, &w, &w).unwrap());
    }

    #[test]
    fn join_distributivity_example() {
        let s3 = catalog::symmetric3();
        let a1 = Subgroup::generated(&s3, &[S3_12]);
        let a2 = Subgroup::generated(&s3, &[S3_13]);
        let b = Subgroup::whole(&s3);
        assert!(check_join_distributivity(&a1, &a2, &b));
        assert_eq!(huq_commutator(&join(&a1, &a2), &b).order(), 3);
        assert!(check_join_distributivity(&a1, &Subgroup::trivial(&s3), &b));
    }

    #[test]
    fn lift_edge_cases() {
        let e = semidirect_product(&automorphism_group(&catalog::cyclic(3)).evaluation());
        assert!(check_lift(&e, &Subgroup::whole(e.kernel())).unwrap());
        assert!(check_lift(&e, &Subgroup::trivial(e.kernel())).unwrap());
        // Z2 inside V4, acted on nontrivially by Aut(V4): not normal in the total
        let v = semidirect_product(&automorphism_group(&catalog::klein4()).evaluation());
        let k = Subgroup::generated(v.kernel(), &[1]);
        assert_eq!(check_lift(&v, &k), Err(Error::NotNormalInTotal));
    }

    #[test]
    fn graph_laws_on_discrete_product() {
        let e =
            rg_product(&ReflexiveGraph::discrete(&catalog::cyclic(3)), &ReflexiveGraph::discrete(&catalog::klein4()));
        assert_eq!(check_kernel_commutator_lemma(&e), Some(true));
        assert_eq!(check_extension_closed(&e), Some(true));
        assert_eq!(check_faithful_codomain_groupoid(&e), Err(Error::NotFaithful));
        let s3 = ReflexiveGraph::one_object(&catalog::symmetric3());
        let e = rg_product(&s3, &ReflexiveGraph::discrete(&catalog::cyclic(2)));
        assert_eq!(check_kernel_commutator_lemma(&e), None);
    }

    #[test]
    fn faithful_codomain_on_classifiers() {
        for x in [
            ReflexiveGraph::discrete(&catalog::cyclic(3)),
            ReflexiveGraph::one_object(&catalog::cyclic(3)),
            ReflexiveGraph::one_object(&catalog::klein4()),
        ] {
            let c = rg_classifier(&x);
            assert!(check_faithful_codomain_groupoid(&c.extension).unwrap(), "{x:?}");
        }
    }

    #[test]
    fn law_names_round_trip() {
        for l in Law::ALL {
            assert_eq!(l.name().parse::<Law>().unwrap(), l);
        }
        assert!("nope".parse::<Law>().is_err());
    }

    #[test]
    fn small_suite_passes() {
        let cat = catalog::groups_up_to(6);
        let reports = run_laws(&cat, &Law::ALL, LawConfig { split_max_order: 4, graph_max_order: 3 });
        for r in &reports {
            assert!(r.pass, "{r:?}");
            assert_eq!(r.applicable + r.vacuous, r.cases_checked);
            assert!(r.applicable > 0, "{r:?}");
        }
    }
}
