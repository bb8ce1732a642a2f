//! Crossed modules and their equivalence with internal groupoids.
//!
//! The cat¹-group to crossed-module direction uses the single convention
//! `T = ker s`, `G = im s`, `∂ = t|T`.

use crate::action::Action;
use crate::catalog;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::groupoid::InternalGroupoid;
use crate::hom::GroupHom;
use crate::homsearch::{automorphism_group, find_isomorphism_where, isomorphisms};
use crate::lattice::{all_subgroups, normal_subgroups};
use crate::rgraph::ReflexiveGraph;
use crate::splitext::semidirect_product;
use crate::subgroup::Subgroup;

/// `∂: T → G` with an action of `G` on `T` satisfying
/// `∂(g·τ) = g ∂(τ) g⁻¹` and `∂(τ)·τ' = τ τ' τ⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    boundary: GroupHom,
    action: Action,
}

impl CrossedModule {
    pub fn new(boundary: GroupHom, action: Action) -> Result<Self> {
        let (t, g) = (boundary.domain(), boundary.codomain());
        if action.actor() != g || action.target() != t {
            return Err(Error::ShapeMismatch("action must be of the codomain of ∂ on its domain".into()));
        }
        for a in g.elements() {
            for tau in t.elements() {
                if boundary.apply(action.apply(a, tau)) != g.conj(a, boundary.apply(tau)) {
                    return Err(Error::NotCrossedModule(format!("equivariance fails at g={a}, τ={tau}")));
                }
            }
        }
        for tau in t.elements() {
            let d = boundary.apply(tau);
            for tau2 in t.elements() {
                if action.apply(d, tau2) != t.conj(tau, tau2) {
                    return Err(Error::NotCrossedModule(format!("Peiffer identity fails at τ={tau}, τ'={tau2}")));
                }
            }
        }
        Ok(CrossedModule { boundary, action })
    }

    pub fn top(&self) -> &FiniteGroup {
        self.boundary.domain()
    }

    pub fn bottom(&self) -> &FiniteGroup {
        self.boundary.codomain()
    }

    pub fn boundary(&self) -> &GroupHom {
        &self.boundary
    }

    pub fn action(&self) -> &Action {
        &self.action
    }
}

/// `∂ = t|ker s : ker s → im s`, with `im s` acting on `ker s` by conjugation.
pub fn cat1_to_xmod(x: &InternalGroupoid) -> CrossedModule {
    let r = x.graph();
    let carrier = r.carrier();
    let ker = r.s().kernel();
    let img = r.s().image();
    let (top, _) = ker.materialize();
    let (bottom, _) = img.materialize();
    let boundary = GroupHom::new_unchecked(
        top.clone(),
        bottom.clone(),
        ker.elements().iter().map(|&k| img.position(r.t().apply(k)).expect("t lands in the objects")).collect(),
    );
    let perms = img
        .elements()
        .iter()
        .map(|&g| ker.elements().iter().map(|&k| ker.position(carrier.conj(g, k)).expect("ker s is normal")).collect())
        .collect();
    let action = Action::new_unchecked(bottom, top, perms);
    CrossedModule::new(boundary, action).expect("a groupoid yields a crossed module")
}

/// `T ⋊ G` with `s(τ, g) = (1, g)` and `t(τ, g) = (1, ∂(τ)g)`.
pub fn xmod_to_cat1(m: &CrossedModule) -> Result<InternalGroupoid> {
    let ext = semidirect_product(m.action());
    let total = ext.total().clone();
    let n = m.top().order();
    let g = m.bottom();
    let s = total.elements().map(|p| n * (p / n)).collect();
    let t = total.elements().map(|p| n * g.mul(m.boundary().apply(p % n), p / n)).collect();
    let r = ReflexiveGraph::new(
        total.clone(),
        GroupHom::new(total.clone(), total.clone(), s)?,
        GroupHom::new(total.clone(), total, t)?,
    )?;
    InternalGroupoid::new(r)
}

/// An isomorphism of reflexive graphs: a carrier isomorphism commuting with
/// `s` and `t`.
pub fn rg_isomorphism(a: &ReflexiveGraph, b: &ReflexiveGraph) -> Option<GroupHom> {
    find_isomorphism_where(a.carrier(), b.carrier(), |f| a.is_graph_morphism(b, f.map()))
}

/// A pair `(f: T → T', h: G → G')` of isomorphisms with `∂'f = h∂` and
/// `f(g·τ) = h(g)·f(τ)`.
pub fn xmod_isomorphism(a: &CrossedModule, b: &CrossedModule) -> Option<(GroupHom, GroupHom)> {
    let tops = isomorphisms(a.top(), b.top());
    if tops.is_empty() {
        return None;
    }
    for h in isomorphisms(a.bottom(), b.bottom()) {
        for f in &tops {
            let square =
                a.top().elements().all(|tau| b.boundary().apply(f.apply(tau)) == h.apply(a.boundary().apply(tau)));
            if !square {
                continue;
            }
            let equivariant = a.bottom().elements().all(|g| {
                a.top()
                    .elements()
                    .all(|tau| f.apply(a.action().apply(g, tau)) == b.action().apply(h.apply(g), f.apply(tau)))
            });
            if equivariant {
                return Some((f.clone(), h));
            }
        }
    }
    None
}

/// `N ↪ G` with `G` acting by conjugation; `sub` must be normal.
pub fn normal_inclusion(sub: &Subgroup) -> Result<CrossedModule> {
    if !sub.is_normal() {
        return Err(Error::NotNormal);
    }
    let g = sub.parent();
    let (top, incl) = sub.materialize();
    let perms = g
        .elements()
        .map(|a| sub.elements().iter().map(|&k| sub.position(g.conj(a, k)).expect("normal")).collect())
        .collect();
    CrossedModule::new(incl, Action::new_unchecked(g.clone(), top, perms))
}

/// `G → Aut(G)` sending an element to its inner automorphism.
pub fn inner_automorphisms(g: &FiniteGroup) -> CrossedModule {
    let auts = automorphism_group(g);
    let inner: Vec<usize> = g
        .elements()
        .map(|a| {
            let p: Vec<usize> = g.elements().map(|x| g.conj(a, x)).collect();
            auts.index_of(&p).expect("inner automorphism")
        })
        .collect();
    let boundary = GroupHom::new_unchecked(g.clone(), auts.group().clone(), inner);
    CrossedModule::new(boundary, auts.evaluation()).expect("inner automorphisms form a crossed module")
}

/// A `G`-module `T` (abelian) with `∂ = 0`.
pub fn module(action: Action) -> Result<CrossedModule> {
    let boundary = GroupHom::zero(action.target(), action.actor());
    CrossedModule::new(boundary, action)
}

/// `∂: T → G` with `G` acting trivially. This is a crossed module exactly when `T`
/// is abelian and `im ∂` is central.
pub fn trivial_action(boundary: GroupHom) -> Result<CrossedModule> {
    let action = Action::trivial(boundary.codomain(), boundary.domain());
    CrossedModule::new(boundary, action)
}

fn normal_of_order(g: &FiniteGroup, order: usize, cyclic: bool) -> Subgroup {
    let pool = if cyclic { all_subgroups(g) } else { normal_subgroups(g) };
    pool.into_iter()
        .find(|s| {
            s.order() == order
                && s.is_normal()
                && (!cyclic || s.elements().iter().any(|&x| g.element_order(x) == order))
        })
        .expect("subgroup of the requested order")
}

/// The bundled crossed modules used for round-trip checks, with labels.
pub fn bundled() -> Vec<(String, CrossedModule)> {
    let s3 = catalog::symmetric3();
    let z2 = catalog::cyclic(2);
    let z3 = catalog::cyclic(3);
    let z4 = catalog::cyclic(4);
    let v4 = catalog::klein4();
    let d4 = catalog::dihedral(4);
    let a4 = catalog::alternating4();
    let one = FiniteGroup::trivial();
    let inversion = Action::new(z2.clone(), z3.clone(), vec![vec![0, 1, 2], vec![0, 2, 1]]).expect("inversion");
    let aut_v4 = automorphism_group(&v4);
    let mod2 = GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).expect("reduction mod 2");
    let built = vec![
        ("1->S3", trivial_action(GroupHom::zero(&one, &s3))),
        ("Z3->1", trivial_action(GroupHom::zero(&z3, &one))),
        ("A3->S3", normal_inclusion(&normal_of_order(&s3, 3, false))),
        ("Z4->D4", normal_inclusion(&normal_of_order(&d4, 4, true))),
        ("V4->A4", normal_inclusion(&normal_of_order(&a4, 4, false))),
        ("S3->Aut(S3)", Ok(inner_automorphisms(&s3))),
        ("Z3->Z2 inversion", module(inversion)),
        ("V4->Aut(V4) zero", module(aut_v4.evaluation())),
        ("Z4->Z2 mod 2", trivial_action(mod2)),
        ("S3->S3 identity", normal_inclusion(&Subgroup::whole(&s3))),
    ];
    built.into_iter().map(|(name, m)| (name.to_string(), m.expect("bundled crossed module is valid"))).collect()
}
