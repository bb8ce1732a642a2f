//! Direct products, quotients and permutation-group realizations.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::subgroup::Subgroup;

/// `G × H` with `(g, h)` stored at index `g + |G|·h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let n = g.order();
    let name = match (g.name(), h.name()) {
        (Some(a), Some(b)) => Some(format!("{a}x{b}")),
        _ => None,
    };
    FiniteGroup::from_fn_unchecked(n * h.order(), name, |a, b| g.mul(a % n, b % n) + n * h.mul(a / n, b / n))
}

/// Projections and injections of `direct_product(g, h)`.
pub struct ProductMaps {
    pub product: FiniteGroup,
    pub first: GroupHom,
    pub second: GroupHom,
    pub inject_first: GroupHom,
    pub inject_second: GroupHom,
}

pub fn direct_product_maps(g: &FiniteGroup, h: &FiniteGroup) -> ProductMaps {
    let p = direct_product(g, h);
    let n = g.order();
    ProductMaps {
        first: GroupHom::new_unchecked(p.clone(), g.clone(), p.elements().map(|a| a % n).collect()),
        second: GroupHom::new_unchecked(p.clone(), h.clone(), p.elements().map(|a| a / n).collect()),
        inject_first: GroupHom::new_unchecked(g.clone(), p.clone(), g.elements().collect()),
        inject_second: GroupHom::new_unchecked(h.clone(), p.clone(), h.elements().map(|b| b * n).collect()),
        product: p,
    }
}

/// `G/N` on coset representatives (least element of each coset, in
/// increasing order), with the projection.
pub fn quotient(n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let g = n.parent();
    let mut coset = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset[x] == usize::MAX {
            for &m in n.elements() {
                coset[g.mul(x, m)] = reps.len();
            }
            reps.push(x);
        }
    }
    let name = g.name().map(|nm| format!("{nm}/{}", n.order()));
    let q = FiniteGroup::from_fn_unchecked(reps.len(), name, |a, b| coset[g.mul(reps[a], reps[b])]);
    let proj = GroupHom::new_unchecked(g.clone(), q.clone(), coset);
    Ok((q, proj))
}

/// The permutation group generated by `gens` (all of the same degree).
/// Elements are indexed in lexicographic order of their images, so the
/// identity permutation is `0`. Product is composition: `(p·q)(i) = p(q(i))`.
pub fn permutation_group(gens: &[Vec<usize>], name: &str) -> (FiniteGroup, Vec<Vec<usize>>) {
    let degree = gens.first().map_or(0, Vec::len);
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::from([(identity, ())]);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let p: Vec<usize> = g.iter().map(|&v| elements[i][v]).collect();
            if seen.insert(p.clone(), ()).is_none() {
                elements.push(p);
            }
        }
        i += 1;
    }
    elements.sort();
    let index: HashMap<&Vec<usize>, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let group = FiniteGroup::from_fn_unchecked(elements.len(), Some(name.to_string()), |a, b| {
        let p: Vec<usize> = elements[b].iter().map(|&v| elements[a][v]).collect();
        index[&p]
    });
    (group, elements)
}
