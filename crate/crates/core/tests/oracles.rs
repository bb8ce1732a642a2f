//! Cross-checks of the pruned morphism searches against plain enumeration of
//! every pair of homomorphisms.

use grpact::catalog;
use grpact::homsearch::{automorphism_group, homomorphisms};
use grpact::rgraph::{rg_classifier, rg_fiber, rg_morphisms, rg_structures, RGSplitExtension};
use grpact::splitext::{
    fiber_extensions, generic_split_extension, morphisms_between, product_extension, SplitExtension,
};
use grpact::FiniteGroup;

/// All `(v, w)` with `vκ = κ'`, `α'v = wα`, `vβ = β'w`, by scanning
/// `Hom(B, B') × Hom(A, A')`.
fn brute_force_morphisms(e: &SplitExtension, e2: &SplitExtension) -> Vec<(Vec<usize>, Vec<usize>)> {
    let ws = homomorphisms(e.base(), e2.base());
    let vs = homomorphisms(e.total(), e2.total());
    let mut out = Vec::new();
    for w in &ws {
        for v in &vs {
            let kernel_ok = e.kernel().elements().all(|x| v.apply(e.kappa().apply(x)) == e2.kappa().apply(x));
            let alpha_ok = e.total().elements().all(|a| e2.alpha().apply(v.apply(a)) == w.apply(e.alpha().apply(a)));
            let beta_ok = e.base().elements().all(|b| v.apply(e.beta().apply(b)) == e2.beta().apply(w.apply(b)));
            if kernel_ok && alpha_ok && beta_ok {
                out.push((w.map().to_vec(), v.map().to_vec()));
            }
        }
    }
    out.sort();
    out
}

fn brute_force_rg_morphisms(e: &RGSplitExtension, e2: &RGSplitExtension) -> Vec<(Vec<usize>, Vec<usize>)> {
    brute_force_morphisms(e.extension(), e2.extension())
        .into_iter()
        .filter(|(w, v)| {
            e.base_graph().is_graph_morphism(e2.base_graph(), w)
                && e.total_graph().is_graph_morphism(e2.total_graph(), v)
        })
        .collect()
}

fn searched(e: &SplitExtension, e2: &SplitExtension) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out: Vec<_> =
        morphisms_between(e, e2).unwrap().into_iter().map(|m| (m.w.map().to_vec(), m.v.map().to_vec())).collect();
    out.sort();
    out
}

#[test]
fn split_extension_search_matches_enumeration() {
    let bases = catalog::groups_up_to(4);
    for x in [catalog::cyclic(2), catalog::cyclic(3), catalog::klein4()] {
        let auts = automorphism_group(&x);
        let fiber = fiber_extensions(&auts, &bases);
        let targets: Vec<SplitExtension> = vec![
            generic_split_extension(&x),
            product_extension(&x, &catalog::cyclic(2)),
            fiber.last().unwrap().extension.clone(),
        ];
        for case in &fiber {
            for t in &targets {
                assert_eq!(
                    searched(&case.extension, t),
                    brute_force_morphisms(&case.extension, t),
                    "{} over {} #{}",
                    x.label(),
                    case.base,
                    case.action_index
                );
            }
        }
    }
}

#[test]
fn generic_extension_counts_by_enumeration() {
    // Exactly one morphism into Aut(X) ⋉ X from each case, counted without
    // any pruning.
    let bases = catalog::groups_up_to(4);
    for x in [catalog::cyclic(3), catalog::klein4()] {
        let target = generic_split_extension(&x);
        for case in fiber_extensions(&automorphism_group(&x), &bases) {
            assert_eq!(brute_force_morphisms(&case.extension, &target).len(), 1, "{} {}", x.label(), case.base);
        }
    }
}

#[test]
fn graph_search_matches_enumeration() {
    let bases: Vec<FiniteGroup> = catalog::groups_up_to(3);
    let mut checked = 0;
    for g in catalog::groups_up_to(3) {
        for x in rg_structures(&g) {
            let classifier = rg_classifier(&x).extension;
            if classifier.total_graph().carrier().order() > 24 {
                continue;
            }
            for case in rg_fiber(&x, &bases) {
                let mut fast = rg_morphisms(&case.extension, &classifier).unwrap();
                fast.sort();
                let slow = brute_force_rg_morphisms(&case.extension, &classifier);
                assert_eq!(fast, slow, "{x:?} from {} [{}] #{}", case.base, case.structure, case.action_index);
                assert_eq!(slow.len(), 1);
                checked += 1;
            }
        }
    }
    assert!(checked > 20, "{checked}");
}
