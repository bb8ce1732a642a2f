use proptest::prelude::*;

use grpact::catalog;
use grpact::construct::{direct_product, quotient};
use grpact::homsearch::{are_isomorphic, automorphism_group, homomorphisms};
use grpact::io;
use grpact::lattice::{all_subgroups, huq_commutator, join, normal_subgroups};
use grpact::splitext::{product_extension, semidirect_product};
use grpact::{FiniteGroup, Subgroup};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    let groups = catalog::groups_up_to(12);
    (0..groups.len()).prop_map(move |i| groups[i].clone())
}

fn group_with_two_subgroups() -> impl Strategy<Value = (Subgroup, Subgroup)> {
    small_group().prop_flat_map(|g| {
        let subs = all_subgroups(&g);
        let n = subs.len();
        (0..n, 0..n).prop_map(move |(i, j)| (subs[i].clone(), subs[j].clone()))
    })
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn huq_commutator_is_symmetric_and_normal((a, b) in group_with_two_subgroups()) {
        let ab = huq_commutator(&a, &b);
        prop_assert_eq!(&ab, &huq_commutator(&b, &a));
        prop_assert!(ab.is_normal());
        prop_assert!(ab.is_subset_of(&huq_commutator(&join(&a, &b), &Subgroup::whole(a.parent()))));
    }

    #[test]
    fn huq_commutator_is_monotone((a, b) in group_with_two_subgroups()) {
        let g = a.parent();
        let whole = Subgroup::whole(g);
        prop_assert!(huq_commutator(&a, &b).is_subset_of(&huq_commutator(&whole, &b)));
        prop_assert!(huq_commutator(&a, &Subgroup::trivial(g)).is_trivial());
    }

    #[test]
    fn first_isomorphism_theorem(g in small_group(), h in small_group(), pick in any::<prop::sample::Index>()) {
        let homs = homomorphisms(&g, &h);
        let f = &homs[pick.index(homs.len())];
        let ker = f.kernel();
        let img = f.image();
        prop_assert!(ker.is_normal());
        prop_assert_eq!(g.order(), ker.order() * img.order());
        let (q, _) = quotient(&ker).unwrap();
        let (im, _) = img.materialize();
        prop_assert!(are_isomorphic(&q, &im));
    }

    #[test]
    fn group_text_round_trips(g in small_group()) {
        let text = io::write_group_string(&g);
        let back = io::parse_group(&text).unwrap();
        prop_assert_eq!(io::write_group_string(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn quotients_are_groups(g in small_group(), pick in any::<prop::sample::Index>()) {
        let normals = normal_subgroups(&g);
        let n = &normals[pick.index(normals.len())];
        let (q, proj) = quotient(n).unwrap();
        prop_assert!(q.check_axioms().is_ok());
        prop_assert_eq!(proj.kernel(), n.clone());
        prop_assert!(proj.is_surjective());
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn semidirect_products_are_valid(xi in 0usize..8, bi in 0usize..8, pick in any::<prop::sample::Index>()) {
        let groups = catalog::groups_up_to(6);
        let (x, b) = (&groups[xi], &groups[bi]);
        let auts = automorphism_group(x);
        let actions = auts.actions_of(b);
        let act = &actions[pick.index(actions.len())];
        let e = semidirect_product(act);
        prop_assert!(e.total().check_axioms().is_ok());
        prop_assert_eq!(e.total().order(), x.order() * b.order());
        prop_assert_eq!(&e.action(), act);
    }

    #[test]
    fn trivial_action_gives_direct_product(xi in 0usize..8, bi in 0usize..8) {
        let groups = catalog::groups_up_to(6);
        let (x, b) = (&groups[xi], &groups[bi]);
        prop_assert!(are_isomorphic(product_extension(x, b).total(), &direct_product(x, b)));
    }
}
