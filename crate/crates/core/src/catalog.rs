//! Bundled small groups.
//!
//! Every isomorphism type of order at most 12, followed by a selection of
//! groups of order 16. The order of [`groups`] is fixed: reports and oracle
//! case lists are merged in this order.

use crate::construct::{direct_product, permutation_group};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;

/// `S3` element indices: permutations of `{1,2,3}` sorted lexicographically.
pub const S3_23: usize = 1;
pub const S3_12: usize = 2;
pub const S3_123: usize = 3;
pub const S3_132: usize = 4;
pub const S3_13: usize = 5;

pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn_unchecked(n, Some(format!("Z{n}")), |a, b| (a + b) % n)
}

pub fn klein4() -> FiniteGroup {
    direct_product(&cyclic(2), &cyclic(2)).with_name("V4")
}

/// Dihedral group of order `2n`: `r^i s^j` at index `i + n·j`.
pub fn dihedral(n: usize) -> FiniteGroup {
    FiniteGroup::from_fn_unchecked(2 * n, Some(format!("D{n}")), |a, b| {
        let (i, j, k, l) = (a % n, a / n, b % n, b / n);
        let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
        rot + n * ((j + l) % 2)
    })
}

/// Dicyclic group of order `4n`: `a^i x^j` with `a^{2n} = 1`, `x² = a^n`,
/// `x a x⁻¹ = a⁻¹`, stored at index `i + 2n·j`.
pub fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n;
    let name = match n {
        2 => "Q8".to_string(),
        4 => "Q16".to_string(),
        _ => format!("Dic{n}"),
    };
    FiniteGroup::from_fn_unchecked(2 * m, Some(name), |a, b| {
        let (i, j, k, l) = (a % m, a / m, b % m, b / m);
        let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
        if j == 1 && l == 1 {
            (rot + n) % m
        } else {
            rot + m * ((j + l) % 2)
        }
    })
}

pub fn quaternion8() -> FiniteGroup {
    dicyclic(2)
}

/// `S3` as permutations of three points; see the `S3_*` constants.
pub fn symmetric3() -> FiniteGroup {
    permutation_group(&[vec![1, 0, 2], vec![1, 2, 0]], "S3").0
}

pub fn alternating4() -> FiniteGroup {
    permutation_group(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], "A4").0
}

/// Sign homomorphism `S3 → Z2` for the group returned by [`symmetric3`].
pub fn sign_hom(s3: &FiniteGroup) -> GroupHom {
    GroupHom::new_unchecked(s3.clone(), cyclic(2), vec![0, 1, 1, 0, 0, 1])
}

fn product_named(parts: &[FiniteGroup], name: &str) -> FiniteGroup {
    let mut it = parts.iter();
    let first = it.next().expect("nonempty").clone();
    it.fold(first, |acc, g| direct_product(&acc, g)).with_name(name)
}

/// The full bundled catalog, in its fixed order.
pub fn groups() -> Vec<FiniteGroup> {
    let z = cyclic;
    vec![
        FiniteGroup::trivial(),
        z(2),
        z(3),
        z(4),
        klein4(),
        z(5),
        z(6),
        symmetric3(),
        z(7),
        z(8),
        product_named(&[z(4), z(2)], "Z4xZ2"),
        product_named(&[z(2), z(2), z(2)], "Z2^3"),
        dihedral(4),
        quaternion8(),
        z(9),
        product_named(&[z(3), z(3)], "Z3xZ3"),
        z(10),
        dihedral(5),
        z(11),
        z(12),
        product_named(&[z(6), z(2)], "Z6xZ2"),
        dihedral(6),
        alternating4(),
        dicyclic(3),
        z(16),
        product_named(&[z(8), z(2)], "Z8xZ2"),
        product_named(&[z(4), z(4)], "Z4xZ4"),
        product_named(&[z(4), z(2), z(2)], "Z4xZ2^2"),
        product_named(&[z(2), z(2), z(2), z(2)], "Z2^4"),
        dihedral(8),
        dicyclic(4),
        product_named(&[quaternion8(), z(2)], "Q8xZ2"),
    ]
}

pub fn groups_up_to(max_order: usize) -> Vec<FiniteGroup> {
    groups().into_iter().filter(|g| g.order() <= max_order).collect()
}

pub fn by_name(name: &str) -> Option<FiniteGroup> {
    groups().into_iter().find(|g| g.name() == Some(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homsearch::are_isomorphic;

    #[test]
    fn every_catalog_group_is_a_group() {
        for g in groups() {
            assert!(g.check_axioms().is_ok(), "{g:?}");
        }
    }

    #[test]
    fn catalog_up_to_12_is_pairwise_non_isomorphic_and_complete() {
        let small = groups_up_to(12);
        // number of isomorphism types of each order 1..=12
        let counts = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5];
        for (i, &c) in counts.iter().enumerate() {
            assert_eq!(small.iter().filter(|g| g.order() == i + 1).count(), c, "order {}", i + 1);
        }
        for (i, g) in small.iter().enumerate() {
            for h in &small[i + 1..] {
                assert!(!are_isomorphic(g, h), "{g:?} ~ {h:?}");
            }
        }
        let order16: Vec<_> = groups().into_iter().filter(|g| g.order() == 16).collect();
        for (i, g) in order16.iter().enumerate() {
            for h in &order16[i + 1..] {
                assert!(!are_isomorphic(g, h), "{g:?} ~ {h:?}");
            }
        }
    }

    #[test]
    fn s3_constants() {
        let s3 = symmetric3();
        assert_eq!(s3.element_order(S3_12), 2);
        assert_eq!(s3.element_order(S3_123), 3);
        assert_eq!(s3.mul(S3_123, S3_123), S3_132);
        assert!(!s3.commutes(S3_12, S3_13));
        assert!(sign_hom(&s3).is_homomorphism());
        assert!(!are_isomorphic(&s3, &cyclic(6)));
        assert!(are_isomorphic(&s3, &dihedral(3)));
    }
}
