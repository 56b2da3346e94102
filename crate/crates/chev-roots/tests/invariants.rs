use std::collections::BTreeSet;

use chev_roots::{inner, RootSystemData, SystemType};
use proptest::prelude::*;

fn systems() -> [RootSystemData; 2] {
    [RootSystemData::new(SystemType::B2), RootSystemData::new(SystemType::G2)]
}

#[test]
fn weyl_group_preserves_the_root_set() {
    for s in systems() {
        for w in s.weyl_enumerate() {
            let image: BTreeSet<usize> = w.perm.iter().copied().collect();
            assert_eq!(image.len(), s.num_roots());
        }
    }
}

#[test]
fn weyl_orbits_are_length_classes() {
    for s in systems() {
        let weyl = s.weyl_enumerate();
        for (i, &r) in s.all.iter().enumerate() {
            let orbit: BTreeSet<usize> = weyl.iter().map(|w| w.perm[i]).collect();
            let same_len: BTreeSet<usize> =
                (0..s.num_roots()).filter(|&j| inner(s.all[j], s.all[j]) == inner(r, r)).collect();
            assert_eq!(orbit, same_len);
        }
    }
}

#[test]
fn positive_roots_are_nonnegative_combinations() {
    for s in systems() {
        for &r in &s.positive {
            let (i, j) = s.simple_coeffs(r);
            assert!(i >= 0 && j >= 0);
        }
        for k in 0..s.num_roots() / 2 {
            assert_eq!(s.all[2 * k + 1], chev_roots::neg(s.all[2 * k]));
        }
    }
}

proptest! {
    #[test]
    fn string_length_matches_pairing(sys in 0usize..2, a in 0usize..12, b in 0usize..12) {
        let s = &systems()[sys];
        let (a, b) = (a % s.num_roots(), b % s.num_roots());
        let (alpha, beta) = (s.all[a], s.all[b]);
        prop_assume!(a / 2 != b / 2);
        let (p, q) = s.root_string(alpha, beta).unwrap();
        prop_assert_eq!(p - q, s.pairing(beta, alpha));
    }

    #[test]
    fn reflection_is_an_involution(sys in 0usize..2, a in 0usize..12, b in 0usize..12) {
        let s = &systems()[sys];
        let (alpha, beta) = (s.all[a % s.num_roots()], s.all[b % s.num_roots()]);
        let r = s.reflect(alpha, beta);
        prop_assert!(s.is_root(r));
        prop_assert_eq!(s.reflect(alpha, r), beta);
    }
}
