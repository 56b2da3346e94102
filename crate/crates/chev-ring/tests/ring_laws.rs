use chev_ring::linalg::{bareiss_det, rank_q};
use chev_ring::{Mat, Ring, Value, Q};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SPECS: &[&str] = &["zmod:5^2", "zmod:3^3", "zloc:5", "fp:7", "dual:5", "fp2:7", "jet:4"];

fn triple(r: &Ring, seed: u64) -> [Value; 3] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    [r.random(&mut rng), r.random(&mut rng), r.random(&mut rng)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutative_ring_axioms(spec in prop::sample::select(SPECS.to_vec()), seed in any::<u64>()) {
        let r = Ring::parse(spec, &[]).unwrap();
        let [a, b, c] = triple(&r, seed);
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
        prop_assert_eq!(r.add(&a, &r.neg(&a)), r.zero());
        prop_assert_eq!(r.mul(&a, &r.one()), a.clone());
    }

    #[test]
    fn units_are_exactly_the_invertible_elements(spec in prop::sample::select(SPECS.to_vec()), seed in any::<u64>()) {
        let r = Ring::parse(spec, &[]).unwrap();
        let [a, _, _] = triple(&r, seed);
        match r.try_inv(&a) {
            Some(i) => {
                prop_assert!(r.is_unit(&a));
                prop_assert!(r.is_one(&r.mul(&a, &i)));
            }
            None => prop_assert!(!r.is_unit(&a)),
        }
        // Local: a non-unit plus a unit is a unit.
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        let m = r.random_nonunit(&mut rng);
        prop_assert!(!r.is_unit(&m));
        prop_assert!(r.is_unit(&r.add(&m, &r.one())));
    }

    #[test]
    fn residue_map_is_a_homomorphism(spec in prop::sample::select(SPECS.to_vec()), seed in any::<u64>()) {
        let r = Ring::parse(spec, &[]).unwrap();
        let k = r.residue_ring();
        let [a, b, _] = triple(&r, seed);
        prop_assert_eq!(r.residue(&r.mul(&a, &b)), k.mul(&r.residue(&a), &r.residue(&b)));
        prop_assert_eq!(r.residue(&r.add(&a, &b)), k.add(&r.residue(&a), &r.residue(&b)));
    }

    #[test]
    fn format_parses_back(spec in prop::sample::select(SPECS.to_vec()), seed in any::<u64>()) {
        let r = Ring::parse(spec, &[]).unwrap();
        let [a, _, _] = triple(&r, seed);
        prop_assert_eq!(r.parse_elem(&r.format(&a)).unwrap(), a);
    }

    #[test]
    fn inverse_matrix_over_local_rings(spec in prop::sample::select(vec!["zmod:5^2", "zloc:5", "dual:5"]), seed in any::<u64>()) {
        let r = Ring::parse(spec, &[]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Unit diagonal plus radical entries: always invertible.
        let m = Mat::from_fn(&r, 4, 4, |i, j| {
            if i == j { r.random_unit(&mut rng) } else if i < j { r.random(&mut rng) } else { r.random_nonunit(&mut rng) }
        });
        let inv = m.inverse().unwrap();
        prop_assert!(m.mul(&inv).is_identity());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(m in proptest::collection::vec(proptest::collection::vec(-9i64..=9, 4), 4)) {
        fn cofactor(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> =
                        m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| *x).collect()).collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * cofactor(&minor)
                })
                .sum()
        }
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let d = cofactor(&m);
        prop_assert_eq!(bareiss_det(&big), BigInt::from(d));
        let q: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
        prop_assert_eq!(rank_q(&q) == 4, d != 0);
    }
}

#[test]
fn fp2_has_p_squared_elements_all_nonzero_invertible() {
    let r = Ring::parse("fp2:7", &[]).unwrap();
    let els = r.elements().unwrap();
    assert_eq!(els.len(), 49);
    assert!(els.iter().filter(|a| !r.is_zero(a)).all(|a| r.is_unit(a)));
}
