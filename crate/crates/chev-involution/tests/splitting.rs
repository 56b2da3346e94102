use chev_group::ChevalleyGroup;
use chev_involution::{idempotent_of, lift_basis, residue_compatible, split_module, InvolutionError};
use chev_ring::{Mat, Ring};
use chev_roots::SystemType;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn h_a1_m1(ty: SystemType, spec: &str) -> Mat {
    let r = Ring::parse(spec, ty.required_inverses()).unwrap();
    let g = ChevalleyGroup::new(ty, &r).unwrap();
    g.h_gen(g.sys.simple[0], &r.from_i64(-1)).unwrap()
}

/// `1 + X` with `X` entrywise in the maximal ideal.
fn congruence_matrix(r: &Ring, n: usize, seed: u64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Mat::identity(r, n).add(&Mat::from_fn(r, n, n, |_, _| r.random_nonunit(&mut rng)))
}

/// Oracle: over Z/p^k with n < p^k the trace of an idempotent is its rank.
fn trace_rank(e: &Mat) -> usize {
    let r = e.ring();
    let t = (0..e.rows()).fold(r.zero(), |acc, i| r.add(&acc, e.get(i, i)));
    r.format(&t).parse().unwrap()
}

#[test]
fn idempotent_examples() {
    let a = h_a1_m1(SystemType::B2, "zmod:5^2");
    let r = a.ring().clone();
    let e = idempotent_of(&a).unwrap();
    let d: Vec<String> = e.diagonal().iter().map(|v| r.format(v)).collect();
    assert_eq!(d, ["0", "0", "0", "0", "1", "1", "1", "1", "1", "1"]);
    assert!(e.is_diagonal());
    assert!(idempotent_of(&Mat::identity(&r, 4)).unwrap().is_identity());
    assert!(idempotent_of(&Mat::identity(&r, 4).neg()).unwrap().is_zero());
}

#[test]
fn h_a1_minus_one_splits_six_four() {
    for spec in ["zmod:5^2", "zmod:3^2", "zloc:5", "dual:7"] {
        let a = h_a1_m1(SystemType::B2, spec);
        let s = split_module(&a).unwrap();
        assert_eq!((s.rank0, s.rank1), (6, 4), "{spec}");
        assert!(residue_compatible(&a, &s).unwrap());
        assert!(s.basis_matrix().unit_det().is_some());
    }
    let r = Ring::parse("fp:7", &[]).unwrap();
    let s = split_module(&Mat::identity(&r, 14)).unwrap();
    assert_eq!((s.rank0, s.rank1), (14, 0));
}

#[test]
fn rejects_bad_inputs() {
    let r = Ring::parse("zmod:5^2", &[]).unwrap();
    let m = Mat::diag(&r, vec![r.from_i64(2), r.one()]);
    assert_eq!(split_module(&m).unwrap_err(), InvolutionError::NotInvolution);
    let r3 = Ring::parse("zmod:3^2", &[]).unwrap();
    let r2 = Ring::parse("zmod:2^3", &[]).unwrap();
    assert!(matches!(idempotent_of(&Mat::identity(&r2, 2)), Err(InvolutionError::NoHalf(_))));
    let a = Mat::diag(&r3, vec![r3.from_i64(-1), r3.one()]);
    let b = Mat::diag(&r3, vec![r3.one(), r3.from_i64(-1)]);
    assert!(matches!(lift_basis(&a, &b), Err(InvolutionError::ResidueMismatch(2))));
}

#[test]
fn lifting_to_itself_is_trivial() {
    let a = h_a1_m1(SystemType::G2, "zmod:5^2");
    let l = lift_basis(&a, &a).unwrap();
    assert_eq!(l.f0, l.split_a.basis0);
    assert_eq!(l.f1, l.split_a.basis1);
    assert!(l.transition.is_identity());
}

#[test]
fn congruence_conjugates_keep_their_ranks() {
    // 50 pairs over each of Z/9 and Z/25, for both systems.
    for spec in ["zmod:3^2", "zmod:5^2"] {
        for ty in [SystemType::B2, SystemType::G2] {
            if spec == "zmod:3^2" && ty == SystemType::G2 {
                continue;
            }
            let a = h_a1_m1(ty, spec);
            let r = a.ring().clone();
            for seed in 0..50 {
                let g = congruence_matrix(&r, a.rows(), seed);
                let b = g.mul(&a).mul(&g.inverse().unwrap());
                let l = lift_basis(&a, &b).unwrap();
                assert!(l.ranks_match(), "{spec} {ty} seed {seed}");
                assert!(l.transition_is_identity_mod_j);
                assert!(r.is_unit(&l.transition_det));
                let sb = split_module(&b).unwrap();
                assert_eq!(trace_rank(&sb.idempotent), sb.rank0);
                assert!(residue_compatible(&b, &sb).unwrap());
            }
        }
    }
}

#[test]
fn b2_over_z9_conjugate_pair_explicit() {
    // b = g a g⁻¹ with g = x_{a2}(3) ≡ 1 mod 3.
    let r = Ring::parse("zmod:3^2", &[2]).unwrap();
    let gr = ChevalleyGroup::new(SystemType::B2, &r).unwrap();
    let a = gr.h_gen(gr.sys.simple[0], &r.from_i64(-1)).unwrap();
    let g = gr.x_gen(gr.sys.simple[1], &r.from_i64(3)).unwrap();
    assert!(gr.in_congruence(&g));
    let b = g.mul(&a).mul(&g.inverse().unwrap());
    assert_ne!(a, b);
    let l = lift_basis(&a, &b).unwrap();
    assert_eq!((l.ranks_a, l.ranks_b), ((6, 4), (6, 4)));
    assert!(l.transition_is_identity_mod_j);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn splitting_laws(spec in prop::sample::select(vec!["zmod:5^2", "zmod:3^3", "dual:5", "zloc:5"]), k in 0usize..8, seed in any::<u64>()) {
        // A Weyl conjugate of h_{α}(−1) twisted by a congruence element.
        let r = Ring::parse(spec, &[2]).unwrap();
        let gr = ChevalleyGroup::new(SystemType::B2, &r).unwrap();
        let root = gr.sys.all[k];
        let a = gr.h_gen(root, &r.from_i64(-1)).unwrap();
        let g = congruence_matrix(&r, 10, seed).mul(&gr.w_gen(gr.sys.simple[1], &r.one()).unwrap());
        let b = g.mul(&a).mul(&g.inverse().unwrap());
        let s = split_module(&b).unwrap();
        let e = &s.idempotent;
        prop_assert_eq!(e.mul(e), e.clone());
        prop_assert_eq!(s.rank0 + s.rank1, 10);
        prop_assert!(s.basis_matrix().unit_det().is_some());
        for v in &s.basis0 {
            prop_assert_eq!(&e.mat_vec(v), v);
        }
        for v in &s.basis1 {
            prop_assert!(e.mat_vec(v).iter().all(|x| r.is_zero(x)));
        }
        prop_assert!(residue_compatible(&b, &s).unwrap());
    }
}
