use chev_group::{ChevalleyGroup, Frame};
use chev_replay::conditions::{b2_conditions, condition_residual};
use chev_replay::g2::{g2_sanity, g2_sanity_all, G2Status};
use chev_replay::golden::{golden_compare, golden_ring, select_frame, GoldenStatus};
use chev_replay::lemma2::{check_certificate, replay_lemma2};
use chev_replay::runner::{parse_steps, run_steps, Status, Step};
use chev_replay::shapes::{base_mismatch, true_generator, y_count, PATTERN_NAMES, Y_LIST};
use chev_replay::system76::{det76_report, linear_system_76};
use chev_replay::{build_pattern, pattern::Entry};
use chev_ring::Mat;
use chev_roots::SystemType;
use num_traits::Zero;
use proptest::prelude::*;

/// Rank over F_p by plain Gaussian elimination, independent of the ring
/// layer.
fn rank_mod(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = (1..p).find(|b| a[rank][c] * b % p == 1).unwrap();
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c];
                let pivot = a[rank].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn every_pattern_specializes_to_its_generator() {
    for n in PATTERN_NAMES {
        let p = build_pattern(n).unwrap();
        assert!(base_mismatch(&p).unwrap().is_empty(), "{n}");
        assert_eq!(p.specialize(), true_generator(n).unwrap(), "{n}");
    }
}

#[test]
fn printed_entries_of_the_b2_patterns() {
    let xe2 = build_pattern("x_e2").unwrap();
    let e93 = xe2.entry(8, 2);
    assert!(e93.constant.is_zero() && e93.terms.is_empty());
    assert_eq!(xe2.entry(1, 0), &Entry::parse("a1,2").unwrap());
    assert_eq!(xe2.entry(1, 8), &Entry::parse("-a1,9-2a1,10").unwrap());
    let xb = build_pattern("x_e1e2").unwrap();
    assert_eq!(xb.entry(9, 9), &Entry::parse("b9,9+2b9,10").unwrap());
    assert_eq!((y_count(&xe2), y_count(&xb)), (48, 28));
    assert_eq!(Y_LIST.len(), 76);
}

#[test]
fn conditions_hold_at_the_true_generators() {
    // Direct evaluation with the generators themselves, no jets involved.
    let ring = golden_ring(SystemType::B2).unwrap();
    let g = ChevalleyGroup::with_frame(Frame::printed(SystemType::B2), &ring).unwrap();
    let xe2 = g.x_gen(g.sys.parse_root("e2").unwrap(), &ring.one()).unwrap();
    let xb = g.x_gen(g.sys.parse_root("e1+e2").unwrap(), &ring.one()).unwrap();
    let lookup = |n: &str| match n {
        "x_e2" => Some(xe2.clone()),
        "x_e1e2" => Some(xb.clone()),
        _ => None,
    };
    let zero = Mat::zero(&ring, 10, 10);
    for c in b2_conditions(&g) {
        assert_eq!(condition_residual(&g, &c, &lookup).unwrap(), zero, "{}", c.id);
    }
}

#[test]
fn linear_system_has_the_printed_shape_but_not_the_printed_determinant() {
    let s = linear_system_76().unwrap();
    assert!(s.is_square());
    assert!(s.nonzero_constants.is_empty());
    let per: Vec<usize> = ["Con1", "Con2", "Con3", "Con4", "Con5"]
        .iter()
        .map(|c| s.rows.iter().filter(|t| t.condition == *c).count())
        .collect();
    assert_eq!(per, [29, 15, 24, 6, 2]);
    assert_eq!(s.max_abs_entry(), 8);
    assert!(s.det().is_zero());
    assert_eq!(s.rank(), 67);
    for p in [5, 7] {
        assert_eq!(rank_mod(&s.matrix, p), 67, "F_{p}");
        assert_eq!(s.kernel_dim_mod(p as u64).unwrap(), 9);
    }
    // Even every residual entry together misses four directions.
    assert_eq!(rank_mod(&s.all_rows, 5), 72);
    assert_eq!(s.full_rank(), 72);
}

#[test]
fn det76_deficiency_is_explained_by_centralizers() {
    let r = det76_report().unwrap();
    assert!(!r.det_matches);
    assert_eq!((r.rank, r.full_rank, r.full_kernel.len()), (67, 72, 4));
    assert!(r.rank_deficiency_certified());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn kernel_combinations_solve_every_residual(c in proptest::collection::vec(-5i64..=5, 4)) {
        let s = linear_system_76().unwrap();
        let ker = s.full_kernel();
        let v: Vec<i64> = (0..76).map(|k| ker.iter().zip(&c).map(|(u, a)| u[k] * a).sum()).collect();
        for row in &s.all_rows {
            prop_assert_eq!(row.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>(), 0);
        }
    }
}

#[test]
fn lemma2_reaches_every_matrix_unit() {
    let r = replay_lemma2().unwrap();
    assert_eq!(r.seed, vec![(5, 6, -2)]);
    assert!(r.seed_is_minus_2_e56);
    assert_eq!((r.dimension_mod_p, r.dimension_q), (100, 100));
    assert!(r.complete && r.certificate_is_local);
    for k in [0, 45, 56, 99] {
        assert!(check_certificate(&r, k).unwrap(), "unit {k}");
    }
    let failing: Vec<_> = r.claims.iter().filter(|c| !c.holds).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0].claimed, (8, 5));
    assert_eq!(failing[0].actual, vec![(8, 6, -1)]);
}

#[test]
fn g2_sanity_statuses() {
    let all = g2_sanity_all().unwrap();
    for r in &all {
        match r.id.as_str() {
            "Con10" => assert!(matches!(&r.status, G2Status::Fails { positions } if positions.len() == 16)),
            "Con16" => assert!(matches!(r.status, G2Status::Unparseable { .. })),
            id => assert_eq!(r.status, G2Status::Holds, "{id}"),
        }
    }
    // The printed d_2 is h_a2(1/2); the generated h_a2(2) breaks Con7 and Con17.
    assert_eq!(g2_sanity("Con7").unwrap().with_generated_h2, Some(false));
    assert_eq!(g2_sanity("Con17").unwrap().with_generated_h2, Some(false));
    assert_eq!(g2_sanity("Con13").unwrap().with_generated_h2, Some(true));
    assert!(g2_sanity("Con99").is_err());
}

#[test]
fn committed_frames_are_reproduced_by_the_search() {
    for ty in [SystemType::B2, SystemType::G2] {
        assert_eq!(select_frame(ty).unwrap(), Some(Frame::printed(ty)));
    }
}

#[test]
fn golden_statuses() {
    let st = |n: &str| golden_compare(n).unwrap().status;
    for n in ["b2_h_a1_m1", "b2_h_a2_m1", "g2_h_a1_m1", "g2_h_a2_m1"] {
        assert_eq!(st(n), GoldenStatus::Exact, "{n}");
    }
    for n in ["b2_x_e2", "b2_w_a1", "b2_w_e1e2", "g2_x_a1", "g2_x_a2"] {
        assert_eq!(st(n), GoldenStatus::Reconciled, "{n}");
    }
    for n in ["b2_w_e1", "b2_w_e2", "g2_h_a2_2"] {
        assert!(matches!(st(n), GoldenStatus::Quarantined { .. }), "{n}");
    }
    assert!(matches!(&st("b2_w_e1"), GoldenStatus::Quarantined { positions, .. } if positions.len() == 12));
    assert!(golden_compare("nope").is_err());
}

#[test]
fn runner_reports_per_step() {
    assert!(parse_steps("bogus").is_err());
    assert_eq!(parse_steps("all").unwrap().len(), 5);
    let reports = run_steps(&[Step::G2Sanity, Step::Golden, Step::Golden]).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.step.as_str()).collect();
    assert_eq!(names, ["g2-sanity", "golden"]);
    assert_eq!(reports[0].status, Status::Fail);
    assert_eq!(reports[0].details["failing"], serde_json::json!(["Con10"]));
    assert_eq!(reports[0].details["unparseable"], serde_json::json!(["Con16"]));
    assert!(reports[1].passed());
}
