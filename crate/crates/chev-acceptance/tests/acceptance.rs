//! One line per acceptance criterion. Criteria 1, 7 and 8 are expected to
//! FAIL: the target checks that they fail for the documented reason and that
//! everything else passes, and exits non-zero on any other outcome.

use std::process::ExitCode;
use std::time::Instant;

use chev_acceptance::*;
use chev_auto::{ring_auto_apply, torus_commutant_shape, RingAuto};
use chev_group::{check_steinberg, solve_commutator_constants, ChevalleyGroup, Exec};
use chev_involution::{lift_basis, split_module};
use chev_replay::fixtures::fixture;
use chev_replay::g2::{g2_sanity_all, G2Status};
use chev_replay::golden::{golden_compare, golden_ring, GoldenStatus};
use chev_replay::lemma2::replay_lemma2;
use chev_replay::runner::{run_step, Step};
use chev_replay::system76::{det76_report, linear_system_76};
use chev_ring::{Mat, Ring};
use chev_roots::SystemType;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TYPES: [SystemType; 2] = [SystemType::B2, SystemType::G2];
const SEED: u64 = 2024;

/// Verdict plus whether the outcome is the frozen one (including, for the
/// failing criteria, the blocking certificate).
type Outcome = (Verdict, bool);

/// Determinant of an integer matrix modulo a prime, by elimination in i128.
fn det_mod(m: &[Vec<i64>], p: i128) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| (x as i128).rem_euclid(p)).collect()).collect();
    let mut det = 1i128;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| a[i][c] != 0) else { return 0 };
        if piv != c {
            a.swap(piv, c);
            det = (p - det) % p;
        }
        det = det * a[c][c] % p;
        let inv = pow_mod(a[c][c], p - 2, p);
        for i in c + 1..n {
            let f = a[i][c] * inv % p;
            if f != 0 {
                for j in c..n {
                    a[i][j] = (a[i][j] - f * a[c][j]).rem_euclid(p);
                }
            }
        }
    }
    det
}

fn pow_mod(mut b: i128, mut e: i128, p: i128) -> i128 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank of a matrix over F_p.
fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(piv, rank);
        let inv = pow_mod(a[rank][c] as i128, (p - 2) as i128, p as i128) as i64;
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c] * inv % p;
                for j in c..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let s = linear_system_76().unwrap();
    let rep = det76_report().unwrap();
    let elapsed = t.elapsed();
    let max = s.matrix.iter().flatten().map(|x| x.abs()).max().unwrap();
    let square = s.matrix.len() == 76 && s.matrix.iter().all(|r| r.len() == 76);
    let target = 1i128 << DET76_LOG2;
    // Oracle: the determinant modulo two large primes, where ±2^36 is non-zero.
    let primes = [1_000_000_007i128, 998_244_353];
    let dets: Vec<i128> = primes.iter().map(|&p| det_mod(&s.matrix, p)).collect();
    let oracle_matches = primes.iter().zip(&dets).all(|(&p, &d)| d == target % p || d == p - target % p);
    let pass = square && max <= DET76_MAX_ENTRY && rep.det_matches && oracle_matches && elapsed < DET76_BUDGET;
    let summary = format!(
        "76×76 max |entry| {max} (≤ {DET76_MAX_ENTRY}), det {} (want ±2^{DET76_LOG2}), rank {}, det mod p {:?}, {:.2?}",
        rep.det, rep.rank, dets, elapsed
    );
    // Blocking certificate: a 9-dimensional kernel over Q, F_5 and F_7, and
    // every missing direction of the full system explained by a symmetry.
    let frozen = !pass
        && rep.det == "0"
        && dets == [0, 0]
        && (rep.rank, rep.kernel_dim, rep.kernel_dim_f5, rep.kernel_dim_f7) == (67, 9, 9, 9)
        && rank_mod(&s.matrix, 5) == 67
        && rep.full_rank == 72
        && rep.rank_deficiency_certified();
    (Verdict::new(1, pass, summary), frozen)
}

fn criterion_2() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for name in ["b2_h_a1_m1", "b2_h_a2_m1", "g2_h_a1_m1", "g2_h_a2_m1"] {
        let ty = if name.starts_with("b2") { SystemType::B2 } else { SystemType::G2 };
        let r = golden_ring(ty).unwrap();
        let g = ChevalleyGroup::new(ty, &r).unwrap();
        let alpha = g.sys.simple[if name.contains("a1") { 0 } else { 1 }];
        // Oracle: (−1)^{⟨β,α⟩} on x_β, 1 on the Cartan part.
        let expect: Vec<i64> = (0..g.n())
            .map(|k| if k < g.sys.num_roots() && g.sys.pairing(g.sys.all[k], alpha) % 2 != 0 { -1 } else { 1 })
            .collect();
        let printed = fixture(name).unwrap().to_mat(&r).unwrap();
        let oracle = Mat::diag(&r, expect.iter().map(|&e| r.from_i64(e)).collect());
        let generated = g.h_gen(alpha, &r.from_i64(-1)).unwrap();
        let exact = matches!(golden_compare(name).unwrap().status, GoldenStatus::Exact);
        let this = printed == oracle && generated == printed && exact;
        ok &= this;
        notes.push(format!("{name} {}", if this { "exact" } else { "differs" }));
    }
    (Verdict::new(2, ok, notes.join(", ")), ok)
}

fn criterion_3() -> Outcome {
    let rep = run_step(Step::Golden).unwrap();
    let status = |n: &str| golden_compare(n).unwrap().status;
    let quarantined = |n: &str| matches!(status(n), GoldenStatus::Quarantined { .. });
    let b2_ok = matches!(status("b2_x_e2"), GoldenStatus::Exact | GoldenStatus::Reconciled);
    let g2 = ["g2_x_a1", "g2_x_a2", "g2_h_a2_2"];
    let clean: Vec<&str> = g2.iter().copied().filter(|n| !quarantined(n)).collect();
    let diag_clean = ["b2_h_a1_m1", "b2_h_a2_m1", "g2_h_a1_m1", "g2_h_a2_m1"].iter().all(|n| !quarantined(n));
    let pass = rep.passed() && b2_ok && diag_clean && clean.len() >= 2;
    let q: Vec<&str> = g2.iter().copied().filter(|n| quarantined(n)).collect();
    let summary = format!("b2_x_e2 reconciled: {b2_ok}; G2 clean {clean:?}, quarantined {q:?}; diagonals clean: {diag_clean}");
    (Verdict::new(3, pass, summary), pass)
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let mut ok = true;
    let mut bad = Vec::new();
    let mut checked = 0;
    for ty in TYPES {
        // R2 constants: the same integers on every one of R2_DRAWS unit pairs.
        let zloc = Ring::parse("zloc:5", ty.required_inverses()).unwrap();
        let (_, unstable) = solve_commutator_constants(&ChevalleyGroup::new(ty, &zloc).unwrap(), R2_DRAWS, SEED).unwrap();
        ok &= unstable.is_empty();
        bad.extend(unstable);
        for spec in STEINBERG_RINGS {
            let r = Ring::parse(spec, ty.required_inverses()).unwrap();
            let g = ChevalleyGroup::new(ty, &r).unwrap();
            let rep = check_steinberg(&g, STEINBERG_SAMPLES, SEED, Exec::Parallel).unwrap();
            checked += rep.relations.iter().map(|x| x.checked).sum::<usize>();
            for rel in rep.relations.iter().filter(|x| !x.failures.is_empty()) {
                bad.push(format!("{ty} {spec} {}", rel.relation));
            }
            ok &= rep.all_pass() && rep.relations.len() == 6;
        }
    }
    let elapsed = t.elapsed();
    let pass = ok && elapsed < STEINBERG_BUDGET;
    let summary = format!(
        "R1–R6 over {STEINBERG_RINGS:?} × {{b2, g2}}, {STEINBERG_SAMPLES} draws: {checked} identities, failures {bad:?}, {elapsed:.2?} (< {:?})",
        STEINBERG_BUDGET
    );
    (Verdict::new(4, pass, summary), pass)
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let rep = replay_lemma2().unwrap();
    let elapsed = t.elapsed();
    let pass = rep.seed == [(5, 6, -2)]
        && rep.seed_is_minus_2_e56
        && rep.complete
        && rep.dimension_q == LEMMA2_UNITS
        && rep.dimension_mod_p == LEMMA2_UNITS
        && rep.certificate.len() == LEMMA2_UNITS
        && rep.certificate_is_local
        && elapsed < LEMMA2_BUDGET;
    let summary = format!(
        "seed {:?}, span {}/{LEMMA2_UNITS} over Q and mod 5, certificate local: {}, {elapsed:.2?}",
        rep.seed, rep.dimension_q, rep.certificate_is_local
    );
    (Verdict::new(5, pass, summary), pass)
}

fn criterion_6() -> Outcome {
    let r25 = Ring::parse("zmod:5^2", &[2]).unwrap();
    let g = ChevalleyGroup::new(SystemType::B2, &r25).unwrap();
    let a = g.h_gen(g.sys.simple[0], &r25.from_i64(-1)).unwrap();
    let s = split_module(&a).unwrap();
    let mut ok = (s.rank0, s.rank1) == (6, 4);
    let mut pairs = 0;
    for spec in ["zmod:3^2", "zmod:5^2"] {
        let r = Ring::parse(spec, &[2]).unwrap();
        let g = ChevalleyGroup::new(SystemType::B2, &r).unwrap();
        let a = g.h_gen(g.sys.simple[0], &r.from_i64(-1)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut seed = 0;
        while seed < SPLIT_PAIRS {
            // A random element of the congruence subgroup: 1 + (radical).
            let c = Mat::identity(&r, 10).add(&Mat::from_fn(&r, 10, 10, |_, _| r.random_nonunit(&mut rng)));
            seed += 1;
            let Ok(ci) = c.inverse() else { continue };
            let b = c.mul(&a).mul(&ci);
            let l = lift_basis(&a, &b).unwrap();
            ok &= l.ranks_match() && l.transition_is_identity_mod_j;
            pairs += 1;
        }
    }
    ok &= pairs == 2 * SPLIT_PAIRS;
    let summary = format!("h_a1(-1) over Z/25 splits ({}, {}); rank equality on {pairs} conjugate pairs over Z/9, Z/25", s.rank0, s.rank1);
    (Verdict::new(6, ok, summary), ok)
}

fn criterion_7() -> Outcome {
    let patterns = run_step(Step::Patterns).unwrap();
    let rep = det76_report().unwrap();
    let unique = rep.kernel_dim_f5 == 0 && rep.kernel_dim_f7 == 0;
    let pass = patterns.passed() && rep.nonzero_constants == 0 && unique;
    let summary = format!(
        "patterns specialize and Con1–Con5 constants vanish: {}; kernel over F5 {}, over F7 {} (want 0)",
        patterns.passed(),
        rep.kernel_dim_f5,
        rep.kernel_dim_f7
    );
    // Blocking: the specialization half holds; uniqueness fails with the
    // same 9-dimensional kernel as criterion 1.
    let frozen = !pass && patterns.passed() && rep.nonzero_constants == 0 && (rep.kernel_dim_f5, rep.kernel_dim_f7) == (9, 9);
    (Verdict::new(7, pass, summary), frozen)
}

fn criterion_8() -> Outcome {
    let reports = g2_sanity_all().unwrap();
    let ids = |f: fn(&G2Status) -> bool| -> Vec<String> {
        reports.iter().filter(|r| f(&r.status)).map(|r| r.id.clone()).collect()
    };
    let failing = ids(|s| matches!(s, G2Status::Fails { .. }));
    let unparseable = ids(|s| matches!(s, G2Status::Unparseable { .. }));
    let holding = ids(|s| matches!(s, G2Status::Holds));
    let pass = failing.is_empty() && unparseable == G2_UNPARSEABLE;
    let printed_holding = holding.iter().filter(|id| !id.ends_with('\'')).count();
    let summary = format!(
        "{printed_holding} printed conditions hold, failing {failing:?}, unparseable {unparseable:?}; alternative readings holding: {:?}",
        holding.iter().filter(|id| id.ends_with('\'')).collect::<Vec<_>>()
    );
    // Blocking: Con10 as printed fails; its corrected reading Con10' holds.
    let frozen = !pass
        && failing == ["Con10"]
        && unparseable == G2_UNPARSEABLE
        && printed_holding == 10
        && ["Con10'", "Con16'"].iter().all(|id| holding.iter().any(|h| h == id));
    (Verdict::new(8, pass, summary), frozen)
}

/// Oracle: the commutant of the F_7 torus as the nullspace of `XH = HX` for
/// every `h_{αi}(t)`, by plain elimination on the n² unknowns.
fn commutant_oracle(g: &ChevalleyGroup) -> (usize, Vec<(usize, usize)>) {
    let r = g.ring();
    let n = g.n();
    let entry = |m: &Mat, i: usize, j: usize| -> i64 { r.format(m.get(i, j)).parse().unwrap() };
    let mut rows = Vec::new();
    for &a in &g.sys.simple {
        for t in 1..7 {
            let h = g.h_gen(a, &r.from_i64(t)).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let mut row = vec![0i64; n * n];
                    for k in 0..n {
                        row[i * n + k] += entry(&h, k, j);
                        row[k * n + j] -= entry(&h, i, k);
                    }
                    rows.push(row);
                }
            }
        }
    }
    let dim = n * n - rank_mod(&rows, 7);
    // Matrix units in the kernel.
    let units = (0..n * n).filter(|&u| rows.iter().all(|row| row[u].rem_euclid(7) == 0)).map(|u| (u / n + 1, u % n + 1)).collect();
    (dim, units)
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    for ty in TYPES {
        for (spec, rho) in [("dual:5", RingAuto::DualScale(2)), ("dual:5", RingAuto::DualScale(4)), ("fp2:5", RingAuto::Frobenius)] {
            let r = Ring::parse(spec, ty.required_inverses()).unwrap();
            let g = ChevalleyGroup::new(ty, &r).unwrap();
            for &a in &g.sys.all {
                for _ in 0..20 {
                    let t = r.random(&mut rng);
                    let img = ring_auto_apply(rho, &g.x_gen(a, &t).unwrap()).unwrap();
                    ok &= img == g.x_gen(a, &rho.apply(&r, &t).unwrap()).unwrap();
                    checked += 1;
                }
            }
        }
    }
    let f7 = Ring::parse("fp:7", &[2, 3]).unwrap();
    let mut dims = Vec::new();
    for ty in TYPES {
        let shape = torus_commutant_shape(ty, &f7).unwrap();
        let g = ChevalleyGroup::new(ty, &f7).unwrap();
        let (dim, units) = commutant_oracle(&g);
        // Spanned by matrix units: the unit count equals the dimension.
        ok &= shape.block_split && shape.root_block_diagonal && shape.cartan_block_full;
        ok &= dim == shape.dimension && units.len() == dim && units == shape.free_positions;
        dims.push(format!("{ty} dim {}", shape.dimension));
    }
    let summary = format!("covariance on {checked} dual/F25 draws; F7 torus commutant block split, oracle agrees ({})", dims.join(", "));
    (Verdict::new(9, ok, summary), ok)
}

fn main() -> ExitCode {
    // Pinned expectation: criteria 1, 7 and 8 fail (see the ledger).
    const EXPECTED: [bool; 9] = [false, true, true, true, true, true, false, false, true];
    let checks: [fn() -> Outcome; 9] =
        [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9];
    let mut unexpected = Vec::new();
    for (k, check) in checks.iter().enumerate() {
        let (v, frozen) = check();
        println!("{v}");
        if v.pass != EXPECTED[k] || !frozen {
            unexpected.push(v.id);
        }
    }
    let passed = checks.len() - EXPECTED.iter().filter(|&&p| !p).count();
    println!("acceptance: {passed}/9 PASS as frozen; unexpected outcomes: {unexpected:?}");
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
