use chev_group::{check_steinberg, ChevalleyGroup, Exec, Frame, GroupWord};
use chev_ring::{Mat, Ring, Value};
use chev_roots::{add, neg, scale, SystemType};
use proptest::prelude::*;

const TYPES: [SystemType; 2] = [SystemType::B2, SystemType::G2];

fn group(ty: SystemType, spec: &str) -> ChevalleyGroup {
    ChevalleyGroup::new(ty, &Ring::parse(spec, ty.required_inverses()).unwrap()).unwrap()
}

#[test]
fn generators_have_unit_determinant_and_w_has_order_four() {
    for ty in TYPES {
        let g = group(ty, "zmod:5^2");
        let r = g.ring().clone();
        for &a in &g.sys.all {
            let x = g.x_gen(a, &r.from_i64(7)).unwrap();
            assert!(r.is_one(&x.unit_det().unwrap()));
            let w = g.w_gen(a, &r.one()).unwrap();
            assert_eq!(w.mul(&w), g.h_gen(a, &r.from_i64(-1)).unwrap());
            assert!(w.pow(4).is_identity());
        }
    }
}

#[test]
fn h_is_the_torus_element_of_its_character() {
    for ty in TYPES {
        let g = group(ty, "zloc:5");
        let r = g.ring().clone();
        for &a in &g.sys.all {
            let u = r.from_frac(3, 7).unwrap();
            let chi = g.character_of(a, &u).unwrap();
            let h = g.h_gen(a, &u).unwrap();
            assert_eq!(h, g.torus_element(&chi).unwrap());
            assert_eq!(h.inverse().unwrap(), g.torus_element(&g.inverse_character(&chi).unwrap()).unwrap());
            // χ(β) = u^{⟨β,α⟩} on every root position.
            for (k, &b) in g.sys.all.iter().enumerate() {
                assert_eq!(h.get(k, k), &r.pow(&u, g.sys.pairing(b, a)).unwrap());
            }
        }
    }
}

#[test]
fn b2_h_a1_minus_one_diagonal() {
    let g = group(SystemType::B2, "fp:5");
    let r = g.ring().clone();
    let h = g.h_gen(g.sys.simple[0], &r.from_i64(-1)).unwrap();
    let d: Vec<String> = h.diagonal().iter().map(|v| r.format(v)).collect();
    assert!(h.is_diagonal());
    assert_eq!(d, ["4", "4", "4", "4", "1", "1", "1", "1", "1", "1"]);
}

#[test]
fn framed_generators_follow_the_frame_formula() {
    // X_β(t) = D x_β(ε_β t) D⁻¹, checked against the native generators.
    for ty in TYPES {
        let r = Ring::parse("zloc:5", ty.required_inverses()).unwrap();
        let native = ChevalleyGroup::with_frame(Frame::native(ty), &r).unwrap();
        let f = Frame::printed(ty);
        let framed = ChevalleyGroup::with_frame(f.clone(), &r).unwrap();
        let dv: Vec<i64> = f.diagonal(&native.sys);
        let d = Mat::diag(&r, dv.iter().map(|&x| r.from_i64(x)).collect());
        let d_inv = d.inverse().unwrap();
        for (k, &a) in native.sys.all.iter().enumerate() {
            let t = r.from_frac(2, 3).unwrap();
            let eps = r.from_i64(f.sign_at(&native.sys, k));
            let expect = d.mul(&native.x_gen(a, &r.mul(&eps, &t)).unwrap()).mul(&d_inv);
            assert_eq!(framed.x_gen(a, &t).unwrap(), expect, "{ty} {}", native.sys.name(a));
        }
    }
}

#[test]
fn r2_constants_are_chevalley_integers() {
    // Oracle: the leading constant of [x_α, x_β] is ±(r+1), r the largest
    // integer with β − rα a root.
    for ty in TYPES {
        let g = group(ty, "zloc:5");
        let rep = check_steinberg(&g, 2, 11, Exec::Sequential).unwrap();
        for c in &rep.commutator_constants {
            let a = g.sys.parse_root(&c.alpha).unwrap();
            let b = g.sys.parse_root(&c.beta).unwrap();
            let Some(lead) = c.terms.iter().find(|t| (t.i, t.j) == (1, 1)) else {
                assert!(!g.sys.is_root(add(a, b)), "{} {}", c.alpha, c.beta);
                continue;
            };
            let mut r = 0;
            while g.sys.is_root(add(b, scale(-(r + 1), a))) {
                r += 1;
            }
            assert_eq!(lead.c.abs(), r + 1, "{} {}", c.alpha, c.beta);
            assert_eq!(g.sys.parse_root(&lead.root).unwrap(), add(a, b));
        }
    }
}

#[test]
fn b2_short_short_commutator_has_constant_two() {
    let g = group(SystemType::B2, "zloc:5");
    let r = g.ring().clone();
    let (e1, e2) = (g.sys.parse_root("e1").unwrap(), g.sys.parse_root("e2").unwrap());
    let (t, u) = (r.from_i64(3), r.from_frac(1, 7).unwrap());
    let c = g
        .eval_word(&GroupWord::commutator(GroupWord::X(e1, t.clone()), GroupWord::X(e2, u.clone())))
        .unwrap();
    let tu2 = r.mul(&r.from_i64(2), &r.mul(&t, &u));
    let plus = g.x_gen(add(e1, e2), &tu2).unwrap();
    let minus = g.x_gen(add(e1, e2), &r.neg(&tu2)).unwrap();
    assert!(c == plus || c == minus);
}

#[test]
fn word_evaluation_examples() {
    let g = group(SystemType::G2, "zloc:5");
    let r = g.ring().clone();
    let a = g.sys.simple[0];
    let one = r.one();
    // x_α(1) x_{−α}(−1) x_α(1) = w_α(1).
    let w = GroupWord::product([
        GroupWord::X(a, one.clone()),
        GroupWord::X(neg(a), r.from_i64(-1)),
        GroupWord::X(a, one.clone()),
    ]);
    assert_eq!(g.eval_word(&w).unwrap(), g.w_gen(a, &one).unwrap());
    let ww = GroupWord::product([w.clone(), w.inv()]);
    assert!(g.eval_word(&ww).unwrap().is_identity());
    assert!(g.eval_word(&GroupWord::pattern("nope")).is_err());
    let parsed = g.parse_word("x:a1:1 x:-a1:-1 x:a1:1").unwrap();
    assert_eq!(g.eval_word(&parsed).unwrap(), g.w_gen(a, &one).unwrap());
    let h = g.parse_letter("h:3a1+2a2:1/2").unwrap();
    assert_eq!(h, GroupWord::H(g.sys.parse_root("3a1+2a2").unwrap(), r.from_frac(1, 2).unwrap()));
    for bad in ["q:a1:1", "x:a3:1", "x:a1", "x:a1:1/5", ""] {
        assert!(g.parse_word(bad).is_err(), "{bad}");
    }
}

#[test]
fn steinberg_parallel_matches_sequential() {
    let g = group(SystemType::B2, "fp:7");
    let s = check_steinberg(&g, 3, 5, Exec::Sequential).unwrap();
    let p = check_steinberg(&g, 3, 5, Exec::Parallel).unwrap();
    assert!(s.all_pass());
    assert_eq!(s, p);
}

fn elem(r: &Ring, k: i64) -> Value {
    r.from_i64(k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_is_a_homomorphism(ty in prop::sample::select(TYPES.to_vec()), i in 0usize..8, j in 0usize..8, t in 0i64..25, u in 0i64..25) {
        let g = group(ty, "zmod:5^2");
        let r = g.ring().clone();
        let a = g.x_gen(g.sys.all[i], &elem(&r, t)).unwrap();
        let b = g.w_gen(g.sys.all[j], &r.one()).unwrap().mul(&g.x_gen(g.sys.all[i ^ 1], &elem(&r, u)).unwrap());
        prop_assert_eq!(g.reduce_mod_j(&a.mul(&b)), g.reduce_mod_j(&a).mul(&g.reduce_mod_j(&b)));
    }

    #[test]
    fn congruence_subgroup_is_normal(ty in prop::sample::select(TYPES.to_vec()), i in 0usize..8, j in 0usize..8, t in 1i64..5, u in 0i64..25) {
        let g = group(ty, "zmod:5^2");
        let r = g.ring().clone();
        let c = g.x_gen(g.sys.all[i], &elem(&r, 5 * t)).unwrap();
        prop_assert!(g.in_congruence(&c));
        prop_assert!(!g.in_congruence(&g.x_gen(g.sys.all[i], &elem(&r, t)).unwrap()));
        let y = g.x_gen(g.sys.all[j], &elem(&r, u)).unwrap().mul(&g.w_gen(g.sys.all[i], &r.one()).unwrap());
        let conj = y.mul(&c).mul(&y.inverse().unwrap());
        prop_assert!(g.in_congruence(&conj));
    }

    #[test]
    fn x_is_additive_over_dual_numbers(i in 0usize..8, a0 in 0i64..5, a1 in 0i64..5, b0 in 0i64..5, b1 in 0i64..5) {
        let g = group(SystemType::G2, "dual:5");
        let r = g.ring().clone();
        let t = r.parse_elem(&format!("{a0}+{a1}eps")).unwrap();
        let u = r.parse_elem(&format!("{b0}+{b1}eps")).unwrap();
        let al = g.sys.all[i];
        prop_assert_eq!(g.x_gen(al, &t).unwrap().mul(&g.x_gen(al, &u).unwrap()), g.x_gen(al, &r.add(&t, &u)).unwrap());
    }
}
