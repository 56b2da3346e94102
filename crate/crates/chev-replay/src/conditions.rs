//! Word equations over the patterns, and the positions read from them.
//!
//! `x_{e1}` and `x_{e1−e2}`, which the B2 conditions use but no pattern
//! describes, are Weyl conjugates of patterns: `x_{e1} = w_{α1} x_{e2} w_{α1}⁻¹`
//! and `x_{e1−e2} = w_{e2} x_{e1+e2} w_{e2}⁻¹` (the images of the `w_i` are
//! fixed). The G2 words are over the true generators `x_1 = x_{α1}(1)`,
//! `x_2 = x_{α2}(1)`, `d_2 = h_{α2}(2)` or, for the linearization, over the
//! `g2_*` patterns.

use chev_group::{ChevalleyGroup, GroupWord};
use chev_ring::Mat;
use chev_roots::SystemType;

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionSpec {
    pub id: &'static str,
    pub ty: SystemType,
    pub lhs: GroupWord,
    pub rhs: GroupWord,
    /// 1-based positions whose residual entries enter the linear system.
    pub positions: Vec<(usize, usize)>,
    /// How the printed word was read, when that needed a decision.
    pub reading: Option<&'static str>,
}

const POS1: &[(usize, usize)] = &[
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 10), (3, 1), (3, 3), (3, 4), (3, 5),
    (3, 6), (3, 10), (4, 1), (4, 3), (4, 4), (5, 1), (5, 2), (5, 4), (5, 6), (5, 7), (5, 8), (5, 9), (6, 6), (9, 1),
    (9, 4),
];
const POS2: &[(usize, usize)] = &[
    (1, 3), (2, 3), (3, 3), (5, 5), (5, 6), (5, 7), (5, 8), (5, 9), (5, 10), (6, 8), (9, 5), (9, 6), (9, 9), (10, 5),
    (10, 8),
];
const POS3: &[(usize, usize)] = &[
    (1, 1), (1, 2), (1, 4), (1, 6), (1, 7), (2, 5), (2, 6), (2, 9), (2, 10), (3, 1), (3, 2), (3, 4), (3, 6), (3, 7),
    (3, 10), (5, 1), (5, 2), (5, 4), (5, 5), (5, 6), (5, 7), (5, 9), (8, 2), (8, 4),
];
const POS4: &[(usize, usize)] = &[(5, 6), (5, 8), (5, 10), (6, 6), (7, 6), (10, 6)];
const POS5: &[(usize, usize)] = &[(2, 4), (6, 7)];

fn p(name: &str) -> GroupWord {
    GroupWord::pattern(name)
}

fn prod<const N: usize>(ws: [GroupWord; N]) -> GroupWord {
    GroupWord::product(ws)
}

fn one() -> GroupWord {
    GroupWord::Product(Vec::new())
}

fn conj(w: &GroupWord, x: GroupWord) -> GroupWord {
    prod([w.clone(), x, w.clone().inv()])
}

/// Con1–Con5 over `g`'s ring; pattern leaves are `x_e2` and `x_e1e2`.
pub fn b2_conditions(g: &ChevalleyGroup) -> Vec<ConditionSpec> {
    let r = g.ring();
    let root = |s: &str| g.sys.parse_root(s).expect("valid root");
    let w = |s: &str| GroupWord::W(root(s), r.one());
    let h_m1 = GroupWord::H(root("e1+e2"), r.from_i64(-1));
    let (xe2, xb) = (p("x_e2"), p("x_e1e2"));
    let we2 = w("e2");
    let wa1 = w("e1-e2");
    let xe1 = conj(&wa1, xe2.clone());
    let xa = conj(&we2, xb.clone());
    vec![
        ConditionSpec {
            id: "Con1",
            ty: SystemType::B2,
            lhs: prod([xe2.clone(), h_m1.clone(), xe2.clone(), h_m1]),
            rhs: one(),
            positions: POS1.to_vec(),
            reading: None,
        },
        ConditionSpec {
            id: "Con2",
            ty: SystemType::B2,
            lhs: prod([xb.clone(), xa.clone()]),
            rhs: prod([xa.clone(), xb.clone()]),
            positions: POS2.to_vec(),
            reading: None,
        },
        ConditionSpec {
            id: "Con3",
            ty: SystemType::B2,
            lhs: prod([xb.clone(), xe2.clone()]),
            rhs: prod([xe2.clone(), xb.clone()]),
            positions: POS3.to_vec(),
            reading: None,
        },
        ConditionSpec {
            id: "Con4",
            ty: SystemType::B2,
            lhs: prod([xb.clone(), xb, xe2.clone(), xe1.clone()]),
            rhs: prod([xe1, xe2]),
            positions: POS4.to_vec(),
            reading: None,
        },
        ConditionSpec {
            id: "Con5",
            ty: SystemType::B2,
            lhs: prod([xa.clone(), wa1.clone(), xa.clone(), wa1.clone().inv(), xa]),
            rhs: wa1,
            positions: POS5.to_vec(),
            reading: Some("the trailing factor printed as z_{e1-e2} is read as x_{e1-e2}"),
        },
    ]
}

/// `lhs − rhs` with pattern leaves resolved through `lookup`.
pub fn condition_residual(g: &ChevalleyGroup, c: &ConditionSpec, lookup: &dyn Fn(&str) -> Option<Mat>) -> Result<Mat> {
    let l = g.eval_word_with(&c.lhs, lookup)?;
    let r = g.eval_word_with(&c.rhs, lookup)?;
    Ok(l.try_sub(&r)?)
}

/// A G2 word equation as printed, or the reason it cannot be evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum G2Condition {
    Word(ConditionSpec),
    Unparseable { id: &'static str, printed: &'static str, reason: &'static str },
}

/// Con6–Con17 over `g`'s ring with pattern leaves `x1`, `x2`, `d2`.
///
/// Con10 is listed twice: as printed (`x1 w1 x1 w1⁻¹ = w1`) and with the
/// third `x1` factor the B2 analogue Con5 carries. Con16's printed word is
/// reported as unparseable; `Con16'` is its x-form, with
/// `x_{3α1+α2} = w1 x2 w1⁻¹` and `x_{3α1+2α2} = w2 x_{3α1+α2} w2⁻¹`.
pub fn g2_conditions(g: &ChevalleyGroup) -> Vec<G2Condition> {
    let r = g.ring();
    let root = |s: &str| g.sys.parse_root(s).expect("valid root");
    let w1 = GroupWord::W(root("a1"), r.one());
    let w2 = GroupWord::W(root("a2"), r.one());
    let h1m = GroupWord::H(root("a1"), r.from_i64(-1));
    let h2m = GroupWord::H(root("a2"), r.from_i64(-1));
    let (x1, x2, d2) = (p("x1"), p("x2"), p("d2"));
    let x2a = conj(&prod([w1.clone(), w2.clone()]), x1.clone());
    let x31 = conj(&w1, x2.clone());
    let spec = |id, lhs, rhs, reading| {
        G2Condition::Word(ConditionSpec { id, ty: SystemType::G2, lhs, rhs, positions: Vec::new(), reading })
    };
    vec![
        spec("Con6", conj(&w2, d2.clone()), d2.clone().inv(), None),
        spec("Con7", prod([x1.clone(), x1.clone(), d2.clone()]), prod([d2.clone(), x1.clone()]), None),
        spec(
            "Con8",
            prod([conj(&w2, x2.clone()), x1.clone()]),
            prod([x1.clone(), conj(&w2, x2.clone())]),
            None,
        ),
        spec("Con9", prod([h2m.clone(), x1.clone(), h2m, x1.clone()]), one(), None),
        spec("Con10", prod([x1.clone(), conj(&w1, x1.clone())]), w1.clone(), Some("as printed")),
        spec(
            "Con10'",
            prod([x1.clone(), conj(&w1, x1.clone()), x1.clone()]),
            w1.clone(),
            Some("with the closing x1 factor of the B2 analogue"),
        ),
        spec(
            "Con11",
            prod([conj(&w2, x2.clone()), x1.clone()]),
            prod([x1.clone(), conj(&w2, x2.clone())]),
            Some("printed identically to Con8"),
        ),
        spec("Con12", prod([d2.clone(), x2a.clone()]), prod([x2a.clone(), d2.clone()]), None),
        spec("Con13", prod([conj(&w2, d2.clone()), d2.clone()]), one(), None),
        spec("Con14", prod([x2.clone(), x2a.clone()]), prod([x2a, x2.clone()]), None),
        spec("Con15", prod([h1m.clone(), x2.clone(), h1m, x2.clone()]), one(), None),
        G2Condition::Unparseable {
            id: "Con16",
            printed: CON16_PRINTED,
            reason: "the conjugation w2 w1 x2 w2^-1 w2^-1 never undoes w1, and the right side reverses the order of the \
                     x-form it restates",
        },
        spec(
            "Con16'",
            prod([x31.clone(), x2.clone(), conj(&w2, x31.clone())]),
            prod([x2.clone(), x31]),
            Some("the x-form printed before the word: x_{3a1+a2}(1) x_{a2}(1) x_{3a1+2a2}(1) = x_{a2}(1) x_{3a1+a2}(1)"),
        ),
        spec(
            "Con17",
            prod([d2.clone(), x2.clone(), x2.clone(), x2.clone(), x2.clone()]),
            prod([x2, d2]),
            None,
        ),
    ]
}

pub const CON16_PRINTED: &str = "w1 x2 w1^-1 x2 w2 w1 x2 w2^-1 w2^-1 = w1 x2 w1^-1 x2";

