//! Expression trees over the generators, evaluated to exact matrices.

use chev_ring::{Mat, Value};
use chev_roots::Root;

use crate::error::{GroupError, Result};
use crate::group::{ChevalleyGroup, TorusCharacter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupWord {
    X(Root, Value),
    W(Root, Value),
    H(Root, Value),
    Torus(TorusCharacter),
    Literal(Mat),
    /// A named matrix supplied at evaluation time.
    Pattern(String),
    Product(Vec<GroupWord>),
    Inverse(Box<GroupWord>),
}

impl GroupWord {
    pub fn product(ws: impl IntoIterator<Item = GroupWord>) -> GroupWord {
        GroupWord::Product(ws.into_iter().collect())
    }

    pub fn inv(self) -> GroupWord {
        GroupWord::Inverse(Box::new(self))
    }

    pub fn pattern(name: &str) -> GroupWord {
        GroupWord::Pattern(name.into())
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: GroupWord, b: GroupWord) -> GroupWord {
        GroupWord::product([a.clone(), b.clone(), a.inv(), b.inv()])
    }
}

impl ChevalleyGroup {
    /// Parse one generator `x:<root>:<t>`, `w:<root>:<t>` or `h:<root>:<t>`,
    /// e.g. `h:a1:-1` or `x:a1+2a2:1/2`.
    pub fn parse_letter(&self, s: &str) -> Result<GroupWord> {
        let bad = |why: &str| GroupError::BadElement(s.into(), why.into());
        let mut parts = s.trim().splitn(3, ':');
        let (Some(kind), Some(root), Some(t)) = (parts.next(), parts.next(), parts.next()) else {
            return Err(bad("expected <kind>:<root>:<t>"));
        };
        let a = self.sys.parse_root(root).map_err(|e| bad(&e.to_string()))?;
        let t = self.ring().parse_elem(t)?;
        match kind {
            "x" => Ok(GroupWord::X(a, t)),
            "w" => Ok(GroupWord::W(a, t)),
            "h" => Ok(GroupWord::H(a, t)),
            _ => Err(bad("kind must be x, w or h")),
        }
    }

    /// Whitespace-separated generators, read as their product.
    pub fn parse_word(&self, s: &str) -> Result<GroupWord> {
        let letters = s.split_whitespace().map(|l| self.parse_letter(l)).collect::<Result<Vec<_>>>()?;
        if letters.is_empty() {
            return Err(GroupError::BadElement(s.into(), "empty word".into()));
        }
        Ok(GroupWord::Product(letters))
    }

    /// Evaluate a word without pattern leaves.
    pub fn eval_word(&self, w: &GroupWord) -> Result<Mat> {
        self.eval_word_with(w, &|_| None)
    }

    /// Evaluate a word, resolving `Pattern` leaves through `lookup`.
    ///
    /// Inverses of generator leaves use the closed forms `x_α(t)⁻¹ = x_α(−t)`,
    /// `w_α(t)⁻¹ = w_α(−t)`, `h_α(t)⁻¹ = h_α(t⁻¹)`; literals and patterns are
    /// inverted by unit-pivot elimination.
    pub fn eval_word_with(&self, w: &GroupWord, lookup: &dyn Fn(&str) -> Option<Mat>) -> Result<Mat> {
        let r = self.ring();
        Ok(match w {
            GroupWord::X(a, t) => self.x_gen(*a, t)?,
            GroupWord::W(a, t) => self.w_gen(*a, t)?,
            GroupWord::H(a, t) => self.h_gen(*a, t)?,
            GroupWord::Torus(chi) => self.torus_element(chi)?,
            GroupWord::Literal(m) => m.clone(),
            GroupWord::Pattern(name) => lookup(name).ok_or_else(|| GroupError::UnknownPattern(name.clone()))?,
            GroupWord::Product(ws) => {
                let mut acc = self.identity();
                for x in ws {
                    acc = acc.try_mul(&self.eval_word_with(x, lookup)?)?;
                }
                acc
            }
            GroupWord::Inverse(inner) => match &**inner {
                GroupWord::X(a, t) => self.x_gen(*a, &r.neg(t))?,
                GroupWord::W(a, t) => self.w_gen(*a, &r.neg(t))?,
                GroupWord::H(a, t) => {
                    let ti = r.try_inv(t).ok_or_else(|| GroupError::NotUnit(r.format(t)))?;
                    self.h_gen(*a, &ti)?
                }
                GroupWord::Torus(chi) => self.torus_element(&self.inverse_character(chi)?)?,
                GroupWord::Inverse(x) => self.eval_word_with(x, lookup)?,
                GroupWord::Product(ws) => {
                    let inv = GroupWord::Product(ws.iter().rev().map(|x| x.clone().inv()).collect());
                    self.eval_word_with(&inv, lookup)?
                }
                other => self.eval_word_with(other, lookup)?.inverse().map_err(|_| GroupError::Singular)?,
            },
        })
    }
}
