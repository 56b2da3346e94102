//! Root data for B2 and G2.
//!
//! Roots are integer vectors: B2 lives in the span of e1, e2 and G2 in the
//! plane x + y + z = 0 of Z³. The ordered list [`RootSystemData::all`] fixes
//! the basis positions of the adjoint representation: positions `2i`, `2i+1`
//! (zero-based) hold β_i and −β_i, followed by the two Cartan positions.
//!
//! The pairing is `⟨β, α⟩ = 2(β, α)/(α, α)`, the exponent in
//! `h_α(t) x_β(u) h_α(t)⁻¹ = x_β(t^{⟨β,α⟩} u)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("unknown root system `{0}`")]
    UnknownSystem(String),
    #[error("`{0}` is not a root of {1}")]
    NotARoot(String, SystemType),
    #[error("root string undefined for proportional roots")]
    Proportional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SystemType {
    B2,
    G2,
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemType::B2 => "b2",
            SystemType::G2 => "g2",
        })
    }
}

impl FromStr for SystemType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, RootError> {
        match s.to_ascii_lowercase().as_str() {
            "b2" => Ok(SystemType::B2),
            "g2" => Ok(SystemType::G2),
            _ => Err(RootError::UnknownSystem(s.into())),
        }
    }
}

impl SystemType {
    /// Integers that must be invertible in a coefficient ring for this type.
    pub fn required_inverses(self) -> &'static [i64] {
        match self {
            SystemType::B2 => &[2],
            SystemType::G2 => &[2, 3],
        }
    }
}

pub type Root = [i64; 3];

pub fn add(a: Root, b: Root) -> Root {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: Root, b: Root) -> Root {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn neg(a: Root) -> Root {
    [-a[0], -a[1], -a[2]]
}

pub fn scale(c: i64, a: Root) -> Root {
    [c * a[0], c * a[1], c * a[2]]
}

pub fn inner(a: Root, b: Root) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub const ZERO: Root = [0, 0, 0];

/// A Weyl group element stored as its permutation of the root list:
/// `perm[i] = j` means `w(β_i) = β_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    /// A reduced-length word in the simple reflections (0 = s_{α1}).
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemData {
    pub ty: SystemType,
    pub simple: [Root; 2],
    pub positive: Vec<Root>,
    pub all: Vec<Root>,
}

impl RootSystemData {
    pub fn new(ty: SystemType) -> Self {
        match ty {
            SystemType::B2 => {
                let (a1, a2) = ([1, -1, 0], [0, 1, 0]);
                let pos = vec![a1, a2, add(a1, a2), add(a1, scale(2, a2))];
                // e1, e2, e1+e2, e1-e2 with their negatives.
                let order = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0]];
                RootSystemData { ty, simple: [a1, a2], positive: pos, all: order.iter().flat_map(|&r| [r, neg(r)]).collect() }
            }
            SystemType::G2 => {
                let (a1, a2) = ([1, -1, 0], [-2, 1, 1]);
                let lc = |i: i64, j: i64| add(scale(i, a1), scale(j, a2));
                let pos = vec![lc(1, 0), lc(0, 1), lc(1, 1), lc(2, 1), lc(3, 1), lc(3, 2)];
                let all = pos.iter().flat_map(|&r| [r, neg(r)]).collect();
                RootSystemData { ty, simple: [a1, a2], positive: pos, all }
            }
        }
    }

    /// Number of roots.
    pub fn num_roots(&self) -> usize {
        self.all.len()
    }

    /// Dimension of the adjoint representation.
    pub fn n(&self) -> usize {
        self.all.len() + 2
    }

    /// Zero-based positions of h_1, h_2.
    pub fn cartan_positions(&self) -> [usize; 2] {
        [self.all.len(), self.all.len() + 1]
    }

    /// Number of coordinates used by the realization (2 for B2, 3 for G2).
    pub fn coord_dim(&self) -> usize {
        match self.ty {
            SystemType::B2 => 2,
            SystemType::G2 => 3,
        }
    }

    pub fn index(&self, r: Root) -> Option<usize> {
        self.all.iter().position(|&x| x == r)
    }

    pub fn is_root(&self, r: Root) -> bool {
        self.index(r).is_some()
    }

    pub fn is_positive(&self, r: Root) -> bool {
        self.positive.contains(&r)
    }

    pub fn is_long(&self, r: Root) -> bool {
        inner(r, r) == self.long_length()
    }

    pub fn long_length(&self) -> i64 {
        self.all.iter().map(|&r| inner(r, r)).max().unwrap()
    }

    /// `⟨β, α⟩ = 2(β, α)/(α, α)`.
    pub fn pairing(&self, beta: Root, alpha: Root) -> i64 {
        let num = 2 * inner(beta, alpha);
        let den = inner(alpha, alpha);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// `s_α(β) = β − ⟨β, α⟩α`.
    pub fn reflect(&self, alpha: Root, beta: Root) -> Root {
        sub(beta, scale(self.pairing(beta, alpha), alpha))
    }

    /// Coefficients (i, j) with r = i·α1 + j·α2.
    pub fn simple_coeffs(&self, r: Root) -> (i64, i64) {
        for i in -3..=3 {
            for j in -2..=2 {
                if self.from_coeffs(i, j) == r {
                    return (i, j);
                }
            }
        }
        panic!("{r:?} is not in the root lattice range")
    }

    pub fn from_coeffs(&self, i: i64, j: i64) -> Root {
        add(scale(i, self.simple[0]), scale(j, self.simple[1]))
    }

    pub fn height(&self, r: Root) -> i64 {
        let (i, j) = self.simple_coeffs(r);
        i + j
    }

    /// Maximal p, q with β − pα, β + qα ∈ Φ.
    pub fn root_string(&self, alpha: Root, beta: Root) -> Result<(i64, i64), RootError> {
        if beta == alpha || beta == neg(alpha) {
            return Err(RootError::Proportional);
        }
        let walk = |dir: i64| (1..).take_while(|&i| self.is_root(add(beta, scale(dir * i, alpha)))).count() as i64;
        Ok((walk(-1), walk(1)))
    }

    fn reflection_perm(&self, i: usize) -> Vec<usize> {
        self.all.iter().map(|&b| self.index(self.reflect(self.simple[i], b)).unwrap()).collect()
    }

    /// All Weyl group elements, by breadth-first closure under the simple
    /// reflections; the identity comes first and words are shortest.
    pub fn weyl_enumerate(&self) -> Vec<WeylElement> {
        let gens = [self.reflection_perm(0), self.reflection_perm(1)];
        let id: Vec<usize> = (0..self.all.len()).collect();
        let mut seen = BTreeSet::from([id.clone()]);
        let mut out = vec![WeylElement { perm: id, word: vec![] }];
        let mut k = 0;
        while k < out.len() {
            let cur = out[k].clone();
            for (g, s) in gens.iter().enumerate() {
                // (s ∘ w)(β) = s(w(β))
                let perm: Vec<usize> = cur.perm.iter().map(|&j| s[j]).collect();
                if seen.insert(perm.clone()) {
                    let mut word = vec![g];
                    word.extend(&cur.word);
                    out.push(WeylElement { perm, word });
                }
            }
            k += 1;
        }
        out
    }

    /// Human-readable name in terms of simple roots, e.g. `a1+2a2`, `-a2`.
    pub fn name(&self, r: Root) -> String {
        let (i, j) = self.simple_coeffs(r);
        let term = |c: i64, s: &str| match c {
            0 => String::new(),
            1 => s.to_string(),
            -1 => format!("-{s}"),
            c => format!("{c}{s}"),
        };
        let (a, b) = (term(i, "a1"), term(j, "a2"));
        match (a.is_empty(), b.is_empty()) {
            (true, _) => b,
            (_, true) => a,
            _ if b.starts_with('-') => format!("{a}{b}"),
            _ => format!("{a}+{b}"),
        }
    }

    /// Parse `a1`, `-a2`, `a1+2a2`, `3a1+2a2`, or (B2 only) e-coordinates such
    /// as `e1`, `e1+e2`, `e2-e1`.
    pub fn parse_root(&self, s: &str) -> Result<Root, RootError> {
        let bad = || RootError::NotARoot(s.into(), self.ty);
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut coeff = [0i64; 2];
        let mut evec = [0i64; 2];
        let mut uses_e = false;
        let mut start = 0;
        let mut terms = Vec::new();
        for (k, ch) in t.char_indices() {
            if (ch == '+' || ch == '-') && k > start {
                terms.push(&t[start..k]);
                start = k;
            }
        }
        terms.push(&t[start..]);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            let split = body.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(bad)?;
            let c: i64 = if split == 0 { 1 } else { body[..split].parse().map_err(|_| bad())? };
            match &body[split..] {
                "a1" => coeff[0] += sign * c,
                "a2" => coeff[1] += sign * c,
                "e1" if self.ty == SystemType::B2 => {
                    uses_e = true;
                    evec[0] += sign * c
                }
                "e2" if self.ty == SystemType::B2 => {
                    uses_e = true;
                    evec[1] += sign * c
                }
                _ => return Err(bad()),
            }
        }
        let r = if uses_e {
            if coeff != [0, 0] {
                return Err(bad());
            }
            [evec[0], evec[1], 0]
        } else {
            self.from_coeffs(coeff[0], coeff[1])
        };
        if self.is_root(r) {
            Ok(r)
        } else {
            Err(bad())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> RootSystemData {
        RootSystemData::new(SystemType::B2)
    }
    fn g2() -> RootSystemData {
        RootSystemData::new(SystemType::G2)
    }

    #[test]
    fn sizes_and_lengths() {
        assert_eq!(b2().num_roots(), 8);
        assert_eq!(g2().num_roots(), 12);
        assert_eq!((b2().n(), g2().n()), (10, 14));
        let lens = |s: &RootSystemData| s.all.iter().map(|&r| inner(r, r)).collect::<BTreeSet<_>>();
        assert_eq!(lens(&b2()), BTreeSet::from([1, 2]));
        assert_eq!(lens(&g2()), BTreeSet::from([2, 6]));
    }

    #[test]
    fn positive_roots() {
        let s = b2();
        assert_eq!(s.positive[3], [1, 1, 0]);
        assert_eq!(s.positive[2], [1, 0, 0]);
        assert_eq!(g2().positive[5], [-1, -1, 2]);
    }

    #[test]
    fn pairings_and_reflections() {
        let s = b2();
        let [a1, a2] = s.simple;
        assert_eq!(s.pairing(a2, a1), -1);
        assert_eq!(s.pairing(a1, a2), -2);
        assert_eq!(s.reflect(a1, a2), [1, 0, 0]);
        for &r in &s.all {
            assert_eq!(s.pairing(r, r), 2);
            assert_eq!(s.reflect(r, r), neg(r));
        }
        let g = g2();
        let [g1, g2r] = g.simple;
        assert_eq!(g.reflect(g1, g2r), g.from_coeffs(3, 1));
    }

    #[test]
    fn root_strings() {
        let s = b2();
        let [a1, a2] = s.simple;
        assert_eq!(s.root_string(a2, a1).unwrap(), (0, 2));
        assert_eq!(s.root_string([1, -1, 0], [1, 1, 0]).unwrap(), (0, 0));
        let g = g2();
        assert_eq!(g.root_string(g.simple[0], g.simple[1]).unwrap(), (0, 3));
        assert!(s.root_string(a1, neg(a1)).is_err());
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(b2().weyl_enumerate().len(), 8);
        assert_eq!(g2().weyl_enumerate().len(), 12);
        let w = b2().weyl_enumerate();
        assert!(w[0].perm.iter().enumerate().all(|(i, &j)| i == j));
    }

    #[test]
    fn names_round_trip() {
        for s in [b2(), g2()] {
            for &r in &s.all {
                assert_eq!(s.parse_root(&s.name(r)).unwrap(), r);
            }
        }
        assert_eq!(b2().parse_root("e1+e2").unwrap(), [1, 1, 0]);
        assert_eq!(b2().name([1, 1, 0]), "a1+2a2");
        assert!(g2().parse_root("a1+3a2").is_err());
    }
}
