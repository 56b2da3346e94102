//! Constrained matrix shapes with named unknowns.
//!
//! An entry is a constant plus a rational combination of unknowns, written in
//! a compact grammar: `a1,1`, `-a1,9-2a1,10`, `2a9,6-a10,6`, `3/2i14-3/2h13`,
//! `0`. Unknown names are a lowercase letter followed by digits, optionally
//! `,digits`.

use std::collections::BTreeMap;

use chev_ring::{Mat, Ring, Value, Q};
use num_traits::{One, Zero};

use crate::error::{ReplayError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Entry {
    pub constant: Q,
    pub terms: Vec<(Q, String)>,
}

impl Entry {
    pub fn parse(s: &str) -> Result<Entry> {
        let bad = || ReplayError::Fixture("pattern".into(), format!("bad entry `{s}`"));
        let mut e = Entry::default();
        let b = s.as_bytes();
        let mut k = 0;
        while k < b.len() {
            let mut sign = Q::one();
            if b[k] == b'+' || b[k] == b'-' {
                if b[k] == b'-' {
                    sign = -sign;
                }
                k += 1;
            }
            let st = k;
            while k < b.len() && (b[k].is_ascii_digit() || b[k] == b'/') {
                k += 1;
            }
            let coeff = if st == k { Q::one() } else { chev_ring::ring::parse_q(&s[st..k]).ok_or_else(bad)? };
            if k < b.len() && b[k].is_ascii_lowercase() {
                let ns = k;
                k += 1;
                while k < b.len() && b[k].is_ascii_digit() {
                    k += 1;
                }
                if k + 1 < b.len() && b[k] == b',' && b[k + 1].is_ascii_digit() {
                    k += 1;
                    while k < b.len() && b[k].is_ascii_digit() {
                        k += 1;
                    }
                }
                if k == ns + 1 {
                    return Err(bad());
                }
                e.terms.push((sign * coeff, s[ns..k].to_string()));
            } else if st == k {
                return Err(bad());
            } else {
                e.constant += sign * coeff;
            }
        }
        Ok(e)
    }

    pub fn eval(&self, value: &dyn Fn(&str) -> Q) -> Q {
        self.terms.iter().fold(self.constant.clone(), |acc, (c, n)| acc + c * value(n))
    }
}

/// A printed matrix shape whose entries are linear in named unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPattern {
    pub name: String,
    pub entries: Vec<Vec<Entry>>,
    /// Unknowns in order of first appearance (row-major).
    pub unknowns: Vec<String>,
    /// Value of each unknown at the true generator.
    pub base: BTreeMap<String, Q>,
    /// Edits made to the printed shape, with reasons.
    pub repairs: Vec<String>,
}

impl SymbolicPattern {
    pub fn parse<S: AsRef<str>>(name: &str, rows: &[S]) -> Result<SymbolicPattern> {
        let entries: Vec<Vec<Entry>> =
            rows.iter().map(|r| r.as_ref().split_whitespace().map(Entry::parse).collect::<Result<_>>()).collect::<Result<_>>()?;
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(ReplayError::Fixture(name.into(), "pattern is not square".into()));
        }
        let mut unknowns: Vec<String> = Vec::new();
        for e in entries.iter().flatten() {
            for (_, u) in &e.terms {
                if !unknowns.contains(u) {
                    unknowns.push(u.clone());
                }
            }
        }
        Ok(SymbolicPattern { name: name.into(), entries, unknowns, base: BTreeMap::new(), repairs: Vec::new() })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Entry {
        &self.entries[i][j]
    }

    /// Read base values off a target matrix: each unknown takes its value
    /// from the first entry where it appears alone. Returns the positions
    /// (1-based) where the pattern at those values disagrees with `target`.
    pub fn fit_base(&mut self, target: &[Vec<Q>]) -> Vec<(usize, usize)> {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                let e = &self.entries[i][j];
                if let [(c, u)] = e.terms.as_slice() {
                    if !self.base.contains_key(u) {
                        self.base.insert(u.clone(), (&target[i][j] - &e.constant) / c);
                    }
                }
            }
        }
        self.conflicts(target)
    }

    pub fn base_value(&self, u: &str) -> Q {
        self.base.get(u).cloned().unwrap_or_else(Q::zero)
    }

    /// The pattern with every unknown at its base value.
    pub fn specialize(&self) -> Vec<Vec<Q>> {
        self.entries.iter().map(|r| r.iter().map(|e| e.eval(&|u| self.base_value(u))).collect()).collect()
    }

    pub fn conflicts(&self, target: &[Vec<Q>]) -> Vec<(usize, usize)> {
        let s = self.specialize();
        let mut out = Vec::new();
        for (i, (r, t)) in s.iter().zip(target).enumerate() {
            for (j, (a, b)) in r.iter().zip(t).enumerate() {
                if a != b {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Jet-ring matrix with `unknown = base + y_k` for unknowns that `index`
    /// maps to symbol k; other unknowns are held at their base value.
    pub fn to_jet(&self, ring: &Ring, index: &dyn Fn(&str) -> Option<usize>) -> Result<Mat> {
        let m = ring.jet_len().ok_or(chev_ring::RingError::WrongKind("jet"))?;
        let n = self.n();
        let mut out = Mat::zero(ring, n, n);
        for i in 0..n {
            for j in 0..n {
                let e = &self.entries[i][j];
                let c = e.eval(&|u| self.base_value(u));
                let mut l = vec![Q::zero(); m];
                for (coef, u) in &e.terms {
                    if let Some(k) = index(u) {
                        l[k] += coef;
                    }
                }
                out.set(i, j, Value::Jet(Box::new(chev_ring::Jet { c, l })));
            }
        }
        Ok(out)
    }

    /// Jet matrix in which every unknown is its own symbol, in the order of
    /// [`SymbolicPattern::unknowns`].
    pub fn to_own_jet(&self) -> Result<Mat> {
        let ring = Ring::parse(&format!("jet:{}", self.unknowns.len()), &[])?;
        self.to_jet(&ring, &|u| self.unknowns.iter().position(|v| v == u))
    }
}

/// Rational matrix of a ring matrix whose entries are rational.
pub fn to_q(m: &Mat) -> Vec<Vec<Q>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| chev_ring::ring::as_rational(v).expect("rational entries")).collect())
        .collect()
}
