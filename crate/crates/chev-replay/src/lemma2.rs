//! The elementary group spans the full matrix ring.
//!
//! Starting from the seed `S = (x_{e1+e2}(1) − 1)² = −2E_{5,6}` over
//! `zloc:5`, left and right multiplication by the generators
//! `x_α(1), w_α(1), h_α(−1)` is iterated breadth-first. A product is kept
//! when it is independent of those kept so far modulo 5. Every kept product
//! is an integer matrix, so once 100 are kept, their coordinate matrix is
//! invertible over `Z_(5)` (its determinant is a unit mod 5), and each
//! matrix unit is a `Z_(5)`-combination of them: the certificate.

use std::collections::VecDeque;

use chev_group::ChevalleyGroup;
use chev_ring::linalg::rref_q;
use chev_ring::Q;
use chev_roots::SystemType;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::golden::golden_ring;
use crate::pattern::to_q;

/// A product `L · S · R` with `L`, `R` words in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedWord {
    pub left: Vec<String>,
    pub right: Vec<String>,
}

impl SeedWord {
    pub fn render(&self) -> String {
        let mut parts: Vec<&str> = self.left.iter().map(String::as_str).collect();
        parts.push("S");
        parts.extend(self.right.iter().map(String::as_str));
        parts.join("·")
    }
}

/// A printed claim `L·(αE_{5,6})·R = αE_{i,j}` and what the product is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexClaim {
    pub word: String,
    pub claimed: (usize, usize),
    /// Non-zero entries of `L·E_{5,6}·R`, 1-based, with values.
    pub actual: Vec<(usize, usize, i64)>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma2Report {
    /// Non-zero entries of the seed, 1-based.
    pub seed: Vec<(usize, usize, i64)>,
    pub seed_is_minus_2_e56: bool,
    pub generators: Vec<String>,
    /// Products kept, in discovery order.
    pub basis: Vec<SeedWord>,
    pub dimension_mod_p: usize,
    pub dimension_q: usize,
    pub complete: bool,
    /// For each matrix unit `E_{i,j}` (row-major), its coefficients on
    /// `basis` as `(index, coefficient)`.
    pub certificate: Vec<Vec<(usize, String)>>,
    /// Every certificate coefficient has denominator prime to 5.
    pub certificate_is_local: bool,
    pub claims: Vec<IndexClaim>,
}

const P: i64 = 5;

fn flat(m: &[Vec<Q>]) -> Vec<Q> {
    m.iter().flatten().cloned().collect()
}

fn entries(m: &[Vec<Q>]) -> Vec<(usize, usize, i64)> {
    let mut out = Vec::new();
    for (i, r) in m.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            if !x.is_zero() {
                out.push((i + 1, j + 1, x.to_integer().to_i64().expect("small integer entry")));
            }
        }
    }
    out
}

/// Incremental echelon basis over `F_p` for integer vectors.
struct ModBasis {
    rows: Vec<(usize, Vec<i64>)>,
}

impl ModBasis {
    fn reduce(&self, v: &[Q]) -> Vec<i64> {
        let mut x: Vec<i64> = v
            .iter()
            .map(|q| {
                let n = (q.numer() % BigInt::from(P)).to_i64().unwrap();
                let d = (q.denom() % BigInt::from(P)).to_i64().unwrap();
                (n * inv_mod(d)).rem_euclid(P)
            })
            .collect();
        for (c, r) in &self.rows {
            if x[*c] != 0 {
                let f = x[*c];
                for (a, b) in x.iter_mut().zip(r) {
                    *a = (*a - f * b).rem_euclid(P);
                }
            }
        }
        x
    }

    /// Adds `v` if it is independent; returns whether it was.
    fn insert(&mut self, v: &[Q]) -> bool {
        let mut x = self.reduce(v);
        let Some(c) = x.iter().position(|&a| a != 0) else { return false };
        let inv = inv_mod(x[c]);
        for a in x.iter_mut() {
            *a = (*a * inv).rem_euclid(P);
        }
        for (_, r) in self.rows.iter_mut() {
            if r[c] != 0 {
                let f = r[c];
                for (a, b) in r.iter_mut().zip(&x) {
                    *a = (*a - f * b).rem_euclid(P);
                }
            }
        }
        self.rows.push((c, x));
        true
    }
}

fn inv_mod(a: i64) -> i64 {
    (1..P).find(|b| (a * b).rem_euclid(P) == 1).expect("unit mod p")
}

fn generators(g: &ChevalleyGroup) -> Result<Vec<(String, Vec<Vec<Q>>)>> {
    let r = g.ring();
    let names = g.root_names();
    let mut out = Vec::new();
    for (k, &a) in g.sys.all.iter().enumerate() {
        out.push((format!("x_{}(1)", names[k]), to_q(&g.x_gen(a, &r.one())?)));
    }
    for (k, &a) in g.sys.all.iter().enumerate() {
        if g.sys.is_positive(a) {
            out.push((format!("w_{}(1)", names[k]), to_q(&g.w_gen(a, &r.one())?)));
            out.push((format!("h_{}(-1)", names[k]), to_q(&g.h_gen(a, &r.from_i64(-1))?)));
        }
    }
    Ok(out)
}

fn mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

fn unit(n: usize, i: usize, j: usize) -> Vec<Vec<Q>> {
    let mut m = vec![vec![Q::zero(); n]; n];
    m[i][j] = Q::from_integer(1.into());
    m
}

/// The index claims listed after the seed, `(left, right, claimed unit)`.
const CLAIMS: &[(&str, &str, (usize, usize))] = &[
    ("e1", "", (8, 5)),
    ("e1", "e1", (8, 7)),
    ("e2", "", (7, 6)),
    ("e2", "e1", (7, 7)),
    ("e2", "e2", (7, 8)),
    ("e1", "e2", (8, 8)),
    ("e1+e2", "", (6, 6)),
];

pub fn replay_lemma2() -> Result<Lemma2Report> {
    let ring = golden_ring(SystemType::B2)?;
    let g = ChevalleyGroup::new(SystemType::B2, &ring)?;
    let n = g.n();
    let root = |s: &str| g.sys.parse_root(s).expect("valid root");
    let x = g.x_gen(root("e1+e2"), &ring.one())?.sub(&g.identity());
    let seed = to_q(&x.mul(&x));
    let mut minus2 = unit(n, 4, 5);
    minus2[4][5] = Q::from_integer((-2).into());
    let gens = generators(&g)?;

    let mut basis = ModBasis { rows: Vec::new() };
    let mut kept: Vec<(SeedWord, Vec<Vec<Q>>)> = Vec::new();
    let mut queue = VecDeque::new();
    let start = SeedWord { left: vec![], right: vec![] };
    if basis.insert(&flat(&seed)) {
        kept.push((start.clone(), seed.clone()));
        queue.push_back((start, seed.clone()));
    }
    while let Some((w, m)) = queue.pop_front() {
        if kept.len() == n * n {
            break;
        }
        for (name, gm) in &gens {
            for left in [true, false] {
                let prod = if left { mul(gm, &m) } else { mul(&m, gm) };
                if basis.insert(&flat(&prod)) {
                    let mut nw = w.clone();
                    if left {
                        nw.left.insert(0, name.clone());
                    } else {
                        nw.right.push(name.clone());
                    }
                    kept.push((nw.clone(), prod.clone()));
                    queue.push_back((nw, prod));
                }
            }
        }
    }

    // Certificate: solve [B | I] -> [I | B⁻¹] over Q, with B's columns the
    // kept products; row k of B⁻¹ gives the coefficients of E_k.
    let d = kept.len();
    let dimension_q = chev_ring::linalg::rank_q(&kept.iter().map(|(_, m)| flat(m)).collect::<Vec<_>>());
    let mut certificate = Vec::new();
    let mut local = true;
    if d == n * n {
        let mut aug: Vec<Vec<Q>> = (0..d)
            .map(|r| {
                let mut row: Vec<Q> = kept.iter().map(|(_, m)| m[r / n][r % n].clone()).collect();
                row.extend((0..d).map(|c| if c == r { Q::from_integer(1.into()) } else { Q::zero() }));
                row
            })
            .collect();
        rref_q(&mut aug);
        for k in 0..d {
            let coeffs: Vec<(usize, String)> = (0..d)
                .filter(|&i| !aug[i][d + k].is_zero())
                .map(|i| {
                    let c = &aug[i][d + k];
                    if (c.denom() % BigInt::from(P)).is_zero() {
                        local = false;
                    }
                    (i, c.to_string())
                })
                .collect();
            certificate.push(coeffs);
        }
    }

    let w = |s: &str| -> Result<Vec<Vec<Q>>> {
        Ok(if s.is_empty() { to_q(&g.identity()) } else { to_q(&g.w_gen(root(s), &ring.one())?) })
    };
    let e56 = unit(n, 4, 5);
    let claims = CLAIMS
        .iter()
        .map(|&(l, r, claimed)| {
            let prod = mul(&mul(&w(l)?, &e56), &w(r)?);
            let actual = entries(&prod);
            let holds = actual.len() == 1 && (actual[0].0, actual[0].1) == claimed;
            let word = match r {
                "" => format!("w_{l}·E56"),
                _ => format!("w_{l}·E56·w_{r}"),
            };
            Ok(IndexClaim { word, claimed, actual, holds })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Lemma2Report {
        seed_is_minus_2_e56: seed == minus2,
        seed: entries(&seed),
        generators: gens.iter().map(|(s, _)| s.clone()).collect(),
        dimension_mod_p: d,
        dimension_q,
        complete: d == n * n && dimension_q == n * n && local,
        basis: kept.into_iter().map(|(w, _)| w).collect(),
        certificate,
        certificate_is_local: local,
        claims,
    })
}

/// Recompute `Σ c_i basis_i` for the unit at flat index `k` and compare.
pub fn check_certificate(report: &Lemma2Report, k: usize) -> Result<bool> {
    let ring = golden_ring(SystemType::B2)?;
    let g = ChevalleyGroup::new(SystemType::B2, &ring)?;
    let n = g.n();
    let gens = generators(&g)?;
    let lookup = |s: &str| gens.iter().find(|(n, _)| n == s).map(|(_, m)| m.clone()).expect("known generator");
    let x = g.x_gen(g.sys.parse_root("e1+e2").expect("valid root"), &ring.one())?.sub(&g.identity());
    let seed = to_q(&x.mul(&x));
    let mut acc = vec![vec![Q::zero(); n]; n];
    for (i, c) in &report.certificate[k] {
        let w = &report.basis[*i];
        let mut m = seed.clone();
        for s in w.left.iter().rev() {
            m = mul(&lookup(s), &m);
        }
        for s in &w.right {
            m = mul(&m, &lookup(s));
        }
        let c: Q = chev_ring::ring::parse_q(c).expect("rational coefficient");
        for (a, b) in acc.iter_mut().flatten().zip(m.iter().flatten()) {
            *a += &c * b;
        }
    }
    Ok(acc == unit(n, k / n, k % n))
}
