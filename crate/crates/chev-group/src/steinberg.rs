//! Randomized exact verification of the Steinberg relations R1–R6.
//!
//! R2's right-hand side is the product `Π x_{iα+jβ}(c_{ij} tⁱ uʲ)` over
//! `i, j ≥ 1` in increasing order of `i + j` (ties by `i`). The constants are
//! not assumed: they are read off commutators over the p-local rationals by
//! peeling one factor at a time, and must come out as the same integers for
//! every draw.

use chev_ring::{Mat, Ring, Value};
use chev_roots::{add, neg, scale, Root};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::group::ChevalleyGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Fans out over root pairs; identical to `Sequential` when the crate is
    /// built without the `parallel` feature.
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationResult {
    pub relation: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorTerm {
    pub i: i64,
    pub j: i64,
    pub root: String,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorConstants {
    pub alpha: String,
    pub beta: String,
    pub terms: Vec<CommutatorTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinbergReport {
    pub system: String,
    pub ring: String,
    pub samples: usize,
    pub relations: Vec<RelationResult>,
    pub commutator_constants: Vec<CommutatorConstants>,
    /// `(α, β, c)` with `w_α x_β(t) w_α⁻¹ = x_{w_α(β)}(ct)`.
    pub r5_signs: Vec<(String, String, i64)>,
}

impl SteinbergReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.failures.is_empty())
    }
}

/// Pairs `(i, j)` with `iα + jβ` a root, in product order.
pub fn commutator_terms(g: &ChevalleyGroup, a: Root, b: Root) -> Vec<(i64, i64, Root)> {
    let mut out = Vec::new();
    for i in 1..4 {
        for j in 1..4 {
            let r = add(scale(i, a), scale(j, b));
            if g.sys.is_root(r) {
                out.push((i, j, r));
            }
        }
    }
    out.sort_by_key(|&(i, j, _)| (i + j, i));
    out
}

fn commutator(g: &ChevalleyGroup, a: Root, b: Root, t: &Value, u: &Value) -> Result<Mat> {
    let r = g.ring();
    let xa = g.x_gen(a, t)?;
    let xb = g.x_gen(b, u)?;
    Ok(xa.mul(&xb).mul(&g.x_gen(a, &r.neg(t))?).mul(&g.x_gen(b, &r.neg(u))?))
}

fn mono(r: &Ring, c: &Value, t: &Value, u: &Value, i: i64, j: i64) -> Result<Value> {
    Ok(r.mul(c, &r.mul(&r.pow(t, i)?, &r.pow(u, j)?)))
}

/// Integer `c_{ij}` for one commutator, read off over the group's ring
/// (which must contain the rationals' relevant denominators). Returns `None`
/// if some coefficient is not an integer multiple of `tⁱuʲ` or the peeled
/// product does not reproduce the commutator.
fn solve_once(g: &ChevalleyGroup, a: Root, b: Root, t: &Value, u: &Value) -> Result<Option<Vec<i64>>> {
    let r = g.ring();
    let mut rest = commutator(g, a, b, t, u)?;
    let mut cs = Vec::new();
    for (i, j, gam) in commutator_terms(g, a, b) {
        let (row, col, s) = g.param_probe(gam)?;
        let val = rest.get(row, col).clone();
        let coeff = r.mul(&val, &r.inv(&s)?);
        let c = r.mul(&coeff, &r.inv(&mono(r, &r.one(), t, u, i, j)?)?);
        let Some(q) = chev_ring::ring::as_rational(&c) else { return Ok(None) };
        if !q.is_integer() {
            return Ok(None);
        }
        let ci: i64 = match i64::try_from(q.to_integer()) {
            Ok(v) => v,
            Err(_) => return Ok(None),
        };
        rest = g.x_gen(gam, &r.neg(&coeff))?.mul(&rest);
        cs.push(ci);
    }
    Ok(if rest.is_identity() { Some(cs) } else { None })
}

/// Commutator constants for every pair `β ≠ ±α`, solved over `g`'s ring on
/// `draws` random unit pairs. Pairs whose constants are not stable integers
/// are returned in the second component.
pub fn solve_commutator_constants(
    g: &ChevalleyGroup,
    draws: usize,
    seed: u64,
) -> Result<(Vec<(Root, Root, Vec<(i64, i64, Root, i64)>)>, Vec<String>)> {
    let r = g.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for &a in &g.sys.all {
        for &b in &g.sys.all {
            if b == a || b == neg(a) {
                continue;
            }
            let terms = commutator_terms(g, a, b);
            let mut seen: Option<Vec<i64>> = None;
            for _ in 0..draws.max(1) {
                let (t, u) = (r.random_unit(&mut rng), r.random_unit(&mut rng));
                match (solve_once(g, a, b, &t, &u)?, &seen) {
                    (Some(cs), None) => seen = Some(cs),
                    (Some(cs), Some(prev)) if &cs == prev => {}
                    _ => {
                        bad.push(format!("[x_{}, x_{}]", g.sys.name(a), g.sys.name(b)));
                        break;
                    }
                }
            }
            let cs = seen.unwrap_or_default();
            out.push((a, b, terms.iter().zip(cs).map(|(&(i, j, gam), c)| (i, j, gam, c)).collect()));
        }
    }
    Ok((out, bad))
}

type Job = (usize, Root, Root);

/// Verify R1–R6 over `g`'s ring with `samples` random draws per root pair.
///
/// The commutator constants are solved over `zloc` (p-local rationals at a
/// prime where the system's required inverses are units) with 20 draws, and
/// then checked as matrix identities over `g`'s ring.
pub fn check_steinberg(g: &ChevalleyGroup, samples: usize, seed: u64, exec: Exec) -> Result<SteinbergReport> {
    let zloc = Ring::parse("zloc:5", g.ty().required_inverses())?;
    let gq = ChevalleyGroup::with_frame(g.frame.clone(), &zloc)?;
    let (consts, unstable) = solve_commutator_constants(&gq, 20, seed)?;

    let sys = &g.sys;
    let mut jobs: Vec<Job> = Vec::new();
    for &a in &sys.all {
        jobs.push((1, a, a));
        jobs.push((3, a, a));
    }
    for &a in &sys.all {
        for &b in &sys.all {
            if b != a && b != neg(a) {
                jobs.push((2, a, b));
            }
            jobs.push((4, a, b));
            jobs.push((5, a, b));
            jobs.push((6, a, b));
        }
    }
    let run = |(k, job): (usize, &Job)| -> Result<(usize, usize, Vec<String>, Option<i64>)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let (rel, a, b) = *job;
        let cs = consts.iter().find(|(x, y, _)| *x == a && *y == b).map(|c| &c.2);
        let (fails, sign) = check_job(g, rel, a, b, cs, samples, &mut rng)?;
        Ok((rel, samples, fails, sign))
    };
    let indexed: Vec<(usize, &Job)> = jobs.iter().enumerate().collect();
    let results: Vec<Result<_>> = match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            indexed.into_par_iter().map(run).collect()
        }
        _ => indexed.into_iter().map(run).collect(),
    };

    let mut relations: Vec<RelationResult> =
        (1..=6).map(|k| RelationResult { relation: format!("R{k}"), checked: 0, failures: Vec::new() }).collect();
    relations[1].failures.extend(unstable.into_iter().map(|p| format!("{p}: constants not stable integers")));
    let mut r5_signs = Vec::new();
    for (res, &(_, a, b)) in results.into_iter().zip(&jobs) {
        let (rel, n, fails, sign) = res?;
        relations[rel - 1].checked += n;
        relations[rel - 1].failures.extend(fails);
        if let Some(c) = sign {
            r5_signs.push((sys.name(a), sys.name(b), c));
        }
    }
    let commutator_constants = consts
        .iter()
        .map(|(a, b, ts)| CommutatorConstants {
            alpha: sys.name(*a),
            beta: sys.name(*b),
            terms: ts.iter().map(|&(i, j, gam, c)| CommutatorTerm { i, j, root: sys.name(gam), c }).collect(),
        })
        .collect();
    Ok(SteinbergReport {
        system: g.ty().to_string(),
        ring: g.ring().to_string(),
        samples,
        relations,
        commutator_constants,
        r5_signs,
    })
}

fn check_job(
    g: &ChevalleyGroup,
    rel: usize,
    a: Root,
    b: Root,
    consts: Option<&Vec<(i64, i64, Root, i64)>>,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Vec<String>, Option<i64>)> {
    let r = g.ring();
    let sys = &g.sys;
    let (na, nb) = (sys.name(a), sys.name(b));
    let mut fails = Vec::new();
    let mut sign = None;
    let one = r.one();
    let m1 = r.from_i64(-1);
    let (wa, wa_inv) = if rel == 4 || rel == 5 { (Some(g.w_gen(a, &one)?), Some(g.w_gen(a, &m1)?)) } else { (None, None) };
    if rel == 5 {
        let lhs = wa.as_ref().unwrap().mul(&g.x_gen(b, &one)?).mul(wa_inv.as_ref().unwrap());
        let image = sys.reflect(a, b);
        sign = [1, -1].into_iter().find(|&c| g.x_gen(image, &r.from_i64(c)).map(|m| m == lhs).unwrap_or(false));
        if sign.is_none() {
            fails.push(format!("R5 w_{na} x_{nb}(1) w_{na}^-1 is not x_{}(±1)", sys.name(image)));
            return Ok((fails, None));
        }
    }
    for _ in 0..samples {
        let (t, u) = (r.random(rng), r.random(rng));
        let tu = r.random_unit(rng);
        let (ok, what) = match rel {
            1 => (g.x_gen(a, &t)?.mul(&g.x_gen(a, &u)?) == g.x_gen(a, &r.add(&t, &u))?, format!("x_{na}")),
            2 => {
                let lhs = commutator(g, a, b, &t, &u)?;
                let mut rhs = g.identity();
                for &(i, j, gam, c) in consts.map(Vec::as_slice).unwrap_or(&[]) {
                    rhs = rhs.mul(&g.x_gen(gam, &mono(r, &r.from_i64(c), &t, &u, i, j)?)?);
                }
                (lhs == rhs, format!("[x_{na}, x_{nb}]"))
            }
            3 => {
                let w = g.w_gen(a, &tu)?;
                let y = g.x_gen(neg(a), &r.neg(&r.inv(&tu)?))?;
                let alt = y.mul(&g.x_gen(a, &tu)?).mul(&y);
                let ok = w == alt
                    && w.mul(&g.w_gen(a, &r.neg(&tu))?).is_identity()
                    && w == g.w_gen(neg(a), &r.neg(&r.inv(&tu)?))?;
                (ok, format!("w_{na}"))
            }
            4 => {
                let lhs = wa.as_ref().unwrap().mul(&g.h_gen(b, &tu)?).mul(wa_inv.as_ref().unwrap());
                (lhs == g.h_gen(sys.reflect(a, b), &tu)?, format!("w_{na} h_{nb} w_{na}^-1"))
            }
            5 => {
                let lhs = wa.as_ref().unwrap().mul(&g.x_gen(b, &t)?).mul(wa_inv.as_ref().unwrap());
                let c = r.from_i64(sign.unwrap());
                (lhs == g.x_gen(sys.reflect(a, b), &r.mul(&c, &t))?, format!("w_{na} x_{nb} w_{na}^-1"))
            }
            6 => {
                let lhs = g.h_gen(a, &tu)?.mul(&g.x_gen(b, &u)?).mul(&g.h_gen(a, &r.inv(&tu)?)?);
                let e = r.pow(&tu, sys.pairing(b, a))?;
                (lhs == g.x_gen(b, &r.mul(&e, &u))?, format!("h_{na} x_{nb} h_{na}^-1"))
            }
            _ => unreachable!(),
        };
        if !ok {
            fails.push(format!("R{rel} {what} at t={}, u={}, s={}", r.format(&t), r.format(&u), r.format(&tu)));
            if fails.len() >= 3 {
                break;
            }
        }
    }
    Ok((fails, sign))
}
