//! The B2 linear system: Con1–Con5 linearized in `y_1 … y_76`.
//!
//! Each pattern unknown in the y-list becomes `base + y_k` over `jet:76`;
//! the residual `lhs − rhs` of each condition then has, at every entry, a
//! constant part (zero, since the conditions hold at the true generators)
//! and a linear form in the `y`, which is the row taken at a listed position.

use chev_group::{ChevalleyGroup, Frame};
use chev_ring::linalg::{bareiss_det, nullspace_q, rank_q};
use chev_ring::{Mat, Ring, Q};
use chev_roots::SystemType;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::conditions::{b2_conditions, condition_residual, ConditionSpec};
use crate::error::{ReplayError, Result};
use crate::pattern::SymbolicPattern;
use crate::shapes::{build_pattern, y_index, Y_LIST};

/// Where a row of the system comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowTag {
    pub condition: String,
    pub position: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem76 {
    pub matrix: Vec<Vec<i64>>,
    pub rows: Vec<RowTag>,
    pub columns: Vec<&'static str>,
    /// Residual entries (condition, 1-based position) with a non-zero
    /// constant part, over the whole matrix and not only listed positions.
    pub nonzero_constants: Vec<RowTag>,
    /// Linear forms of every residual entry of every condition (5 × 100
    /// rows), listed or not.
    pub all_rows: Vec<Vec<i64>>,
}

fn jet_ring() -> Result<Ring> {
    Ok(Ring::parse(&format!("jet:{}", Y_LIST.len()), SystemType::B2.required_inverses())?)
}

/// Both B2 patterns over `jet:76`.
pub fn b2_jet_patterns(ring: &Ring) -> Result<(Mat, Mat)> {
    let m = |n: &str| -> Result<Mat> { build_pattern(n)?.to_jet(ring, &y_index) };
    Ok((m("x_e2")?, m("x_e1e2")?))
}

/// Residuals of Con1–Con5 over `jet:76` in the committed frame.
pub fn b2_residuals() -> Result<Vec<(ConditionSpec, Mat)>> {
    b2_residuals_in(Frame::printed(SystemType::B2))
}

/// Residuals of Con1–Con5 with the fixed generators taken in `frame`.
pub fn b2_residuals_in(frame: Frame) -> Result<Vec<(ConditionSpec, Mat)>> {
    let ring = jet_ring()?;
    let g = ChevalleyGroup::with_frame(frame, &ring)?;
    let (xe2, xb) = b2_jet_patterns(&ring)?;
    let lookup = |n: &str| match n {
        "x_e2" => Some(xe2.clone()),
        "x_e1e2" => Some(xb.clone()),
        _ => None,
    };
    b2_conditions(&g).into_iter().map(|c| Ok((c.clone(), condition_residual(&g, &c, &lookup)?))).collect()
}

fn to_i64(q: &Q) -> Result<i64> {
    if !q.is_integer() {
        return Err(ReplayError::Fixture("det76".into(), format!("non-integral coefficient {q}")));
    }
    q.to_integer().to_i64().ok_or_else(|| ReplayError::Fixture("det76".into(), "coefficient overflow".into()))
}

pub fn linear_system_76() -> Result<LinearSystem76> {
    linear_system_76_in(Frame::printed(SystemType::B2))
}

pub fn linear_system_76_in(frame: Frame) -> Result<LinearSystem76> {
    let mut matrix = Vec::new();
    let mut rows = Vec::new();
    let mut nonzero_constants = Vec::new();
    let mut all_rows = Vec::new();
    for (c, res) in b2_residuals_in(frame)? {
        let r = res.ring().clone();
        for i in 0..res.rows() {
            for j in 0..res.cols() {
                let (k, l) = r.jet_linear_coeffs(res.get(i, j))?;
                if !k.is_zero() {
                    nonzero_constants.push(RowTag { condition: c.id.into(), position: (i + 1, j + 1) });
                }
                all_rows.push(l.iter().map(to_i64).collect::<Result<Vec<_>>>()?);
            }
        }
        for &(i, j) in &c.positions {
            let (_, l) = r.jet_linear_coeffs(res.get(i - 1, j - 1))?;
            matrix.push(l.iter().map(to_i64).collect::<Result<Vec<_>>>()?);
            rows.push(RowTag { condition: c.id.into(), position: (i, j) });
        }
    }
    Ok(LinearSystem76 {
        matrix,
        rows,
        columns: Y_LIST.iter().map(|(n, _)| *n).collect(),
        nonzero_constants,
        all_rows,
    })
}

impl LinearSystem76 {
    pub fn is_square(&self) -> bool {
        self.matrix.len() == self.columns.len() && self.matrix.iter().all(|r| r.len() == self.columns.len())
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.matrix.iter().flatten().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn rational(&self) -> Vec<Vec<Q>> {
        to_rational(&self.matrix)
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let m: Vec<Vec<BigInt>> = self.matrix.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        bareiss_det(&m)
    }

    pub fn rank(&self) -> usize {
        rank_q(&self.rational())
    }

    /// Integer basis of the rational kernel, each vector scaled to coprime
    /// integers.
    pub fn kernel(&self) -> Vec<Vec<i64>> {
        nullspace_q(&self.rational()).into_iter().map(|v| primitive(&v)).collect()
    }

    /// Rank of the system formed by every residual entry: an upper bound
    /// for the rank of any selection of positions.
    pub fn full_rank(&self) -> usize {
        rank_q(&to_rational(&self.all_rows))
    }

    pub fn full_kernel(&self) -> Vec<Vec<i64>> {
        nullspace_q(&to_rational(&self.all_rows)).into_iter().map(|v| primitive(&v)).collect()
    }

    /// Dimension of the solution space over `F_p`.
    pub fn kernel_dim_mod(&self, p: u64) -> Result<usize> {
        let ring = Ring::parse(&format!("fp:{p}"), &[])?;
        let m = Mat::from_q(&ring, &self.rational())?;
        Ok(self.columns.len() - m.rank()?)
    }

    /// Rows that mention column `name`, by tag.
    pub fn column_support(&self, name: &str) -> Vec<&RowTag> {
        let k = self.columns.iter().position(|c| *c == name).expect("known column");
        self.rows.iter().zip(&self.matrix).filter(|(_, r)| r[k] != 0).map(|(t, _)| t).collect()
    }
}

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect()
}

fn primitive(v: &[Q]) -> Vec<i64> {
    let den = v.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    let lead_neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.iter()
        .map(|x| {
            let y = (x / &g).to_i64().expect("small kernel entries");
            if lead_neg { -y } else { y }
        })
        .collect()
}

/// Sparse rendering of a kernel vector over the y-list names.
pub fn named(v: &[i64]) -> Vec<(String, i64)> {
    v.iter().zip(Y_LIST).filter(|(x, _)| **x != 0).map(|(x, (n, _))| (n.to_string(), *x)).collect()
}

/// Evidence that a kernel direction is a symmetry rather than a lost
/// equation: a matrix `Z` commuting with `w_{e1−e2}(1)` and `w_{e2}(1)` such
/// that moving the y's along the direction changes each pattern `X` by
/// `[Z, X]` to first order. Conjugation by `1 + εZ` fixes the `w_i` and
/// preserves every word equation, so no choice of positions can detect it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralizerWitness {
    pub direction: Vec<(String, i64)>,
    /// Non-zero entries (1-based) of `Z`, as `(row, col, value)`.
    pub z: Vec<(usize, usize, String)>,
}

/// Linear part of a pattern matrix along a y-direction, as rationals.
fn pattern_derivative(p: &SymbolicPattern, v: &[i64]) -> Vec<Vec<Q>> {
    let n = p.n();
    let mut d = vec![vec![Q::zero(); n]; n];
    for (i, row) in p.entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            for (c, u) in &e.terms {
                if let Some(k) = y_index(u) {
                    d[i][j] += c * Q::from_integer(v[k].into());
                }
            }
        }
    }
    d
}

/// Solve for `Z` with `[Z, w] = 0` for the fixed Weyl elements and
/// `[Z, X] = dX` for both patterns; `None` when no such `Z` exists.
pub fn centralizer_witness(v: &[i64]) -> Result<Option<CentralizerWitness>> {
    let ring = crate::golden::golden_ring(SystemType::B2)?;
    let g = ChevalleyGroup::new(SystemType::B2, &ring)?;
    let root = |s: &str| g.sys.parse_root(s).expect("valid root");
    let q = |m: &Mat| crate::pattern::to_q(m);
    let n = g.n();
    let mut eqs: Vec<(Vec<Vec<Q>>, Vec<Vec<Q>>)> = Vec::new();
    for r in ["e1-e2", "e2"] {
        eqs.push((q(&g.w_gen(root(r), &ring.one())?), vec![vec![Q::zero(); n]; n]));
    }
    for name in ["x_e2", "x_e1e2"] {
        let p = build_pattern(name)?;
        eqs.push((p.specialize(), pattern_derivative(&p, v)));
    }
    // Unknown z[a][b] at column a*n + b; [Z, M]_{ij} = Σ_k z_ik M_kj − M_ik z_kj.
    let mut a: Vec<Vec<Q>> = Vec::new();
    for (m, rhs) in &eqs {
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Q::zero(); n * n + 1];
                for k in 0..n {
                    row[i * n + k] += &m[k][j];
                    row[k * n + j] -= &m[i][k];
                }
                row[n * n] = rhs[i][j].clone();
                a.push(row);
            }
        }
    }
    let pivots = chev_ring::linalg::rref_q(&mut a);
    if pivots.contains(&(n * n)) {
        return Ok(None);
    }
    let mut z = vec![Q::zero(); n * n];
    for (r, &c) in pivots.iter().enumerate() {
        z[c] = a[r][n * n].clone();
    }
    let entries = z
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k / n + 1, k % n + 1, x.to_string()))
        .collect();
    Ok(Some(CentralizerWitness { direction: named(v), z: entries }))
}

/// Everything reported about the system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Det76Report {
    pub rows: usize,
    pub cols: usize,
    pub rows_per_condition: Vec<(String, usize)>,
    pub max_abs_entry: i64,
    pub det: String,
    pub rank: usize,
    pub expected_abs_det: String,
    pub det_matches: bool,
    pub nonzero_constants: usize,
    /// Kernel dimension of the listed system over Q, F_5 and F_7.
    pub kernel_dim: usize,
    pub kernel_dim_f5: usize,
    pub kernel_dim_f7: usize,
    /// Rank when every residual entry is used.
    pub full_rank: usize,
    /// Kernel of the full system, each with its centralizer witness.
    pub full_kernel: Vec<Vec<(String, i64)>>,
    pub witnesses: Vec<Option<CentralizerWitness>>,
}

impl Det76Report {
    /// Every direction the full system misses is explained by a symmetry,
    /// so no choice of 76 positions can give a non-zero determinant.
    pub fn rank_deficiency_certified(&self) -> bool {
        self.full_rank + self.full_kernel.len() == self.cols && self.witnesses.iter().all(Option::is_some)
    }
}

/// `2^36`, the printed absolute value of the determinant.
pub fn expected_abs_det() -> BigInt {
    BigInt::one() << 36
}

pub fn det76_report() -> Result<Det76Report> {
    let s = linear_system_76()?;
    let det = s.det();
    let full_kernel = s.full_kernel();
    let mut per: Vec<(String, usize)> = Vec::new();
    for t in &s.rows {
        match per.last_mut() {
            Some((c, k)) if *c == t.condition => *k += 1,
            _ => per.push((t.condition.clone(), 1)),
        }
    }
    Ok(Det76Report {
        rows: s.matrix.len(),
        cols: s.columns.len(),
        rows_per_condition: per,
        max_abs_entry: s.max_abs_entry(),
        det_matches: det.abs() == expected_abs_det(),
        det: det.to_string(),
        rank: s.rank(),
        expected_abs_det: expected_abs_det().to_string(),
        nonzero_constants: s.nonzero_constants.len(),
        kernel_dim: s.kernel().len(),
        kernel_dim_f5: s.kernel_dim_mod(5)?,
        kernel_dim_f7: s.kernel_dim_mod(7)?,
        full_rank: s.full_rank(),
        witnesses: full_kernel.iter().map(|v| centralizer_witness(v)).collect::<Result<_>>()?,
        full_kernel: full_kernel.iter().map(|v| named(v)).collect(),
    })
}
