//! Involutions over local rings and the free modules they split off.
//!
//! For `a² = 1` over a local ring with `1/2`, `e = ½(1 + a)` is idempotent and
//! `V = eV ⊕ (1 − e)V`. Both summands are projective, hence free, and a basis
//! of each is read off from columns of `e` (resp. `1 − e`) whose residues are
//! independent over the residue field: by Nakayama they span.
//!
//! ```
//! use chev_involution::split_module;
//! use chev_ring::{Mat, Ring};
//!
//! let r = Ring::parse("zmod:5^2", &[2]).unwrap();
//! let a = Mat::diag(&r, vec![r.from_i64(-1), r.one(), r.one()]);
//! let s = split_module(&a).unwrap();
//! assert_eq!((s.rank0, s.rank1), (2, 1));
//! ```

use chev_ring::{Mat, Ring, RingError, Value};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("matrix is not an involution: a² ≠ 1")]
    NotInvolution,
    #[error("2 is not a unit in {0}")]
    NoHalf(String),
    #[error("involutions differ modulo the maximal ideal at {0} positions")]
    ResidueMismatch(usize),
}

pub type Result<T> = std::result::Result<T, InvolutionError>;

/// `V = eV ⊕ (1 − e)V` with free bases; vectors are coordinate columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleSplitting {
    pub idempotent: Mat,
    /// Basis of `eV`, the `+1` eigenmodule.
    pub basis0: Vec<Vec<Value>>,
    /// Basis of `(1 − e)V`, the `−1` eigenmodule.
    pub basis1: Vec<Vec<Value>>,
    pub rank0: usize,
    pub rank1: usize,
}

impl ModuleSplitting {
    /// The concatenated basis as the columns of a square matrix.
    pub fn basis_matrix(&self) -> Mat {
        columns_to_mat(self.idempotent.ring(), self.basis0.iter().chain(&self.basis1))
    }
}

fn columns_to_mat<'a>(r: &Ring, cols: impl Iterator<Item = &'a Vec<Value>>) -> Mat {
    let cols: Vec<&Vec<Value>> = cols.collect();
    let n = cols.first().map_or(0, |c| c.len());
    Mat::from_fn(r, n, cols.len(), |i, j| cols[j][i].clone())
}

fn column(m: &Mat, j: usize) -> Vec<Value> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

fn check_involution(a: &Mat) -> Result<()> {
    if !a.is_square() || !a.mul(a).is_identity() {
        return Err(InvolutionError::NotInvolution);
    }
    Ok(())
}

/// `e = ½(1 + a)`.
pub fn idempotent_of(a: &Mat) -> Result<Mat> {
    check_involution(a)?;
    let r = a.ring();
    let half = r.from_frac(1, 2).map_err(|_| InvolutionError::NoHalf(r.to_string()))?;
    Ok(Mat::identity(r, a.rows()).add(a).scale(&half))
}

/// Columns of `p` (idempotent) whose residues are independent: a free basis
/// of `pV`.
fn free_basis(p: &Mat) -> Vec<Vec<Value>> {
    let pivots = p.residue().rref();
    pivots.into_iter().map(|j| column(p, j)).collect()
}

pub fn split_module(a: &Mat) -> Result<ModuleSplitting> {
    let e = idempotent_of(a)?;
    let f = Mat::identity(e.ring(), e.rows()).sub(&e);
    let basis0 = free_basis(&e);
    let basis1 = free_basis(&f);
    Ok(ModuleSplitting { rank0: basis0.len(), rank1: basis1.len(), idempotent: e, basis0, basis1 })
}

/// Residue compatibility: the residues of `basis0` (`basis1`) lie in the
/// `+1` (`−1`) eigenspace of `ā` and span it.
pub fn residue_compatible(a: &Mat, s: &ModuleSplitting) -> Result<bool> {
    let abar = a.residue();
    let k = abar.ring().clone();
    let n = abar.rows();
    let one = Mat::identity(&k, n);
    let mut ok = true;
    for (basis, sign) in [(&s.basis0, 1), (&s.basis1, -1)] {
        let target = abar.sub(&one.scale(&k.from_i64(sign)));
        let vs: Vec<Vec<Value>> = basis.iter().map(|v| v.iter().map(|x| a.ring().residue(x)).collect()).collect();
        ok &= vs.iter().all(|v| target.mat_vec(v).iter().all(|x| k.is_zero(x)));
        let eigen_dim = target.nullspace()?.len();
        let span = if vs.is_empty() { 0 } else { columns_to_mat(&k, vs.iter()).rank()? };
        ok &= span == vs.len() && span == eigen_dim;
    }
    Ok(ok)
}

/// A basis adapted to `b` lifted from one adapted to `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisLift {
    pub split_a: ModuleSplitting,
    /// `f_i = e_b·e_i` for `e_i` in `basis0`, `(1 − e_b)·e_i` for `basis1`.
    pub f0: Vec<Vec<Value>>,
    pub f1: Vec<Vec<Value>>,
    /// `T` with `F = E·T`.
    pub transition: Mat,
    pub transition_det: Value,
    pub transition_is_identity_mod_j: bool,
    pub ranks_a: (usize, usize),
    pub ranks_b: (usize, usize),
}

impl BasisLift {
    pub fn ranks_match(&self) -> bool {
        self.ranks_a == self.ranks_b
    }
}

/// For involutions `a ≡ b mod J`: lift `a`'s split basis to `b`. The images
/// under `b`'s projections agree with the `e_i` modulo `J`, so the transition
/// matrix is `≡ 1` and the lifted family is a basis, giving equal ranks.
pub fn lift_basis(a: &Mat, b: &Mat) -> Result<BasisLift> {
    check_involution(b)?;
    let diff = a.residue().diff_positions(&b.residue()).len();
    if diff > 0 {
        return Err(InvolutionError::ResidueMismatch(diff));
    }
    let sa = split_module(a)?;
    let sb = split_module(b)?;
    let r = a.ring().clone();
    let eb = &sb.idempotent;
    let fb = Mat::identity(&r, eb.rows()).sub(eb);
    let f0: Vec<Vec<Value>> = sa.basis0.iter().map(|v| eb.mat_vec(v)).collect();
    let f1: Vec<Vec<Value>> = sa.basis1.iter().map(|v| fb.mat_vec(v)).collect();
    let e = sa.basis_matrix();
    let f = columns_to_mat(&r, f0.iter().chain(&f1));
    let transition = e.inverse()?.mul(&f);
    let transition_det = transition.unit_det().ok_or(RingError::Singular)?;
    let transition_is_identity_mod_j = transition.residue().is_identity();
    Ok(BasisLift {
        ranks_a: (sa.rank0, sa.rank1),
        ranks_b: (sb.rank0, sb.rank1),
        split_a: sa,
        f0,
        f1,
        transition,
        transition_det,
        transition_is_identity_mod_j,
    })
}
