//! Basis conventions for the adjoint representation.
//!
//! The structure-constant signs of a Chevalley basis are a choice, and so is
//! the scale of the short root vectors. A [`Frame`] records both: a sign
//! `ε_β = ε_{−β}` per root and a factor `ℓ` by which short root vectors (and
//! the coroots of short simple roots) are rescaled. Generators in a frame are
//!
//! ```text
//! X_β(t) = D · x_β(ε_β t) · D⁻¹,   D = diag(ε_β ℓ^{[β short]} | ℓ^{[α_i short]})
//! ```
//!
//! where `x_β` is the exponential in the native basis. `ℓ = 1` with all signs
//! `+1` is the native frame.

use chev_roots::{RootSystemData, SystemType};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Frame {
    pub ty: SystemType,
    pub ell: i64,
    /// One sign per positive root, in the order of `RootSystemData::positive`.
    pub signs: Vec<i64>,
}

/// Signs and scale that reproduce the printed generator matrices; found by
/// the reconciliation search in `chev-replay`, which re-derives them in its
/// test suite.
const B2_PRINTED: (i64, [i64; 4]) = (2, [-1, 1, 1, 1]);
const G2_PRINTED: (i64, [i64; 6]) = (3, [1, -1, -1, -1, 1, 1]);

impl Frame {
    pub fn native(ty: SystemType) -> Frame {
        let k = RootSystemData::new(ty).positive.len();
        Frame { ty, ell: 1, signs: vec![1; k] }
    }

    /// The committed convention matching the printed matrices.
    pub fn printed(ty: SystemType) -> Frame {
        match ty {
            SystemType::B2 => Frame { ty, ell: B2_PRINTED.0, signs: B2_PRINTED.1.to_vec() },
            SystemType::G2 => Frame { ty, ell: G2_PRINTED.0, signs: G2_PRINTED.1.to_vec() },
        }
    }

    pub fn new(ty: SystemType, ell: i64, signs: Vec<i64>) -> Frame {
        assert!(ell >= 1);
        assert!(signs.iter().all(|s| s.abs() == 1));
        assert_eq!(signs.len(), RootSystemData::new(ty).positive.len());
        Frame { ty, ell, signs }
    }

    /// `ε_β` for the root at basis position `k`.
    pub fn sign_at(&self, sys: &RootSystemData, k: usize) -> i64 {
        let r = sys.all[k];
        let p = if sys.is_positive(r) { r } else { chev_roots::neg(r) };
        self.signs[sys.positive.iter().position(|&q| q == p).unwrap()]
    }

    /// Diagonal of `D`.
    pub fn diagonal(&self, sys: &RootSystemData) -> Vec<i64> {
        let long = sys.long_length();
        let scale = |r| if chev_roots::inner(r, r) < long { self.ell } else { 1 };
        let mut d: Vec<i64> = (0..sys.num_roots()).map(|k| self.sign_at(sys, k) * scale(sys.all[k])).collect();
        d.extend(sys.simple.iter().map(|&a| scale(a)));
        d
    }

    /// Every frame with `ℓ ∈ ells` and arbitrary signs, in a fixed order.
    pub fn enumerate(ty: SystemType, ells: &[i64]) -> Vec<Frame> {
        let k = RootSystemData::new(ty).positive.len();
        let mut out = Vec::new();
        for &ell in ells {
            for bits in 0..1u32 << k {
                let signs = (0..k).map(|b| if bits >> b & 1 == 1 { -1 } else { 1 }).collect();
                out.push(Frame { ty, ell, signs });
            }
        }
        out
    }
}
