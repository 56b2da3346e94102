use std::collections::BTreeMap;

use chev_roots::{add, neg, Root, RootSystemData, SystemType};
use num_traits::Zero;
use serde::Serialize;

use crate::rep::{bracket, SmallRep};

pub type IntMat = Vec<Vec<i64>>;

/// Structure constants of a Chevalley basis `{x_α; h_1, h_2}`.
///
/// Basis positions follow [`RootSystemData::all`], then h_1, h_2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureTable {
    #[serde(skip)]
    pub sys: RootSystemData,
    /// `[x_α, x_β] = N_{αβ} x_{α+β}` keyed by root indices, for α+β ∈ Φ.
    pub n: BTreeMap<(usize, usize), i64>,
    /// `[x_α, x_{−α}] = c_1 h_1 + c_2 h_2`, keyed by the index of α.
    pub cartan: BTreeMap<usize, [i64; 2]>,
}

/// A basis element of the Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisElement {
    X(Root),
    H(usize),
}

impl StructureTable {
    pub fn new(ty: SystemType) -> StructureTable {
        let sys = RootSystemData::new(ty);
        let rep = SmallRep::build(&sys);
        let m = sys.num_roots();
        let mut n = BTreeMap::new();
        let mut cartan = BTreeMap::new();
        let int = |q: num_rational::Rational64| -> i64 {
            assert!(q.is_integer(), "structure constants are integral");
            q.to_integer()
        };
        for (i, &a) in sys.all.iter().enumerate() {
            for (j, &b) in sys.all.iter().enumerate() {
                let v = rep.express(&sys, &bracket(&rep.x[&a], &rep.x[&b]));
                if b == neg(a) {
                    cartan.insert(i, [int(v[m]), int(v[m + 1])]);
                } else if let Some(k) = sys.index(add(a, b)) {
                    n.insert((i, j), int(v[k]));
                } else {
                    debug_assert!(v.iter().all(Zero::is_zero));
                }
            }
        }
        StructureTable { sys, n, cartan }
    }

    pub fn dim(&self) -> usize {
        self.sys.n()
    }

    pub fn index_of(&self, e: BasisElement) -> usize {
        match e {
            BasisElement::X(r) => self.sys.index(r).expect("root of this system"),
            BasisElement::H(i) => self.sys.num_roots() + i,
        }
    }

    pub fn n_const(&self, a: Root, b: Root) -> Option<i64> {
        self.n.get(&(self.sys.index(a)?, self.sys.index(b)?)).copied()
    }

    /// Coordinates of `[b_i, b_j]` for basis indices i, j.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<i64> {
        let dim = self.dim();
        let m = self.sys.num_roots();
        let mut v = vec![0; dim];
        match (i < m, j < m) {
            (true, true) => {
                let (a, b) = (self.sys.all[i], self.sys.all[j]);
                if b == neg(a) {
                    let c = self.cartan[&i];
                    v[m] = c[0];
                    v[m + 1] = c[1];
                } else if let Some(&c) = self.n.get(&(i, j)) {
                    v[self.sys.index(add(a, b)).unwrap()] = c;
                }
            }
            (false, true) => v[j] = self.sys.pairing(self.sys.all[j], self.sys.simple[i - m]),
            (true, false) => v[i] = -self.sys.pairing(self.sys.all[i], self.sys.simple[j - m]),
            (false, false) => {}
        }
        v
    }

    /// Matrix of `ad b_i` in the ordered basis (column j holds `[b_i, b_j]`).
    pub fn ad_index(&self, i: usize) -> IntMat {
        let dim = self.dim();
        let mut m = vec![vec![0; dim]; dim];
        for j in 0..dim {
            for (r, c) in self.bracket(i, j).into_iter().enumerate() {
                m[r][j] = c;
            }
        }
        m
    }

    pub fn adjoint_matrix(&self, e: BasisElement) -> IntMat {
        self.ad_index(self.index_of(e))
    }

    /// Coroot α∨ = 2α/(α,α) in terms of the simple coroots.
    pub fn coroot_expansion(&self, a: Root) -> [i64; 2] {
        let (i, j) = self.sys.simple_coeffs(a);
        let len = |r| chev_roots::inner(r, r);
        let [s1, s2] = self.sys.simple;
        // α∨ = Σ c_k α_k (α_k,α_k)/(α,α) · α_k∨
        [i * len(s1) / len(a), j * len(s2) / len(a)]
    }

    /// The same table with `N_{αβ}` and `N_{βα}` negated; used to exercise
    /// the verifier.
    pub fn with_flipped_sign(&self, a: Root, b: Root) -> StructureTable {
        let mut t = self.clone();
        let (i, j) = (self.sys.index(a).unwrap(), self.sys.index(b).unwrap());
        for k in [(i, j), (j, i)] {
            if let Some(v) = t.n.get_mut(&k) {
                *v = -*v;
            }
        }
        t
    }
}
