//! A Chevalley basis realized in the smallest faithful representation.
//!
//! For B2 and G2 the weights of that representation are the short roots
//! together with 0, each with multiplicity one, so every e_i is a signed
//! weight-shift. The signs are searched exhaustively (a handful of
//! candidates); the f_i follow from `[e_i, f_i] = h_i` along each α_i-string,
//! and a candidate is accepted once `[e_i, f_j] = 0` and the Serre relations
//! hold. Non-simple root vectors are then generated in height order by
//! `x_γ = [x_{α_i}, x_β]/(p+1)`, `x_{−γ} = −[x_{−α_i}, x_{−β}]/(p+1)` with the
//! smallest admissible simple index i, which makes every such (α_i, β) pair
//! carry a positive structure constant.

use std::collections::BTreeMap;

use chev_roots::{add, inner, neg, sub, Root, RootSystemData, ZERO};
use num_rational::Rational64;
use num_traits::{One, Zero};

pub type RMat = Vec<Vec<Rational64>>;

fn zeros(n: usize) -> RMat {
    vec![vec![Rational64::zero(); n]; n]
}

fn mul(a: &RMat, b: &RMat) -> RMat {
    let n = a.len();
    let mut c = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

pub fn bracket(a: &RMat, b: &RMat) -> RMat {
    let (ab, ba) = (mul(a, b), mul(b, a));
    ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

fn scaled(a: &RMat, c: Rational64) -> RMat {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

fn is_zero(a: &RMat) -> bool {
    a.iter().flatten().all(Zero::is_zero)
}

/// Root vectors and Cartan elements as matrices on the weight basis.
pub struct SmallRep {
    pub weights: Vec<Root>,
    pub x: BTreeMap<Root, RMat>,
    pub h: [RMat; 2],
}

impl SmallRep {
    pub fn build(sys: &RootSystemData) -> SmallRep {
        let short = sys.all.iter().map(|&r| inner(r, r)).min().unwrap();
        let mut weights: Vec<Root> = sys.all.iter().copied().filter(|&r| inner(r, r) == short).collect();
        weights.push(ZERO);
        let n = weights.len();
        let idx = |w: Root| weights.iter().position(|&v| v == w);
        let h: [RMat; 2] = std::array::from_fn(|i| {
            let mut m = zeros(n);
            for (k, &w) in weights.iter().enumerate() {
                m[k][k] = Rational64::from_integer(if w == ZERO { 0 } else { sys.pairing(w, sys.simple[i]) });
            }
            m
        });
        // α_i-strings listed bottom-up; each consecutive pair is an edge of e_i.
        let strings: [Vec<Vec<usize>>; 2] = std::array::from_fn(|i| {
            let a = sys.simple[i];
            weights
                .iter()
                .filter(|&&w| idx(sub(w, a)).is_none())
                .map(|&w| {
                    let mut s = vec![idx(w).unwrap()];
                    let mut cur = w;
                    while let Some(k) = idx(add(cur, a)) {
                        s.push(k);
                        cur = add(cur, a);
                    }
                    s
                })
                .collect()
        });
        let edges: [usize; 2] = std::array::from_fn(|i| strings[i].iter().map(|s| s.len() - 1).sum());
        let make = |i: usize, signs: &[i64]| -> (RMat, RMat) {
            let (mut e, mut f) = (zeros(n), zeros(n));
            let mut k = 0;
            for s in &strings[i] {
                let mut prev = Rational64::zero();
                for j in 0..s.len() - 1 {
                    let sg = Rational64::from_integer(signs[k]);
                    k += 1;
                    e[s[j + 1]][s[j]] = sg;
                    // s_j c_j = s_{j-1} c_{j-1} − μ_j(h_i)
                    let sc = prev - h[i][s[j]][s[j]];
                    f[s[j]][s[j + 1]] = sc / sg;
                    prev = sc;
                }
            }
            (e, f)
        };
        let sign_vectors = |len: usize| -> Vec<Vec<i64>> {
            (0..1usize << len.saturating_sub(1))
                .map(|bits| (0..len).map(|b| if b > 0 && bits >> (b - 1) & 1 == 1 { -1 } else { 1 }).collect())
                .collect()
        };
        for s0 in sign_vectors(edges[0]) {
            for s1 in sign_vectors(edges[1]) {
                let (e0, f0) = make(0, &s0);
                let (e1, f1) = make(1, &s1);
                let e = [e0, e1];
                let f = [f0, f1];
                let ok_cartan = (0..2).all(|i| bracket(&e[i], &f[i]) == h[i]);
                let ok_cross = is_zero(&bracket(&e[0], &f[1])) && is_zero(&bracket(&e[1], &f[0]));
                let serre = (0..2).all(|i| {
                    let j = 1 - i;
                    let m = 1 - sys.pairing(sys.simple[j], sys.simple[i]);
                    let (mut xe, mut xf) = (e[j].clone(), f[j].clone());
                    for _ in 0..m {
                        xe = bracket(&e[i], &xe);
                        xf = bracket(&f[i], &xf);
                    }
                    is_zero(&xe) && is_zero(&xf)
                });
                if ok_cartan && ok_cross && serre {
                    return Self::complete(sys, weights, e, f, h);
                }
            }
        }
        unreachable!("a rank-two Chevalley basis always exists")
    }

    fn complete(sys: &RootSystemData, weights: Vec<Root>, e: [RMat; 2], f: [RMat; 2], h: [RMat; 2]) -> SmallRep {
        let mut x = BTreeMap::new();
        for i in 0..2 {
            x.insert(sys.simple[i], e[i].clone());
            x.insert(neg(sys.simple[i]), f[i].clone());
        }
        let mut pos = sys.positive.clone();
        pos.sort_by_key(|&r| sys.height(r));
        for g in pos {
            if x.contains_key(&g) {
                continue;
            }
            let (i, b) = (0..2)
                .map(|i| (i, sub(g, sys.simple[i])))
                .find(|&(_, b)| x.contains_key(&b))
                .expect("every non-simple positive root has a lower neighbour");
            let a = sys.simple[i];
            let p = sys.root_string(a, b).unwrap().0;
            let c = Rational64::one() / Rational64::from_integer(p + 1);
            x.insert(g, scaled(&bracket(&x[&a], &x[&b]), c));
            x.insert(neg(g), scaled(&bracket(&x[&neg(a)], &x[&neg(b)]), -c));
        }
        SmallRep { weights, x, h }
    }

    /// Coordinates of `z` in the basis (root vectors in `sys.all` order, then
    /// h_1, h_2). Panics if `z` is not in the span.
    pub fn express(&self, sys: &RootSystemData, z: &RMat) -> Vec<Rational64> {
        let n = self.weights.len();
        let mut v = vec![Rational64::zero(); sys.n()];
        for (k, r) in sys.all.iter().enumerate() {
            let xr = &self.x[r];
            let (i, j) = (0..n * n).map(|t| (t / n, t % n)).find(|&(i, j)| !xr[i][j].is_zero()).unwrap();
            v[k] = z[i][j] / xr[i][j];
        }
        // Cartan part from two weights with independent (h1, h2) values.
        let d: Vec<(Rational64, Rational64)> = (0..n).map(|k| (self.h[0][k][k], self.h[1][k][k])).collect();
        let (p, q) = (0..n)
            .flat_map(|p| (0..n).map(move |q| (p, q)))
            .find(|&(p, q)| d[p].0 * d[q].1 - d[p].1 * d[q].0 != Rational64::zero())
            .unwrap();
        let det = d[p].0 * d[q].1 - d[p].1 * d[q].0;
        let (zp, zq) = (z[p][p], z[q][q]);
        let m = sys.num_roots();
        v[m] = (zp * d[q].1 - zq * d[p].1) / det;
        v[m + 1] = (d[p].0 * zq - d[q].0 * zp) / det;
        let mut rebuilt = zeros(n);
        for (k, r) in sys.all.iter().enumerate() {
            add_scaled(&mut rebuilt, &self.x[r], v[k]);
        }
        add_scaled(&mut rebuilt, &self.h[0], v[m]);
        add_scaled(&mut rebuilt, &self.h[1], v[m + 1]);
        assert!(&rebuilt == z, "matrix is not in the span of the Chevalley basis");
        v
    }

    pub fn basis(&self, sys: &RootSystemData) -> Vec<RMat> {
        let mut b: Vec<RMat> = sys.all.iter().map(|r| self.x[r].clone()).collect();
        b.extend(self.h.iter().cloned());
        b
    }
}

fn add_scaled(acc: &mut RMat, m: &RMat, c: Rational64) {
    if c.is_zero() {
        return;
    }
    for (r, s) in acc.iter_mut().zip(m) {
        for (a, b) in r.iter_mut().zip(s) {
            *a += b * c;
        }
    }
}
