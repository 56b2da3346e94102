use chev_algebra::{BasisElement, IntMat, StructureTable};
use chev_ring::{Mat, Ring, Value, Q};
use chev_roots::{neg, Root, RootSystemData, SystemType};
use num_traits::Zero;

use crate::error::{GroupError, Result};
use crate::frame::Frame;

/// `Σ_k t^k M_k` split by power; entries are `(row, col, value)`.
type Series = Vec<Vec<(usize, usize, Value)>>;

/// A character of the root lattice, given by its values on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusCharacter {
    pub values: [Value; 2],
}

/// The adjoint elementary Chevalley group of one type over one ring, in a
/// fixed [`Frame`].
#[derive(Debug, Clone)]
pub struct ChevalleyGroup {
    pub sys: RootSystemData,
    pub table: StructureTable,
    pub frame: Frame,
    ring: Ring,
    series: Vec<Series>,
    /// `w_α(1)⁻¹ = w_α(−1)` per root, shared by every `h_α(t)`.
    w_inv1: Vec<Mat>,
}

fn imul(a: &IntMat, b: &IntMat) -> IntMat {
    chev_algebra::int_mul(a, b)
}

/// Rational matrices `D (ε ad x_β)^k / k! D⁻¹`, k = 1.., for every root.
pub fn frame_series(table: &StructureTable, frame: &Frame) -> Vec<Vec<Vec<Vec<Q>>>> {
    let sys = &table.sys;
    let d = frame.diagonal(sys);
    (0..sys.num_roots())
        .map(|k| {
            let ad = table.adjoint_matrix(BasisElement::X(sys.all[k]));
            let eps = frame.sign_at(sys, k);
            let mut out = Vec::new();
            let mut pow = ad.clone();
            let mut fact = 1i64;
            let mut e = eps;
            for j in 1.. {
                if pow.iter().flatten().all(|&v| v == 0) {
                    break;
                }
                fact *= j;
                let m: Vec<Vec<Q>> = (0..pow.len())
                    .map(|r| {
                        (0..pow.len())
                            .map(|c| Q::new((pow[r][c] * e * d[r]).into(), (fact * d[c]).into()))
                            .collect()
                    })
                    .collect();
                out.push(m);
                pow = imul(&pow, &ad);
                e *= eps;
            }
            out
        })
        .collect()
}

impl ChevalleyGroup {
    /// The group in the committed printed-matrix frame.
    pub fn new(ty: SystemType, ring: &Ring) -> Result<ChevalleyGroup> {
        Self::with_frame(Frame::printed(ty), ring)
    }

    pub fn with_frame(frame: Frame, ring: &Ring) -> Result<ChevalleyGroup> {
        let ty = frame.ty;
        for &u in ty.required_inverses() {
            if !ring.is_unit(&ring.from_i64(u)) {
                return Err(GroupError::MissingInverse { system: ty, inverse: u, ring: ring.to_string() });
            }
        }
        let table = StructureTable::new(ty);
        let series = frame_series(&table, &frame)
            .into_iter()
            .map(|ms| {
                ms.into_iter()
                    .map(|m| {
                        let mut s = Vec::new();
                        for (i, row) in m.iter().enumerate() {
                            for (j, q) in row.iter().enumerate() {
                                if !q.is_zero() {
                                    s.push((i, j, ring.from_q(q)?));
                                }
                            }
                        }
                        Ok(s)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut g = ChevalleyGroup { sys: table.sys.clone(), table, frame, ring: ring.clone(), series, w_inv1: Vec::new() };
        let m1 = ring.from_i64(-1);
        g.w_inv1 = g.sys.all.iter().map(|&a| g.w_gen(a, &m1)).collect::<Result<_>>()?;
        Ok(g)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ty(&self) -> SystemType {
        self.sys.ty
    }

    pub fn n(&self) -> usize {
        self.sys.n()
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(&self.ring, self.n())
    }

    fn root_index(&self, a: Root) -> Result<usize> {
        self.sys.index(a).ok_or_else(|| GroupError::NotARoot(format!("{a:?}")))
    }

    fn unit(&self, t: &Value) -> Result<()> {
        if self.ring.is_unit(t) {
            Ok(())
        } else {
            Err(GroupError::NotUnit(self.ring.format(t)))
        }
    }

    /// `x_α(t) = exp(t ad x_α)`, a finite sum since `ad x_α` is nilpotent.
    pub fn x_gen(&self, a: Root, t: &Value) -> Result<Mat> {
        let k = self.root_index(a)?;
        let r = &self.ring;
        let mut m = self.identity();
        let mut tp = t.clone();
        for (j, terms) in self.series[k].iter().enumerate() {
            if j > 0 {
                tp = r.mul(&tp, t);
            }
            if r.is_zero(&tp) {
                break;
            }
            for (i, c, v) in terms {
                let s = r.add(m.get(*i, *c), &r.mul(&tp, v));
                m.set(*i, *c, s);
            }
        }
        Ok(m)
    }

    /// `w_α(t) = x_α(t) x_{−α}(−t⁻¹) x_α(t)`.
    pub fn w_gen(&self, a: Root, t: &Value) -> Result<Mat> {
        self.unit(t)?;
        let r = &self.ring;
        let ti = r.neg(&r.inv(t)?);
        let x = self.x_gen(a, t)?;
        Ok(x.mul(&self.x_gen(neg(a), &ti)?).mul(&x))
    }

    /// `h_α(t) = w_α(t) w_α(1)⁻¹`, using `w_α(1)⁻¹ = w_α(−1)`.
    pub fn h_gen(&self, a: Root, t: &Value) -> Result<Mat> {
        let k = self.root_index(a)?;
        Ok(self.w_gen(a, t)?.mul(&self.w_inv1[k]))
    }

    /// `χ(β)` for a root (or any lattice element) β.
    pub fn character_value(&self, chi: &TorusCharacter, b: Root) -> Result<Value> {
        let (i, j) = self.sys.simple_coeffs(b);
        let r = &self.ring;
        Ok(r.mul(&r.pow(&chi.values[0], i)?, &r.pow(&chi.values[1], j)?))
    }

    /// The character `χ_{α,u}: β ↦ u^{⟨β,α⟩}`.
    pub fn character_of(&self, a: Root, u: &Value) -> Result<TorusCharacter> {
        self.unit(u)?;
        let r = &self.ring;
        let v = |i: usize| r.pow(u, self.sys.pairing(self.sys.simple[i], a));
        Ok(TorusCharacter { values: [v(0)?, v(1)?] })
    }

    /// Diagonal matrix acting by `χ(β)` on root position β and trivially on
    /// the Cartan part.
    pub fn torus_element(&self, chi: &TorusCharacter) -> Result<Mat> {
        for v in &chi.values {
            self.unit(v)?;
        }
        let mut d = Vec::with_capacity(self.n());
        for &b in &self.sys.all {
            d.push(self.character_value(chi, b)?);
        }
        d.extend([self.ring.one(), self.ring.one()]);
        Ok(Mat::diag(&self.ring, d))
    }

    pub fn inverse_character(&self, chi: &TorusCharacter) -> Result<TorusCharacter> {
        let r = &self.ring;
        Ok(TorusCharacter { values: [r.inv(&chi.values[0])?, r.inv(&chi.values[1])?] })
    }

    /// Every entry of `A − 1` lies in the maximal ideal.
    pub fn in_congruence(&self, a: &Mat) -> bool {
        let r = &self.ring;
        a.entries().all(|(i, j, v)| {
            let d = if i == j { r.sub(v, &r.one()) } else { v.clone() };
            !r.is_unit(&d)
        })
    }

    /// Entrywise reduction modulo the maximal ideal.
    pub fn reduce_mod_j(&self, a: &Mat) -> Mat {
        a.residue()
    }

    /// A position in a Cartan column where `x_α(a) − 1` reads `a·s`, with
    /// its coefficient `s`. Only the first-order term reaches Cartan columns.
    pub(crate) fn param_probe(&self, a: Root) -> Result<(usize, usize, Value)> {
        let k = self.root_index(a)?;
        let m = self.sys.num_roots();
        let (i, j, v) = self.series[k][0].iter().find(|(_, c, _)| *c >= m).expect("x_α moves some h_i");
        Ok((*i, *j, v.clone()))
    }

    /// Roots as names, in basis order.
    pub fn root_names(&self) -> Vec<String> {
        self.sys.all.iter().map(|&r| self.sys.name(r)).collect()
    }
}
