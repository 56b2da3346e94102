//! Dense matrices over a [`Ring`].
//!
//! Products skip zero entries, which keeps the (very sparse) generator
//! matrices cheap to multiply. Inversion uses Gauss–Jordan elimination with
//! unit pivots only: over a local ring a column without a unit pivot means the
//! matrix is not invertible.

use std::fmt;

use crate::error::{Result, RingError};
use crate::ring::{Ring, Value, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Value>,
}

impl Mat {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> Mat {
        Mat { ring: ring.clone(), rows, cols, data: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Mat {
        let mut m = Mat::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Value) -> Mat {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Mat { ring: ring.clone(), rows, cols, data }
    }

    pub fn from_i64(ring: &Ring, rows: &[Vec<i64>]) -> Mat {
        let c = rows.first().map_or(0, Vec::len);
        Mat::from_fn(ring, rows.len(), c, |i, j| ring.from_i64(rows[i][j]))
    }

    /// Image of a rational matrix; fails if some denominator is not a unit.
    pub fn from_q(ring: &Ring, rows: &[Vec<Q>]) -> Result<Mat> {
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * c);
        for r in rows {
            for x in r {
                data.push(ring.from_q(x)?);
            }
        }
        Ok(Mat { ring: ring.clone(), rows: rows.len(), cols: c, data })
    }

    pub fn diag(ring: &Ring, d: Vec<Value>) -> Mat {
        let n = d.len();
        let mut m = Mat::zero(ring, n, n);
        for (i, v) in d.into_iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Value {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Value) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Value] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Value)> {
        self.data.iter().enumerate().map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn map(&self, mut f: impl FnMut(&Value) -> Value) -> Mat {
        Mat { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }

    /// Reinterpret under another ring via an entrywise map.
    pub fn map_into(&self, ring: &Ring, mut f: impl FnMut(&Value) -> Value) -> Mat {
        Mat { ring: ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }

    fn check_same(&self, o: &Mat, what: &str) -> Result<()> {
        if self.ring != o.ring {
            return Err(RingError::MixedRings(self.ring.to_string(), o.ring.to_string()));
        }
        if self.rows != o.rows || self.cols != o.cols {
            return Err(RingError::Dimension(format!("{what} of {}x{} and {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Mat) -> Result<Mat> {
        self.check_same(o, "sum")?;
        let r = &self.ring;
        Ok(Mat {
            ring: r.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| r.add(a, b)).collect(),
        })
    }

    pub fn try_sub(&self, o: &Mat) -> Result<Mat> {
        self.check_same(o, "difference")?;
        let r = &self.ring;
        Ok(Mat {
            ring: r.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| r.sub(a, b)).collect(),
        })
    }

    pub fn try_mul(&self, o: &Mat) -> Result<Mat> {
        if self.ring != o.ring {
            return Err(RingError::MixedRings(self.ring.to_string(), o.ring.to_string()));
        }
        if self.cols != o.rows {
            return Err(RingError::Dimension(format!("product of {}x{} and {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let r = &self.ring;
        let mut out = Mat::zero(r, self.rows, o.cols);
        let mut acc: Vec<Option<Value>> = vec![None; o.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if r.is_zero(b) {
                        continue;
                    }
                    let t = if r.is_one(a) { b.clone() } else { r.mul(a, b) };
                    acc[j] = Some(match acc[j].take() {
                        None => t,
                        Some(s) => r.add(&s, &t),
                    });
                }
            }
            for (j, v) in acc.iter_mut().enumerate() {
                if let Some(v) = v.take() {
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Panicking product for callers that construct operands themselves.
    pub fn mul(&self, o: &Mat) -> Mat {
        self.try_mul(o).expect("compatible matrices")
    }

    pub fn add(&self, o: &Mat) -> Mat {
        self.try_add(o).expect("compatible matrices")
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        self.try_sub(o).expect("compatible matrices")
    }

    pub fn scale(&self, c: &Value) -> Mat {
        let r = self.ring.clone();
        self.map(|v| r.mul(c, v))
    }

    pub fn neg(&self) -> Mat {
        let r = self.ring.clone();
        self.map(|v| r.neg(v))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.ring.is_zero(v))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.entries().all(|(i, j, v)| if i == j { self.ring.is_one(v) } else { self.ring.is_zero(v) })
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, v)| i == j || self.ring.is_zero(v))
    }

    pub fn diagonal(&self) -> Vec<Value> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    /// Positions where two equally-shaped matrices differ.
    pub fn diff_positions(&self, o: &Mat) -> Vec<(usize, usize)> {
        self.entries().filter(|&(i, j, v)| v != o.get(i, j)).map(|(i, j, _)| (i, j)).collect()
    }

    pub fn pow(&self, e: u32) -> Mat {
        let mut r = Mat::identity(&self.ring, self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Inverse by unit-pivot Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(RingError::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let r = &self.ring;
        let mut a = self.clone();
        let mut b = Mat::identity(r, n);
        for c in 0..n {
            let piv = (c..n).find(|&i| r.is_unit(a.get(i, c))).ok_or(RingError::Singular)?;
            a.swap_rows(c, piv);
            b.swap_rows(c, piv);
            let inv = r.inv(a.get(c, c)).unwrap();
            a.scale_row(c, &inv);
            b.scale_row(c, &inv);
            for i in 0..n {
                if i == c || r.is_zero(a.get(i, c)) {
                    continue;
                }
                let f = a.get(i, c).clone();
                a.axpy_row(i, c, &f);
                b.axpy_row(i, c, &f);
            }
        }
        Ok(b)
    }

    /// Determinant when it is a unit; `None` means it lies in the maximal
    /// ideal (the matrix is not invertible).
    pub fn unit_det(&self) -> Option<Value> {
        let n = self.rows;
        let r = &self.ring;
        let mut a = self.clone();
        let mut det = r.one();
        for c in 0..n {
            let piv = (c..n).find(|&i| r.is_unit(a.get(i, c)))?;
            if piv != c {
                a.swap_rows(c, piv);
                det = r.neg(&det);
            }
            let p = a.get(c, c).clone();
            det = r.mul(&det, &p);
            let inv = r.inv(&p).unwrap();
            for i in c + 1..n {
                if r.is_zero(a.get(i, c)) {
                    continue;
                }
                let f = r.mul(a.get(i, c), &inv);
                a.axpy_row(i, c, &f);
            }
        }
        Some(det)
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.cols {
                self.data.swap(i * self.cols + k, j * self.cols + k);
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: &Value) {
        for k in 0..self.cols {
            let v = self.ring.mul(c, self.get(i, k));
            self.set(i, k, v);
        }
    }

    /// row_i -= f · row_j
    fn axpy_row(&mut self, i: usize, j: usize, f: &Value) {
        for k in 0..self.cols {
            let b = self.get(j, k);
            if self.ring.is_zero(b) {
                continue;
            }
            let v = self.ring.sub(self.get(i, k), &self.ring.mul(f, b));
            self.set(i, k, v);
        }
    }

    /// Reduced row echelon form by unit-pivot elimination; returns the pivot
    /// columns. Over a field this is ordinary RREF; over a local ring the
    /// pivots are units and the non-pivot part of each remaining row lies in J.
    pub fn rref(&mut self) -> Vec<usize> {
        let r = self.ring.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| r.is_unit(self.get(i, c))) else { continue };
            self.swap_rows(row, p);
            let inv = r.inv(self.get(row, c)).unwrap();
            self.scale_row(row, &inv);
            for i in 0..self.rows {
                if i != row && !r.is_zero(self.get(i, c)) {
                    let f = self.get(i, c).clone();
                    self.axpy_row(i, row, &f);
                }
            }
            pivots.push(c);
            row += 1;
        }
        pivots
    }

    /// Rank over a field.
    pub fn rank(&self) -> Result<usize> {
        if !self.ring.is_field() {
            return Err(RingError::WrongKind("field"));
        }
        Ok(self.clone().rref().len())
    }

    /// Basis of the right nullspace over a field, as column vectors.
    pub fn nullspace(&self) -> Result<Vec<Vec<Value>>> {
        if !self.ring.is_field() {
            return Err(RingError::WrongKind("field"));
        }
        let r = &self.ring;
        let mut a = self.clone();
        let pivots = a.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        Ok(free
            .iter()
            .map(|&f| {
                let mut v = vec![r.zero(); self.cols];
                v[f] = r.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.neg(a.get(i, f));
                }
                v
            })
            .collect())
    }

    /// Entrywise residue, as a matrix over the residue field.
    pub fn residue(&self) -> Mat {
        let k = self.ring.residue_ring();
        let r = self.ring.clone();
        self.map_into(&k, |v| r.residue(v))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|v| self.ring.format(v)).collect()).collect()
    }

    pub fn mat_vec(&self, v: &[Value]) -> Vec<Value> {
        let r = &self.ring;
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(r.zero(), |acc, (a, b)| {
                    if r.is_zero(a) || r.is_zero(b) {
                        acc
                    } else {
                        r.add(&acc, &r.mul(a, b))
                    }
                })
            })
            .collect()
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.to_strings();
        let w = s.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in s {
            let line: Vec<String> = row.iter().map(|x| format!("{x:>w$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
