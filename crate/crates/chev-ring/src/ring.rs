//! Ring handles and raw element values.
//!
//! A [`Ring`] is a cheap, clonable handle; arithmetic is performed on bare
//! [`Value`]s through the handle so that matrix kernels avoid per-entry
//! ownership bookkeeping. [`crate::RingElement`] layers a checked API on top.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::descriptor::{is_prime, RingDescriptor, RingKind};
use crate::error::{Result, RingError};

pub type Q = BigRational;

/// First-order jet: `c + Σ l[i]·y_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Jet {
    pub c: Q,
    pub l: Vec<Q>,
}

/// Canonical representation of a ring element. Which variant is meaningful
/// is determined by the owning ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    /// Residue in `0..n` (zmod, fp).
    Int(u64),
    /// Reduced fraction with denominator prime to p (zloc).
    Rat(Q),
    /// `a + b·ε` (dual).
    Dual(u64, u64),
    /// `a + b·i` with `i² = n` (fp2).
    Fp2(u64, u64),
    Jet(Box<Jet>),
}

#[derive(Debug)]
struct Inner {
    desc: RingDescriptor,
    /// Modulus for the residue-class kinds (p^k, or p).
    n: u64,
    /// Non-residue defining `i² = nonres` in fp2.
    nonres: u64,
}

#[derive(Clone, Debug)]
pub struct Ring(Arc<Inner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.desc.kind == other.0.desc.kind
    }
}
impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.desc.kind.fmt(f)
    }
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn q(v: i64) -> Q {
    Q::from_integer(big(v))
}

fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i128, n as i128);
    if g != 1 {
        return None;
    }
    Some(x.rem_euclid(n as i128) as u64)
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn pow_mod(mut b: u64, mut e: u64, n: u64) -> u64 {
    let mut r = 1 % n;
    b %= n;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    r
}

fn big_mod(x: &BigInt, n: u64) -> u64 {
    x.mod_floor(&BigInt::from(n)).to_u64().expect("reduced below modulus")
}

/// `x + y` or `x · y` in machine integers when both operands are small;
/// `None` sends the caller to the arbitrary-precision path.
fn small_rat(x: &Q, y: &Q, mul: bool) -> Option<Q> {
    let (a, b) = (x.numer().to_i64()? as i128, x.denom().to_i64()? as i128);
    let (c, d) = (y.numer().to_i64()? as i128, y.denom().to_i64()? as i128);
    let (n, m) = if mul { (a * c, b * d) } else { ((a * d).checked_add(c * b)?, b * d) };
    let g = n.gcd(&m);
    let (n, m) = if g > 1 { (n / g, m / g) } else { (n, m) };
    Some(Q::new_raw(BigInt::from(n), BigInt::from(m)))
}

/// Construct a ring, validating parameters and the required inverses.
pub fn make_ring(desc: RingDescriptor) -> Result<Ring> {
    let check_p = |p: u64| -> Result<()> {
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(RingError::BadParameters(format!("prime {p} too large")));
        }
        Ok(())
    };
    let (n, nonres) = match desc.kind {
        RingKind::ZMod { p, k } => {
            check_p(p)?;
            if k == 0 {
                return Err(RingError::BadParameters("exponent k must be at least 1".into()));
            }
            let n = (p as u128).checked_pow(k).filter(|&n| n < 1 << 32);
            let n = n.ok_or_else(|| RingError::BadParameters(format!("{p}^{k} too large")))?;
            (n as u64, 0)
        }
        RingKind::ZLoc { p } | RingKind::Fp { p } | RingKind::Dual { p } => {
            check_p(p)?;
            (p, 0)
        }
        RingKind::Fp2 { p } => {
            check_p(p)?;
            if p == 2 {
                return Err(RingError::BadParameters("fp2 needs an odd prime".into()));
            }
            let nonres = (2..p).find(|&a| pow_mod(a, (p - 1) / 2, p) == p - 1).unwrap();
            (p, nonres)
        }
        RingKind::Jet { .. } => (0, 0),
    };
    let ring = Ring(Arc::new(Inner { desc, n, nonres }));
    for &u in &ring.0.desc.required_inverses {
        if !ring.is_unit(&ring.from_i64(u)) {
            return Err(RingError::RequiredInverse(u, ring.to_string()));
        }
    }
    Ok(ring)
}

impl Ring {
    /// Parse a descriptor string and construct the ring with the given
    /// required inverses.
    pub fn parse(spec: &str, required: &[i64]) -> Result<Ring> {
        make_ring(spec.parse::<RingDescriptor>()?.requiring(required))
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0.desc
    }

    pub fn kind(&self) -> RingKind {
        self.0.desc.kind
    }

    /// Residue characteristic (None for the jet ring, whose residue field is Q).
    pub fn p(&self) -> Option<u64> {
        self.0.desc.residue_char()
    }

    pub fn jet_len(&self) -> Option<usize> {
        match self.kind() {
            RingKind::Jet { m } => Some(m),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self.kind(), RingKind::Fp { .. } | RingKind::Fp2 { .. } | RingKind::ZMod { k: 1, .. })
            || self.jet_len() == Some(0)
    }

    fn jet_zero(&self, c: Q) -> Value {
        let m = self.jet_len().unwrap();
        Value::Jet(Box::new(Jet { c, l: vec![Q::zero(); m] }))
    }

    pub fn zero(&self) -> Value {
        self.from_i64(0)
    }

    pub fn one(&self) -> Value {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Value {
        let n = self.0.n;
        let r = |v: i64| v.rem_euclid(n as i64) as u64;
        match self.kind() {
            RingKind::ZMod { .. } | RingKind::Fp { .. } => Value::Int(r(v)),
            RingKind::ZLoc { .. } => Value::Rat(q(v)),
            RingKind::Dual { .. } => Value::Dual(r(v), 0),
            RingKind::Fp2 { .. } => Value::Fp2(r(v), 0),
            RingKind::Jet { .. } => self.jet_zero(q(v)),
        }
    }

    /// Image of a rational number; fails when the denominator is not a unit.
    pub fn from_q(&self, x: &Q) -> Result<Value> {
        if x.is_integer() {
            if let Some(v) = x.numer().to_i64() {
                return Ok(self.from_i64(v));
            }
        }
        match self.kind() {
            RingKind::ZLoc { p } => {
                if (x.denom() % BigInt::from(p)).is_zero() {
                    Err(RingError::NonUnit)
                } else {
                    Ok(Value::Rat(x.clone()))
                }
            }
            RingKind::Jet { .. } => Ok(self.jet_zero(x.clone())),
            _ => {
                let n = self.0.n;
                let p = self.p().unwrap();
                let d = big_mod(x.denom(), n);
                if d % p == 0 {
                    return Err(RingError::NonUnit);
                }
                let v = big_mod(x.numer(), n) * inv_mod(d, n).unwrap() % n;
                Ok(match self.kind() {
                    RingKind::Dual { .. } => Value::Dual(v, 0),
                    RingKind::Fp2 { .. } => Value::Fp2(v, 0),
                    _ => Value::Int(v),
                })
            }
        }
    }

    pub fn from_frac(&self, num: i64, den: i64) -> Result<Value> {
        self.from_q(&Q::new(big(num), big(den)))
    }

    /// The nilpotent generator ε of `dual:p`.
    pub fn eps(&self) -> Result<Value> {
        match self.kind() {
            RingKind::Dual { .. } => Ok(Value::Dual(0, 1)),
            _ => Err(RingError::WrongKind("dual-number ring")),
        }
    }

    /// The square root `i` of the non-residue in `fp2:p`.
    pub fn sqrt_nonres(&self) -> Result<Value> {
        match self.kind() {
            RingKind::Fp2 { .. } => Ok(Value::Fp2(0, 1)),
            _ => Err(RingError::WrongKind("fp2 ring")),
        }
    }

    pub fn nonresidue(&self) -> u64 {
        self.0.nonres
    }

    /// Jet symbol `y_{i+1}` (zero-based index `i`).
    pub fn symbol(&self, i: usize) -> Result<Value> {
        let m = self.jet_len().ok_or(RingError::WrongKind("jet ring"))?;
        if i >= m {
            return Err(RingError::Dimension(format!("symbol y{} of jet:{m}", i + 1)));
        }
        let mut l = vec![Q::zero(); m];
        l[i] = Q::one();
        Ok(Value::Jet(Box::new(Jet { c: Q::zero(), l })))
    }

    /// Jet element `c + Σ l_i y_i` from integer data.
    pub fn jet(&self, c: i64, l: &[(usize, i64)]) -> Result<Value> {
        let mut v = self.from_i64(c);
        for &(i, a) in l {
            let t = self.mul(&self.from_i64(a), &self.symbol(i)?);
            v = self.add(&v, &t);
        }
        Ok(v)
    }

    pub fn is_zero(&self, a: &Value) -> bool {
        match a {
            Value::Int(v) => *v == 0,
            Value::Rat(x) => x.is_zero(),
            Value::Dual(a, b) | Value::Fp2(a, b) => *a == 0 && *b == 0,
            Value::Jet(j) => j.c.is_zero() && j.l.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self, a: &Value) -> bool {
        match a {
            Value::Int(v) => *v == 1 % self.0.n,
            Value::Rat(x) => x.is_one(),
            Value::Dual(a, b) | Value::Fp2(a, b) => *a == 1 && *b == 0,
            Value::Jet(j) => j.c.is_one() && j.l.iter().all(Zero::is_zero),
        }
    }

    pub fn add(&self, a: &Value, b: &Value) -> Value {
        let n = self.0.n;
        match (a, b) {
            (Value::Int(x), Value::Int(y)) => Value::Int((x + y) % n),
            (Value::Rat(x), Value::Rat(y)) => Value::Rat(small_rat(x, y, false).unwrap_or_else(|| x + y)),
            (Value::Dual(a0, a1), Value::Dual(b0, b1)) => Value::Dual((a0 + b0) % n, (a1 + b1) % n),
            (Value::Fp2(a0, a1), Value::Fp2(b0, b1)) => Value::Fp2((a0 + b0) % n, (a1 + b1) % n),
            (Value::Jet(x), Value::Jet(y)) => Value::Jet(Box::new(Jet {
                c: &x.c + &y.c,
                l: x.l.iter().zip(&y.l).map(|(u, v)| u + v).collect(),
            })),
            _ => panic!("mixed-ring values in {self}"),
        }
    }

    pub fn neg(&self, a: &Value) -> Value {
        let n = self.0.n;
        let m = |v: u64| (n - v) % n;
        match a {
            Value::Int(x) => Value::Int(m(*x)),
            Value::Rat(x) => Value::Rat(-x),
            Value::Dual(a0, a1) => Value::Dual(m(*a0), m(*a1)),
            Value::Fp2(a0, a1) => Value::Fp2(m(*a0), m(*a1)),
            Value::Jet(x) => Value::Jet(Box::new(Jet { c: -&x.c, l: x.l.iter().map(|u| -u).collect() })),
        }
    }

    pub fn sub(&self, a: &Value, b: &Value) -> Value {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Value, b: &Value) -> Value {
        let n = self.0.n;
        match (a, b) {
            (Value::Int(x), Value::Int(y)) => Value::Int(x * y % n),
            (Value::Rat(x), Value::Rat(y)) => Value::Rat(small_rat(x, y, true).unwrap_or_else(|| x * y)),
            (Value::Dual(a0, a1), Value::Dual(b0, b1)) => {
                Value::Dual(a0 * b0 % n, (a0 * b1 % n + a1 * b0 % n) % n)
            }
            (Value::Fp2(a0, a1), Value::Fp2(b0, b1)) => {
                let r = self.0.nonres;
                let re = (a0 * b0 % n + a1 * b1 % n * r % n) % n;
                let im = (a0 * b1 % n + a1 * b0 % n) % n;
                Value::Fp2(re, im)
            }
            (Value::Jet(x), Value::Jet(y)) => {
                // y_i·y_j = 0, so only the constant cross terms survive.
                let l = x
                    .l
                    .iter()
                    .zip(&y.l)
                    .map(|(u, v)| {
                        if u.is_zero() && v.is_zero() {
                            Q::zero()
                        } else {
                            &x.c * v + u * &y.c
                        }
                    })
                    .collect();
                Value::Jet(Box::new(Jet { c: &x.c * &y.c, l }))
            }
            _ => panic!("mixed-ring values in {self}"),
        }
    }

    pub fn is_unit(&self, a: &Value) -> bool {
        match (self.kind(), a) {
            (RingKind::ZMod { p, .. }, Value::Int(v)) | (RingKind::Fp { p }, Value::Int(v)) => v % p != 0,
            (RingKind::ZLoc { p }, Value::Rat(x)) => !(x.numer() % BigInt::from(p)).is_zero(),
            (_, Value::Dual(a0, _)) => *a0 != 0,
            (_, Value::Fp2(a0, a1)) => *a0 != 0 || *a1 != 0,
            (_, Value::Jet(j)) => !j.c.is_zero(),
            _ => panic!("value does not belong to {self}"),
        }
    }

    /// Inverse, or `None` when `a` lies in the maximal ideal.
    pub fn try_inv(&self, a: &Value) -> Option<Value> {
        if !self.is_unit(a) {
            return None;
        }
        let n = self.0.n;
        Some(match a {
            Value::Int(v) => Value::Int(inv_mod(*v, n)?),
            Value::Rat(x) => Value::Rat(x.recip()),
            Value::Dual(a0, a1) => {
                let i = inv_mod(*a0, n)?;
                Value::Dual(i, (n - a1 * i % n * i % n) % n)
            }
            Value::Fp2(a0, a1) => {
                let r = self.0.nonres;
                let norm = (a0 * a0 % n + n - a1 * a1 % n * r % n) % n;
                let i = inv_mod(norm, n)?;
                Value::Fp2(a0 * i % n, (n - a1 * i % n) % n)
            }
            Value::Jet(j) => {
                let ci = j.c.recip();
                let c2 = &ci * &ci;
                Value::Jet(Box::new(Jet { l: j.l.iter().map(|u| -(u * &c2)).collect(), c: ci }))
            }
        })
    }

    pub fn inv(&self, a: &Value) -> Result<Value> {
        self.try_inv(a).ok_or(RingError::NonUnit)
    }

    pub fn pow(&self, a: &Value, e: i64) -> Result<Value> {
        let mut base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        Ok(r)
    }

    /// The residue field R/J as a ring of its own.
    pub fn residue_ring(&self) -> Ring {
        let kind = match self.kind() {
            RingKind::ZMod { p, .. } | RingKind::ZLoc { p } | RingKind::Fp { p } | RingKind::Dual { p } => {
                RingKind::Fp { p }
            }
            RingKind::Fp2 { p } => RingKind::Fp2 { p },
            RingKind::Jet { .. } => RingKind::Jet { m: 0 },
        };
        make_ring(RingDescriptor::new(kind)).expect("residue field of a valid ring")
    }

    /// Image of `a` in the residue field (see [`Ring::residue_ring`]).
    pub fn residue(&self, a: &Value) -> Value {
        match (self.kind(), a) {
            (RingKind::ZMod { p, .. }, Value::Int(v)) | (RingKind::Fp { p }, Value::Int(v)) => Value::Int(v % p),
            (RingKind::ZLoc { p }, Value::Rat(x)) => {
                let d = big_mod(x.denom(), p);
                Value::Int(big_mod(x.numer(), p) * inv_mod(d, p).unwrap() % p)
            }
            (_, Value::Dual(a0, _)) => Value::Int(*a0),
            (_, Value::Fp2(..)) => a.clone(),
            (_, Value::Jet(j)) => Value::Jet(Box::new(Jet { c: j.c.clone(), l: Vec::new() })),
            _ => panic!("value does not belong to {self}"),
        }
    }

    /// Decompose a jet into its constant and linear coefficients.
    pub fn jet_linear_coeffs(&self, a: &Value) -> Result<(Q, Vec<Q>)> {
        match a {
            Value::Jet(j) => Ok((j.c.clone(), j.l.clone())),
            _ => Err(RingError::WrongKind("jet ring")),
        }
    }

    /// Write `a = u1 + u2` with both summands units (needs 2 invertible).
    pub fn sum_of_two_units(&self, a: &Value) -> (Value, Value) {
        let one = self.one();
        let rest = self.sub(a, &one);
        if self.is_unit(&rest) {
            (one, rest)
        } else {
            // a ≡ 1 mod J, so a + 1 ≡ 2 is a unit.
            (self.neg(&one), self.add(a, &one))
        }
    }

    /// All elements, for finite rings.
    pub fn elements(&self) -> Option<Vec<Value>> {
        let n = self.0.n;
        match self.kind() {
            RingKind::ZMod { .. } | RingKind::Fp { .. } => Some((0..n).map(Value::Int).collect()),
            RingKind::Dual { .. } => Some((0..n * n).map(|v| Value::Dual(v / n, v % n)).collect()),
            RingKind::Fp2 { .. } => Some((0..n * n).map(|v| Value::Fp2(v / n, v % n)).collect()),
            _ => None,
        }
    }

    /// A pseudo-random element; fractions and jet coefficients stay small so
    /// exact computations remain cheap.
    pub fn random<G: Rng + ?Sized>(&self, rng: &mut G) -> Value {
        let n = self.0.n;
        match self.kind() {
            RingKind::ZMod { .. } | RingKind::Fp { .. } => Value::Int(rng.gen_range(0..n)),
            RingKind::Dual { .. } => Value::Dual(rng.gen_range(0..n), rng.gen_range(0..n)),
            RingKind::Fp2 { .. } => Value::Fp2(rng.gen_range(0..n), rng.gen_range(0..n)),
            RingKind::ZLoc { p } => loop {
                let num = rng.gen_range(-12i64..=12);
                let den = rng.gen_range(1i64..=12);
                if den as u64 % p != 0 {
                    break Value::Rat(Q::new(big(num), big(den)));
                }
            },
            RingKind::Jet { m } => {
                let mut l = vec![Q::zero(); m];
                for _ in 0..m.min(3) {
                    l[rng.gen_range(0..m)] = q(rng.gen_range(-3..=3));
                }
                Value::Jet(Box::new(Jet { c: q(rng.gen_range(-3..=3)), l }))
            }
        }
    }

    pub fn random_unit<G: Rng + ?Sized>(&self, rng: &mut G) -> Value {
        loop {
            let v = self.random(rng);
            if self.is_unit(&v) {
                return v;
            }
        }
    }

    pub fn random_nonunit<G: Rng + ?Sized>(&self, rng: &mut G) -> Value {
        match self.kind() {
            RingKind::Fp { .. } | RingKind::Fp2 { .. } => self.zero(),
            RingKind::ZMod { .. } | RingKind::ZLoc { .. } => {
                let pv = self.from_i64(self.p().unwrap() as i64);
                self.mul(&pv, &self.random(rng))
            }
            RingKind::Dual { .. } => Value::Dual(0, rng.gen_range(0..self.0.n)),
            RingKind::Jet { .. } => {
                let r = self.random(rng);
                let c = self.from_q(&self.jet_linear_coeffs(&r).unwrap().0).unwrap();
                self.sub(&r, &c)
            }
        }
    }

    pub fn format(&self, a: &Value) -> String {
        let sym = |out: &mut String, first: bool, c: &str, s: &str| {
            if c == "0" {
                return;
            }
            let (neg, c) = c.strip_prefix('-').map_or((false, c), |c| (true, c));
            if neg {
                out.push('-');
            } else if !first {
                out.push('+');
            }
            if c != "1" {
                out.push_str(c);
                out.push('*');
            }
            out.push_str(s);
        };
        match a {
            Value::Int(v) => v.to_string(),
            Value::Rat(x) => x.to_string(),
            Value::Dual(a0, a1) | Value::Fp2(a0, a1) => {
                let s = if matches!(a, Value::Dual(..)) { "eps" } else { "i" };
                if *a1 == 0 {
                    return a0.to_string();
                }
                let mut out = String::new();
                if *a0 != 0 {
                    out.push_str(&a0.to_string());
                }
                sym(&mut out, *a0 == 0, &a1.to_string(), s);
                out
            }
            Value::Jet(j) => {
                let mut out = String::new();
                let mut first = true;
                if !j.c.is_zero() {
                    out.push_str(&j.c.to_string());
                    first = false;
                }
                for (i, c) in j.l.iter().enumerate() {
                    if !c.is_zero() {
                        sym(&mut out, first, &c.to_string(), &format!("y{}", i + 1));
                        first = false;
                    }
                }
                if first {
                    "0".into()
                } else {
                    out
                }
            }
        }
    }

    /// Parse a canonical element string: a signed sum of terms
    /// `c`, `c*s` or `s`, where `c` is an integer or fraction and `s` one of
    /// `eps` (dual), `i` (fp2), `y<k>` (jet).
    pub fn parse_elem(&self, s: &str) -> Result<Value> {
        let bad = |why: &str| RingError::BadElement(s.to_string(), why.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in t.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut acc = self.zero();
        for term in terms {
            let (neg, body) = match term.as_bytes()[0] {
                b'-' => (true, &term[1..]),
                b'+' => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let split = body.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(body.len());
            let (coef, symb) = body.split_at(split);
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            let c: Q = if coef.is_empty() {
                Q::one()
            } else {
                parse_q(coef).ok_or_else(|| bad("bad coefficient"))?
            };
            let base = match symb {
                "" => self.one(),
                "eps" => self.eps().map_err(|_| bad("eps outside dual ring"))?,
                "i" => self.sqrt_nonres().map_err(|_| bad("i outside fp2 ring"))?,
                y if y.starts_with('y') => {
                    let k: usize = y[1..].parse().map_err(|_| bad("bad symbol"))?;
                    if k == 0 {
                        return Err(bad("symbols start at y1"));
                    }
                    self.symbol(k - 1).map_err(|_| bad("symbol outside jet ring"))?
                }
                _ => return Err(bad("unknown symbol")),
            };
            let c = self.from_q(&c).map_err(|_| bad("denominator is not a unit"))?;
            let v = self.mul(&c, &base);
            acc = if neg { self.sub(&acc, &v) } else { self.add(&acc, &v) };
        }
        Ok(acc)
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    match s.split_once('/') {
        Some((a, b)) => {
            let b: BigInt = b.parse().ok()?;
            if b.is_zero() {
                return None;
            }
            Some(Q::new(a.parse().ok()?, b))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

/// Rational view of a value of `zloc` or a constant jet, if it has one.
pub fn as_rational(v: &Value) -> Option<Q> {
    match v {
        Value::Rat(x) => Some(x.clone()),
        Value::Jet(j) if j.l.iter().all(Zero::is_zero) => Some(j.c.clone()),
        _ => None,
    }
}

/// `true` when the rational is an integer of absolute value at most `bound`.
pub fn small_integer(x: &Q, bound: i64) -> bool {
    x.is_integer() && x.numer().abs() <= BigInt::from(bound)
}
