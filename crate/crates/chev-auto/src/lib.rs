//! Standard automorphisms of adjoint elementary Chevalley groups: ring,
//! inner and central ones, their composition and verification, the
//! extension of a unit-level map to the whole ring, and the commutant of
//! the torus.

use chev_group::{solve_commutator_constants, ChevalleyGroup, GroupError};
use chev_ring::{Mat, Ring, RingError, RingKind, Value};
use chev_roots::SystemType;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutoError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("ring automorphism {0} is not defined on {1}")]
    Undefined(String, String),
    #[error("conjugating matrix is not invertible")]
    NotInvertible,
    #[error("unit map does not extend to a ring map: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, AutoError>;

/// Ring automorphisms available on the supported rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingAuto {
    Identity,
    /// `a + bε ↦ a + cbε` on `F_p[ε]`, `c` a unit.
    DualScale(u64),
    /// `x ↦ x^p` on `F_{p²}`.
    Frobenius,
}

impl RingAuto {
    pub fn apply(&self, r: &Ring, v: &Value) -> Result<Value> {
        let undefined = || AutoError::Undefined(format!("{self:?}"), r.to_string());
        match (self, r.kind()) {
            (RingAuto::Identity, _) => Ok(v.clone()),
            (RingAuto::DualScale(c), RingKind::Dual { p }) => {
                if c % p == 0 {
                    return Err(undefined());
                }
                let Value::Dual(a, b) = v else { return Err(undefined()) };
                Ok(Value::Dual(*a, b * c % p))
            }
            (RingAuto::Frobenius, RingKind::Fp2 { p }) => Ok(r.pow(v, p as i64)?),
            _ => Err(undefined()),
        }
    }
}

/// Entrywise `ρ`.
pub fn ring_auto_apply(rho: RingAuto, a: &Mat) -> Result<Mat> {
    let r = a.ring().clone();
    let mut out = a.clone();
    for (i, j, v) in a.entries() {
        out.set(i, j, rho.apply(&r, v)?);
    }
    Ok(out)
}

/// `g A g⁻¹`.
pub fn inner_auto(g: &Mat, a: &Mat) -> Result<Mat> {
    let gi = g.inverse().map_err(|_| AutoError::NotInvertible)?;
    Ok(g.mul(a).mul(&gi))
}

/// A central twist `x ↦ τ(x) x`, given by scalars on the root subgroups:
/// `τ(x_α(t)) = λ_α`. Roots not listed get `λ = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CentralTwist {
    pub scalars: Vec<(String, String)>,
}

impl CentralTwist {
    fn scalar(&self, g: &ChevalleyGroup, a: chev_roots::Root) -> Result<Value> {
        let r = g.ring();
        for (name, s) in &self.scalars {
            if g.sys.parse_root(name).map_err(|e| AutoError::Group(GroupError::NotARoot(e.to_string())))? == a {
                let v = r.parse_elem(s)?;
                if !r.is_unit(&v) {
                    return Err(RingError::NonUnit.into());
                }
                return Ok(v);
            }
        }
        Ok(r.one())
    }
}

/// One letter of a word for [`central_auto_apply`]: `x_α(t)` or its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub root: chev_roots::Root,
    pub t: Value,
    pub inverse: bool,
}

/// `Π τ(x_i)^{±1} x_i^{±1}`: the twist applied letter by letter. On a word
/// whose letters occur with exponent sum zero per root (a commutator) the
/// scalars cancel.
pub fn central_auto_apply(g: &ChevalleyGroup, tau: &CentralTwist, word: &[Letter]) -> Result<Mat> {
    let r = g.ring();
    let mut acc = g.identity();
    for l in word {
        let lam = tau.scalar(g, l.root)?;
        let (lam, t) = if l.inverse { (r.inv(&lam)?, r.neg(&l.t)) } else { (lam, l.t.clone()) };
        acc = acc.mul(&g.x_gen(l.root, &t)?.scale(&lam));
    }
    Ok(acc)
}

/// One factor of a standard automorphism; the composition applies factors
/// left to right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AutoKind {
    Ring(RingAuto),
    /// Conjugation by a word in the element grammar, e.g. `"w:a1:1 x:a2:1"`.
    Inner(String),
    /// Conjugation by an explicit matrix of ring-element strings.
    InnerMatrix(Vec<Vec<String>>),
    Central(CentralTwist),
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StandardAutoSpec {
    pub composition: Vec<AutoKind>,
}

/// A spec bound to a group, ready to act on `x_α(t)`.
struct Bound<'a> {
    g: &'a ChevalleyGroup,
    steps: Vec<BoundStep>,
}

enum BoundStep {
    Ring(RingAuto),
    Inner(Mat, Mat),
    Central(CentralTwist),
}

impl<'a> Bound<'a> {
    fn new(spec: &StandardAutoSpec, g: &'a ChevalleyGroup) -> Result<Bound<'a>> {
        let r = g.ring();
        let steps = spec
            .composition
            .iter()
            .map(|k| {
                Ok(match k {
                    AutoKind::Ring(rho) => BoundStep::Ring(*rho),
                    AutoKind::Inner(w) => {
                        let m = g.eval_word(&g.parse_word(w)?)?;
                        let mi = m.inverse().map_err(|_| AutoError::NotInvertible)?;
                        BoundStep::Inner(m, mi)
                    }
                    AutoKind::InnerMatrix(rows) => {
                        let n = rows.len();
                        let mut m = Mat::zero(r, n, n);
                        for (i, row) in rows.iter().enumerate() {
                            for (j, s) in row.iter().enumerate() {
                                m.set(i, j, r.parse_elem(s)?);
                            }
                        }
                        let mi = m.inverse().map_err(|_| AutoError::NotInvertible)?;
                        BoundStep::Inner(m, mi)
                    }
                    AutoKind::Central(t) => BoundStep::Central(t.clone()),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Bound { g, steps })
    }

    /// Image of `x_α(t)`.
    fn image_x(&self, a: chev_roots::Root, t: &Value) -> Result<Mat> {
        let mut m = self.g.x_gen(a, t)?;
        for s in &self.steps {
            m = match s {
                BoundStep::Ring(rho) => ring_auto_apply(*rho, &m)?,
                BoundStep::Inner(g, gi) => g.mul(&m).mul(gi),
                BoundStep::Central(tau) => m.scale(&tau.scalar(self.g, a)?),
            };
        }
        Ok(m)
    }

    /// The composite ring automorphism, for covariance checks.
    fn ring_part(&self, t: &Value) -> Result<Value> {
        let mut v = t.clone();
        for s in &self.steps {
            if let BoundStep::Ring(rho) = s {
                v = rho.apply(self.g.ring(), &v)?;
            }
        }
        Ok(v)
    }

    fn is_pure_ring(&self) -> bool {
        self.steps.iter().all(|s| matches!(s, BoundStep::Ring(_)))
    }
}

/// `Y` preserves the Lie bracket of the (native) Chevalley basis:
/// `Y ad(e_i) Y⁻¹ = ad(Y e_i)` for every basis vector. Every element of the
/// adjoint group does; a conjugate by a non-normalizing matrix does not.
pub fn preserves_bracket(g: &ChevalleyGroup, y: &Mat) -> Result<bool> {
    let r = g.ring();
    let d: Vec<Value> = g.frame.diagonal(&g.sys).iter().map(|&x| r.from_i64(x)).collect();
    let dm = Mat::diag(r, d);
    let yn = dm.inverse()?.mul(y).mul(&dm);
    let Ok(yi) = yn.inverse() else { return Ok(false) };
    let n = g.n();
    let ads: Vec<Mat> = (0..n).map(|i| Mat::from_i64(r, &g.table.ad_index(i))).collect();
    for i in 0..n {
        let lhs = yn.mul(&ads[i]).mul(&yi);
        let mut rhs = Mat::zero(r, n, n);
        for (k, ad) in ads.iter().enumerate() {
            let c = yn.get(k, i);
            if !r.is_zero(c) {
                rhs = rhs.add(&ad.scale(c));
            }
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutoCheck {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutoReport {
    pub system: String,
    pub ring: String,
    pub checks: Vec<AutoCheck>,
}

impl AutoReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }
}

/// Apply `spec` to `x_α(t)` for every root and `samples` random `t`, then
/// check on the images: R1 additivity, the R2 commutator formula with the
/// group's constants, membership (bracket preservation), injectivity on the
/// sampled set, and for pure ring automorphisms the covariance
/// `x_α(t) ↦ x_α(ρ(t))`.
pub fn verify_automorphism(
    spec: &StandardAutoSpec,
    ty: SystemType,
    ring: &Ring,
    samples: usize,
    seed: u64,
) -> Result<AutoReport> {
    let g = ChevalleyGroup::new(ty, ring)?;
    let f = Bound::new(spec, &g)?;
    let r = ring;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<(Value, Value)> = (0..samples).map(|_| (r.random(&mut rng), r.random(&mut rng))).collect();
    let roots = g.sys.all.clone();
    let names: Vec<String> = roots.iter().map(|&a| g.sys.name(a)).collect();

    let per_root: Vec<Result<[Vec<String>; 3]>> = roots
        .iter()
        .enumerate()
        .map(|(k, &a)| {
            let mut r1 = Vec::new();
            let mut member = Vec::new();
            let mut cov = Vec::new();
            for (t, u) in &draws {
                let (yt, yu) = (f.image_x(a, t)?, f.image_x(a, u)?);
                if yt.mul(&yu) != f.image_x(a, &r.add(t, u))? {
                    r1.push(format!("x_{}: Y(t)Y(u) != Y(t+u) at t={}, u={}", names[k], r.format(t), r.format(u)));
                }
                if !preserves_bracket(&g, &yt)? {
                    member.push(format!("image of x_{}({}) does not preserve the bracket", names[k], r.format(t)));
                }
                if f.is_pure_ring() && yt != g.x_gen(a, &f.ring_part(t)?)? {
                    cov.push(format!("x_{}({}) not mapped to x_{}(rho(t))", names[k], r.format(t), names[k]));
                }
            }
            Ok([r1, member, cov])
        })
        .collect();
    let mut r1 = Vec::new();
    let mut member = Vec::new();
    let mut cov = Vec::new();
    for res in per_root {
        let [a, b, c] = res?;
        r1.extend(a);
        member.extend(b);
        cov.extend(c);
    }

    // R2 on images with the constants of the group itself.
    let zloc = Ring::parse("zloc:5", ty.required_inverses())?;
    let gq = ChevalleyGroup::with_frame(g.frame.clone(), &zloc)?;
    let (consts, _) = solve_commutator_constants(&gq, 4, seed)?;
    let mut r2 = Vec::new();
    let mut r2_checked = 0;
    for (a, b, terms) in &consts {
        for (t, u) in draws.iter().take(samples.min(3)) {
            r2_checked += 1;
            let (xa, xb) = (f.image_x(*a, t)?, f.image_x(*b, u)?);
            let lhs = xa.mul(&xb).mul(&f.image_x(*a, &r.neg(t))?).mul(&f.image_x(*b, &r.neg(u))?);
            let mut rhs = g.identity();
            for &(i, j, gam, c) in terms {
                let v = r.mul(&r.from_i64(c), &r.mul(&r.pow(t, i)?, &r.pow(u, j)?));
                rhs = rhs.mul(&f.image_x(gam, &v)?);
            }
            if lhs != rhs {
                r2.push(format!("[Y_{}, Y_{}] formula fails", g.sys.name(*a), g.sys.name(*b)));
                break;
            }
        }
    }

    // Injectivity: distinct sampled generators keep distinct images.
    let mut inj = Vec::new();
    let mut seen: Vec<(String, Mat, Mat)> = Vec::new();
    for (k, &a) in roots.iter().enumerate() {
        for t in [r.one(), draws.first().map_or(r.one(), |d| d.0.clone())] {
            let src = g.x_gen(a, &t)?;
            let img = f.image_x(a, &t)?;
            if let Some((other, _, _)) = seen.iter().find(|(_, s, i)| *i == img && *s != src) {
                inj.push(format!("x_{}({}) and {} have the same image", names[k], r.format(&t), other));
            }
            seen.push((format!("x_{}({})", names[k], r.format(&t)), src, img));
        }
    }

    let n = roots.len() * samples;
    let mut checks = vec![
        AutoCheck { name: "R1".into(), checked: n, failures: r1 },
        AutoCheck { name: "R2".into(), checked: r2_checked, failures: r2 },
        AutoCheck { name: "membership".into(), checked: n, failures: member },
        AutoCheck { name: "injective".into(), checked: seen.len(), failures: inj },
    ];
    if f.is_pure_ring() {
        checks.push(AutoCheck { name: "covariance".into(), checked: n, failures: cov });
    }
    Ok(AutoReport { system: ty.to_string(), ring: ring.to_string(), checks })
}

/// A total ring map built from its values on units.
pub struct ExtendedMap<'a> {
    ring: Ring,
    units: Box<dyn Fn(&Value) -> Value + 'a>,
}

impl<'a> ExtendedMap<'a> {
    /// `ρ(t)` for units; `ρ(t) = 1 + ρ(t − 1)` for `t ∈ J`, where `t − 1` is
    /// a unit.
    pub fn apply(&self, t: &Value) -> Value {
        let r = &self.ring;
        if r.is_unit(t) {
            (self.units)(t)
        } else {
            r.add(&r.one(), &(self.units)(&r.sub(t, &r.one())))
        }
    }

    /// Check additivity and multiplicativity on every pair of `elems`.
    pub fn verify(&self, elems: &[Value]) -> Result<()> {
        let r = &self.ring;
        let img: Vec<Value> = elems.iter().map(|x| self.apply(x)).collect();
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let sum = self.apply(&r.add(a, b));
                if sum != r.add(&img[i], &img[j]) {
                    return Err(AutoError::Inconsistent(format!("rho({} + {})", r.format(a), r.format(b))));
                }
                let prod = self.apply(&r.mul(a, b));
                if prod != r.mul(&img[i], &img[j]) {
                    return Err(AutoError::Inconsistent(format!("rho({} * {})", r.format(a), r.format(b))));
                }
            }
        }
        Ok(())
    }
}

/// Extend a map given on units to `R` and verify it: exhaustively on finite
/// rings, on `samples` random elements otherwise.
pub fn extend_unit_map<'a>(
    ring: &Ring,
    units: impl Fn(&Value) -> Value + 'a,
    samples: usize,
    seed: u64,
) -> Result<ExtendedMap<'a>> {
    let m = ExtendedMap { ring: ring.clone(), units: Box::new(units) };
    let elems = match ring.elements() {
        Some(e) => e,
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples).map(|_| ring.random(&mut rng)).collect()
        }
    };
    m.verify(&elems)?;
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutantShape {
    pub system: String,
    pub ring: String,
    /// Dimension of `{A : A h = h A}` over the field.
    pub dimension: usize,
    /// 1-based positions that are free in some commutant element.
    pub free_positions: Vec<(usize, usize)>,
    /// Root-by-root block is diagonal.
    pub root_block_diagonal: bool,
    /// All four Cartan-block entries are free.
    pub cartan_block_full: bool,
    /// No free entry couples the root and Cartan blocks.
    pub block_split: bool,
}

/// The commutant of `{h_α(t) : α a root, t ∈ {2, 3}}` over `F_p`.
///
/// Each `h_α(t)` is diagonal, so `A` commutes with it iff `A_{ij} = 0`
/// wherever the diagonal entries `i`, `j` differ; the commutant is the span
/// of the positions no sampled element separates. Two samples per root are
/// a choice, not a theorem (over `F_7` both 2 and 3 have order dividing 6);
/// [`torus_commutant_with`] takes every `t ∈ F_p^×` for comparison.
pub fn torus_commutant_shape(ty: SystemType, ring: &Ring) -> Result<CommutantShape> {
    torus_commutant_with(ty, ring, &[2, 3])
}

/// As [`torus_commutant_shape`] with the sampled `t` given.
pub fn torus_commutant_with(ty: SystemType, ring: &Ring, ts: &[i64]) -> Result<CommutantShape> {
    if !matches!(ring.kind(), RingKind::Fp { .. }) {
        return Err(RingError::WrongKind("prime field").into());
    }
    let g = ChevalleyGroup::new(ty, ring)?;
    let r = ring;
    let n = g.n();
    // Unknowns A_{ij} at column i*n + j; (A h − h A)_{ij} = A_{ij}(h_j − h_i).
    let mut rows: Vec<Vec<Value>> = Vec::new();
    for &a in &g.sys.all {
        for &t in ts {
            let h = g.h_gen(a, &r.from_i64(t))?;
            for i in 0..n {
                for j in 0..n {
                    let c = r.sub(h.get(j, j), h.get(i, i));
                    if !r.is_zero(&c) {
                        let mut row = vec![r.zero(); n * n];
                        row[i * n + j] = c;
                        rows.push(row);
                    }
                }
            }
        }
    }
    let sys = if rows.is_empty() {
        Mat::zero(r, 1, n * n)
    } else {
        Mat::from_fn(r, rows.len(), n * n, |i, j| rows[i][j].clone())
    };
    let null = sys.nullspace()?;
    let mut free = Vec::new();
    for k in 0..n * n {
        if null.iter().any(|v| !r.is_zero(&v[k])) {
            free.push((k / n + 1, k % n + 1));
        }
    }
    let m = g.sys.num_roots();
    let root_block_diagonal = free.iter().filter(|&&(i, j)| i <= m && j <= m).all(|&(i, j)| i == j);
    let cartan_block_full = (m + 1..=n).all(|i| (m + 1..=n).all(|j| free.contains(&(i, j))));
    let block_split = free.iter().all(|&(i, j)| (i <= m) == (j <= m));
    Ok(CommutantShape {
        system: ty.to_string(),
        ring: ring.to_string(),
        dimension: null.len(),
        free_positions: free,
        root_block_diagonal,
        cartan_block_full,
        block_split,
    })
}

/// Whether `A` commutes with `h_β(u)` for every root and the given `u`.
pub fn commutes_with_torus(g: &ChevalleyGroup, a: &Mat, us: &[Value]) -> Result<bool> {
    for &b in &g.sys.all {
        for u in us {
            let h = g.h_gen(b, u)?;
            if a.mul(&h) != h.mul(a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
