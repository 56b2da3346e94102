//! Comparison of generated matrices against the printed ones.
//!
//! Every fixture is first checked for group-theoretic sanity (invertible,
//! and `w² = h(−1)` for Weyl representatives). A fixture that fails sanity,
//! or that matches only under a documented reading, is quarantined with the
//! reason instead of being silently accepted.

use chev_group::{ChevalleyGroup, Frame};
use chev_ring::{Mat, Ring};
use chev_roots::{Root, SystemType};
use serde::Serialize;

use crate::error::{ReplayError, Result};
use crate::fixtures::fixture;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    X,
    W,
    H,
}

/// The generator a fixture is supposed to show.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Golden {
    pub fixture: &'static str,
    pub ty: SystemType,
    pub kind: GenKind,
    pub root: &'static str,
    pub param: &'static str,
}

pub const GOLDENS: &[Golden] = &[
    Golden { fixture: "b2_h_a1_m1", ty: SystemType::B2, kind: GenKind::H, root: "a1", param: "-1" },
    Golden { fixture: "b2_h_a2_m1", ty: SystemType::B2, kind: GenKind::H, root: "a2", param: "-1" },
    Golden { fixture: "b2_x_e2", ty: SystemType::B2, kind: GenKind::X, root: "e2", param: "1" },
    Golden { fixture: "b2_w_a1", ty: SystemType::B2, kind: GenKind::W, root: "e1-e2", param: "1" },
    Golden { fixture: "b2_w_e1e2", ty: SystemType::B2, kind: GenKind::W, root: "e1+e2", param: "1" },
    Golden { fixture: "b2_w_e1", ty: SystemType::B2, kind: GenKind::W, root: "e1", param: "1" },
    Golden { fixture: "b2_w_e2", ty: SystemType::B2, kind: GenKind::W, root: "e2", param: "1" },
    Golden { fixture: "g2_h_a1_m1", ty: SystemType::G2, kind: GenKind::H, root: "a1", param: "-1" },
    Golden { fixture: "g2_h_a2_m1", ty: SystemType::G2, kind: GenKind::H, root: "a2", param: "-1" },
    Golden { fixture: "g2_x_a1", ty: SystemType::G2, kind: GenKind::X, root: "a1", param: "1" },
    Golden { fixture: "g2_x_a2", ty: SystemType::G2, kind: GenKind::X, root: "a2", param: "1" },
    Golden { fixture: "g2_h_a2_2", ty: SystemType::G2, kind: GenKind::H, root: "a2", param: "2" },
];

/// Fixtures the frame search must reproduce simultaneously.
pub const RECONCILE_TARGETS: &[&str] = &["b2_x_e2", "b2_w_a1", "b2_w_e1e2", "g2_x_a1", "g2_x_a2"];

pub fn golden(name: &str) -> Result<&'static Golden> {
    GOLDENS.iter().find(|g| g.fixture == name).ok_or_else(|| ReplayError::UnknownFixture(name.into()))
}

/// Ring used for every golden comparison: p-local rationals at 5, where all
/// printed fractions live.
pub fn golden_ring(ty: SystemType) -> Result<Ring> {
    Ok(Ring::parse("zloc:5", ty.required_inverses())?)
}

impl Golden {
    pub fn root(&self, g: &ChevalleyGroup) -> Root {
        g.sys.parse_root(self.root).expect("catalog roots are valid")
    }

    pub fn generate(&self, g: &ChevalleyGroup) -> Result<Mat> {
        self.generate_with(g, self.param)
    }

    pub fn generate_with(&self, g: &ChevalleyGroup, param: &str) -> Result<Mat> {
        let t = g.ring().parse_elem(param)?;
        let a = self.root(g);
        Ok(match self.kind {
            GenKind::X => g.x_gen(a, &t)?,
            GenKind::W => g.w_gen(a, &t)?,
            GenKind::H => g.h_gen(a, &t)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum GoldenStatus {
    /// Equal to the generator in the native basis.
    Exact,
    /// Equal after the committed frame change.
    Reconciled,
    /// Set aside as a suspected misprint; `positions` are 1-based.
    Quarantined { reason: String, positions: Vec<(usize, usize)> },
    Mismatch { positions: Vec<(usize, usize)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenReport {
    pub name: String,
    pub source: String,
    #[serde(flatten)]
    pub status: GoldenStatus,
    pub sanity: Vec<String>,
}

impl GoldenReport {
    pub fn is_match(&self) -> bool {
        matches!(self.status, GoldenStatus::Exact | GoldenStatus::Reconciled)
    }
}

fn one_based(ps: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    ps.into_iter().map(|(i, j)| (i + 1, j + 1)).collect()
}

/// Sanity identities a printed matrix must satisfy to be trusted; returns
/// the failed ones.
pub fn sanity(gl: &Golden, g: &ChevalleyGroup, m: &Mat) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    if m.unit_det().is_none() {
        bad.push("determinant is not a unit".to_string());
    }
    let r = g.ring();
    match gl.kind {
        GenKind::W => {
            let h = g.h_gen(gl.root(g), &r.from_i64(-1))?;
            if m.mul(m) != h {
                bad.push(format!("w^2 != h_{}(-1)", gl.root));
            }
            if !m.pow(4).is_identity() {
                bad.push("w^4 != 1".into());
            }
        }
        GenKind::H => {
            if !m.is_diagonal() {
                bad.push("torus element is not diagonal".into());
            }
            let cartan = g.sys.cartan_positions();
            if cartan.iter().any(|&c| !r.is_one(m.get(c, c))) {
                bad.push("torus element moves the Cartan part".into());
            }
        }
        GenKind::X => {
            let n = m.sub(&g.identity());
            if !n.pow(5).is_zero() {
                bad.push("x - 1 is not nilpotent".into());
            }
        }
    }
    Ok(bad)
}

/// Documented readings for fixtures that do not match as printed.
fn known_misprint(name: &str) -> Option<&'static str> {
    match name {
        "b2_w_e1" => Some("rows 5 and 9 coincide, so the printed matrix is singular; rows 1-4 agree with w_e1(1) h_a1(-1)"),
        "b2_w_e2" => Some("Cartan block printed as [[1,0],[0,2]]; w_e2(1) has [[1,0],[2,-1]] there"),
        "g2_h_a2_2" => Some("printed diagonal is h_a2(1/2): the exponent of the torus action is inverted"),
        _ => None,
    }
}

pub fn golden_compare(name: &str) -> Result<GoldenReport> {
    let gl = golden(name)?;
    let fx = fixture(name)?;
    let ring = golden_ring(gl.ty)?;
    let printed = fx.to_mat(&ring)?;
    let native = ChevalleyGroup::with_frame(Frame::native(gl.ty), &ring)?;
    let framed = ChevalleyGroup::with_frame(Frame::printed(gl.ty), &ring)?;
    let sanity_fails = sanity(gl, &framed, &printed)?;
    let generated = gl.generate(&framed)?;
    let status = if sanity_fails.is_empty() && gl.generate(&native)? == printed {
        GoldenStatus::Exact
    } else if sanity_fails.is_empty() && generated == printed {
        GoldenStatus::Reconciled
    } else {
        let positions = one_based(generated.diff_positions(&printed));
        match known_misprint(name) {
            Some(reason) => GoldenStatus::Quarantined { reason: reason.into(), positions },
            None if !sanity_fails.is_empty() => {
                GoldenStatus::Quarantined { reason: format!("fails sanity: {}", sanity_fails.join(", ")), positions }
            }
            None => GoldenStatus::Mismatch { positions },
        }
    };
    Ok(GoldenReport { name: name.into(), source: fx.header.join("; "), status, sanity: sanity_fails })
}

/// Every frame with `ℓ ∈ {1, 2, 3}` that reproduces all reconciliation
/// targets of the given type.
pub fn search_frames(ty: SystemType) -> Result<Vec<Frame>> {
    let ring = golden_ring(ty)?;
    let targets: Vec<(&Golden, Mat)> = RECONCILE_TARGETS
        .iter()
        .map(|n| golden(n).unwrap())
        .filter(|g| g.ty == ty)
        .map(|g| Ok((g, fixture(g.fixture)?.to_mat(&ring)?)))
        .collect::<Result<_>>()?;
    let mut found = Vec::new();
    for f in Frame::enumerate(ty, &[1, 2, 3]) {
        let g = ChevalleyGroup::with_frame(f.clone(), &ring)?;
        let mut ok = true;
        for (gl, m) in &targets {
            if &gl.generate(&g)? != m {
                ok = false;
                break;
            }
        }
        if ok {
            found.push(f);
        }
    }
    Ok(found)
}

/// Number of entries, over every printed fixture of the frame's type, on
/// which the frame's generators agree with print.
pub fn agreement(frame: &Frame) -> Result<usize> {
    let ring = golden_ring(frame.ty)?;
    let g = ChevalleyGroup::with_frame(frame.clone(), &ring)?;
    let mut score = 0;
    for gl in GOLDENS.iter().filter(|gl| gl.ty == frame.ty) {
        let m = fixture(gl.fixture)?.to_mat(&ring)?;
        let n = m.rows();
        score += n * n - gl.generate(&g)?.diff_positions(&m).len();
    }
    Ok(score)
}

/// The matching frame with the largest [`agreement`], earliest in
/// enumeration order on ties. The matching frames differ by a ±1 torus
/// character, which the reconciliation targets cannot see.
pub fn select_frame(ty: SystemType) -> Result<Option<Frame>> {
    let mut best: Option<(usize, Frame)> = None;
    for f in search_frames(ty)? {
        let a = agreement(&f)?;
        if best.as_ref().map_or(true, |(b, _)| a > *b) {
            best = Some((a, f));
        }
    }
    Ok(best.map(|(_, f)| f))
}
