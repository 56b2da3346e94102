//! Ring descriptors and their textual grammar.
//!
//! | spelling   | ring                                   |
//! |------------|----------------------------------------|
//! | `zmod:p^k` | Z/p^k                                  |
//! | `zloc:p`   | Z localized at (p), as reduced fractions |
//! | `fp:p`     | F_p                                    |
//! | `dual:p`   | F_p[ε]/(ε²)                            |
//! | `jet:m`    | Q ⊕ Q·y_1 ⊕ … ⊕ Q·y_m with y_i·y_j = 0   |
//! | `fp2:p`    | F_{p²} = F_p[i]/(i² − n), n a non-residue |

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, RingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    ZMod { p: u64, k: u32 },
    ZLoc { p: u64 },
    Fp { p: u64 },
    Dual { p: u64 },
    Jet { m: usize },
    Fp2 { p: u64 },
}

/// A ring together with the small integers that must be invertible in it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    pub kind: RingKind,
    pub required_inverses: Vec<i64>,
}

impl RingDescriptor {
    pub fn new(kind: RingKind) -> Self {
        RingDescriptor { kind, required_inverses: Vec::new() }
    }

    pub fn requiring(mut self, inverses: &[i64]) -> Self {
        for &u in inverses {
            if !self.required_inverses.contains(&u) {
                self.required_inverses.push(u);
            }
        }
        self.required_inverses.sort_unstable();
        self
    }

    /// Characteristic of the residue field, if it is finite.
    pub fn residue_char(&self) -> Option<u64> {
        match self.kind {
            RingKind::ZMod { p, .. }
            | RingKind::ZLoc { p }
            | RingKind::Fp { p }
            | RingKind::Dual { p }
            | RingKind::Fp2 { p } => Some(p),
            RingKind::Jet { .. } => None,
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RingKind::ZMod { p, k } => write!(f, "zmod:{p}^{k}"),
            RingKind::ZLoc { p } => write!(f, "zloc:{p}"),
            RingKind::Fp { p } => write!(f, "fp:{p}"),
            RingKind::Dual { p } => write!(f, "dual:{p}"),
            RingKind::Jet { m } => write!(f, "jet:{m}"),
            RingKind::Fp2 { p } => write!(f, "fp2:{p}"),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

fn num<T: FromStr>(s: &str, whole: &str) -> Result<T> {
    s.trim().parse().map_err(|_| RingError::BadDescriptor(whole.to_string()))
}

impl FromStr for RingKind {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, arg) = s.split_once(':').ok_or_else(|| RingError::BadDescriptor(s.into()))?;
        Ok(match tag.trim() {
            "zmod" => {
                let (p, k) = match arg.split_once('^') {
                    Some((p, k)) => (num(p, s)?, num(k, s)?),
                    None => (num(arg, s)?, 1),
                };
                RingKind::ZMod { p, k }
            }
            "zloc" => RingKind::ZLoc { p: num(arg, s)? },
            "fp" => RingKind::Fp { p: num(arg, s)? },
            "dual" => RingKind::Dual { p: num(arg, s)? },
            "jet" => RingKind::Jet { m: num(arg, s)? },
            "fp2" => RingKind::Fp2 { p: num(arg, s)? },
            _ => return Err(RingError::BadDescriptor(s.into())),
        })
    }
}

impl FromStr for RingDescriptor {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(RingDescriptor::new(s.parse()?))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
