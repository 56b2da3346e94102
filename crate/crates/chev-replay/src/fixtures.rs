//! Printed matrices, stored as text grids under `fixtures/`.
//!
//! Format: `#` header lines, then `n`, then n rows of whitespace-separated
//! ring elements (integers or fractions).

use chev_ring::{Mat, Ring};

use crate::error::{ReplayError, Result};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        const FIXTURES: &[(&str, &str)] = &[$(($name, include_str!(concat!("../fixtures/", $name, ".txt")))),*];
    };
}

fixtures!(
    "b2_h_a1_m1",
    "b2_h_a2_m1",
    "b2_w_a1",
    "b2_w_e1",
    "b2_w_e1e2",
    "b2_w_e2",
    "b2_x_e2",
    "g2_h_a1_m1",
    "g2_h_a2_m1",
    "g2_h_a2_2",
    "g2_x_a1",
    "g2_x_a2",
);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Fixture {
    pub fn parse(name: &str, text: &str) -> Result<Fixture> {
        let bad = |why: &str| ReplayError::Fixture(name.into(), why.into());
        let mut header = Vec::new();
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty()).peekable();
        while let Some(l) = lines.next_if(|l| l.starts_with('#')) {
            header.push(l.trim_start_matches('#').trim().to_string());
        }
        let n: usize = lines.next().and_then(|l| l.parse().ok()).ok_or_else(|| bad("missing size line"))?;
        let rows: Vec<Vec<String>> = lines.map(|l| l.split_whitespace().map(String::from).collect()).collect();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(bad("grid is not n×n"));
        }
        Ok(Fixture { name: name.into(), header, rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn to_mat(&self, ring: &Ring) -> Result<Mat> {
        let mut m = Mat::zero(ring, self.n(), self.n());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                m.set(i, j, ring.parse_elem(s)?);
            }
        }
        Ok(m)
    }
}

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn fixture(name: &str) -> Result<Fixture> {
    let (_, text) = FIXTURES.iter().find(|(n, _)| *n == name).ok_or_else(|| ReplayError::UnknownFixture(name.into()))?;
    Fixture::parse(name, text)
}
