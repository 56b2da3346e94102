use serde::Serialize;

use crate::table::StructureTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub checks: Vec<Check>,
}

impl BasisReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn lin(coeffs: &[i64], vecs: &[Vec<i64>]) -> Vec<i64> {
    let mut out = vec![0; vecs[0].len()];
    for (c, v) in coeffs.iter().zip(vecs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// `[u, v]` for coordinate vectors, bilinearly from the table.
fn bracket_vec(t: &StructureTable, u: &[i64], v: &[i64]) -> Vec<i64> {
    let dim = t.dim();
    let mut out = vec![0; dim];
    for (i, &a) in u.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in v.iter().enumerate() {
            if b == 0 {
                continue;
            }
            for (o, x) in out.iter_mut().zip(t.bracket(i, j)) {
                *o += a * b * x;
            }
        }
    }
    out
}

/// Check the defining properties of a Chevalley basis against a table.
pub fn verify_chevalley_basis(t: &StructureTable) -> BasisReport {
    let sys = &t.sys;
    let m = sys.num_roots();
    let dim = t.dim();
    let unit = |i: usize| {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    };
    let mut checks = Vec::new();
    let mut push = |name: &str, bad: Vec<String>| {
        checks.push(Check {
            name: name.into(),
            pass: bad.is_empty(),
            detail: if bad.is_empty() { "ok".into() } else { bad.join("; ") },
        })
    };

    let bad = (m..dim)
        .flat_map(|i| (m..dim).map(move |j| (i, j)))
        .filter(|&(i, j)| t.bracket(i, j).iter().any(|&x| x != 0))
        .map(|(i, j)| format!("[h{},h{}]", i - m + 1, j - m + 1))
        .collect();
    push("cartan_commute", bad);

    let mut bad = Vec::new();
    for i in 0..2 {
        for (k, &b) in sys.all.iter().enumerate() {
            let mut want = vec![0; dim];
            want[k] = sys.pairing(b, sys.simple[i]);
            if t.bracket(m + i, k) != want {
                bad.push(format!("[h{}, x_{}]", i + 1, sys.name(b)));
            }
        }
    }
    push("cartan_action", bad);

    let bad = sys
        .all
        .iter()
        .enumerate()
        .filter(|&(k, &a)| t.cartan[&k] != t.coroot_expansion(a))
        .map(|(_, &a)| format!("[x_{0}, x_-({0})]", sys.name(a)))
        .collect();
    push("coroot_brackets", bad);

    let mut bad = Vec::new();
    for (&(i, j), &c) in &t.n {
        let (a, b) = (sys.all[i], sys.all[j]);
        let p = sys.root_string(a, b).unwrap().0;
        if c.abs() != p + 1 {
            bad.push(format!("|N({},{})| = {} != {}", sys.name(a), sys.name(b), c.abs(), p + 1));
        }
        if t.n.get(&(j, i)) != Some(&-c) {
            bad.push(format!("N({0},{1}) != -N({1},{0})", sys.name(a), sys.name(b)));
        }
        let (ni, nj) = (i ^ 1, j ^ 1);
        if t.n.get(&(ni, nj)) != Some(&-c) {
            bad.push(format!("N(-{0},-{1}) != -N({0},{1})", sys.name(a), sys.name(b)));
        }
    }
    push("structure_constants", bad);

    let mut bad = Vec::new();
    'outer: for x in 0..dim {
        for y in 0..dim {
            for z in 0..dim {
                let (ex, ey, ez) = (unit(x), unit(y), unit(z));
                let s1 = bracket_vec(t, &ex, &bracket_vec(t, &ey, &ez));
                let s2 = bracket_vec(t, &ey, &bracket_vec(t, &ez, &ex));
                let s3 = bracket_vec(t, &ez, &bracket_vec(t, &ex, &ey));
                if lin(&[1, 1, 1], &[s1, s2, s3]).iter().any(|&v| v != 0) {
                    let nm = |i: usize| if i < m { format!("x_{}", sys.name(sys.all[i])) } else { format!("h{}", i - m + 1) };
                    bad.push(format!("({}, {}, {})", nm(x), nm(y), nm(z)));
                    if bad.len() >= 5 {
                        break 'outer;
                    }
                }
            }
        }
    }
    push("jacobi", bad);

    BasisReport { checks }
}
