//! `chev`: batch front end over the Chevalley group crates.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 on a
//! usage error (bad arguments, unknown ring, or a ring the system refuses).

use std::fmt::Write as _;
use std::process::ExitCode;

use chev_algebra::StructureTable;
use chev_auto::{verify_automorphism, StandardAutoSpec};
use chev_group::{check_steinberg, ChevalleyGroup, Exec, Frame, GroupError};
use chev_involution::{residue_compatible, split_module};
use chev_replay::runner::{parse_steps, run_steps, StepReport};
use chev_ring::{Mat, Ring};
use chev_roots::{RootSystemData, SystemType};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "chev", version, about = "Adjoint Chevalley groups of types B2 and G2 over local rings")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FrameArg {
    /// The frame the printed matrices are written in.
    Printed,
    /// Plain exponentials of the Chevalley basis.
    Native,
}

#[derive(Subcommand)]
enum Cmd {
    /// The ordered root list.
    Roots {
        #[arg(long)]
        system: SystemType,
    },
    /// Structure constants N_{α,β}.
    Constants {
        #[arg(long)]
        system: SystemType,
    },
    /// Matrix of a group element, e.g. `x:a2:1` or `w:a1:1 h:a2:-1`.
    Gen {
        #[arg(long)]
        system: SystemType,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        elem: String,
        #[arg(long, value_enum, default_value_t = FrameArg::Printed)]
        frame: FrameArg,
    },
    /// Randomized check of the Steinberg relations R1–R6.
    Relations {
        #[arg(long)]
        system: SystemType,
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Eigenmodule ranks of an involution.
    Split {
        #[arg(long)]
        system: SystemType,
        #[arg(long)]
        ring: String,
        #[arg(long)]
        elem: String,
    },
    /// Verify a composed standard automorphism given as JSON (inline or a file path).
    Autocheck {
        #[arg(long)]
        spec: String,
        #[arg(long, default_value = "b2")]
        system: SystemType,
        #[arg(long, default_value = "fp2:5")]
        ring: String,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Replay the printed computations.
    Replay {
        #[arg(long, default_value = "all")]
        step: String,
    },
}

/// A finished command: the report and whether every check passed.
struct Outcome {
    json: Value,
    text: String,
    pass: bool,
}

impl Outcome {
    fn info(json: Value, text: String) -> Outcome {
        Outcome { json, text, pass: true }
    }
}

type Usage = String;

fn ring(spec: &str) -> Result<Ring, Usage> {
    Ring::parse(spec, &[]).map_err(|e| format!("bad ring `{spec}`: {e}"))
}

fn group_err(e: GroupError) -> Usage {
    match e {
        GroupError::MissingInverse { system: SystemType::G2, inverse: 3, ring } => format!(
            "refused: G2 is only treated over rings containing 1/3 (if Φ = G2 then 1/3 ∈ R), and 3 is not a unit in {ring}"
        ),
        e => e.to_string(),
    }
}

fn group(ty: SystemType, spec: &str, frame: FrameArg) -> Result<ChevalleyGroup, Usage> {
    let r = ring(spec)?;
    let f = match frame {
        FrameArg::Printed => Frame::printed(ty),
        FrameArg::Native => Frame::native(ty),
    };
    ChevalleyGroup::with_frame(f, &r).map_err(group_err)
}

fn element(g: &ChevalleyGroup, s: &str) -> Result<Mat, Usage> {
    let w = g.parse_word(s).map_err(group_err)?;
    g.eval_word(&w).map_err(group_err)
}

fn matrix_text(m: &Mat) -> String {
    let rows = m.to_strings();
    let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}

fn roots(ty: SystemType) -> Outcome {
    let sys = RootSystemData::new(ty);
    let mut text = String::new();
    let list: Vec<Value> = sys
        .all
        .iter()
        .enumerate()
        .map(|(k, &r)| {
            let (i, j) = sys.simple_coeffs(r);
            let long = sys.is_long(r);
            let coeffs = format!("({i}, {j})");
            writeln!(text, "{:>2}  {:<8} {coeffs:<9} {}", k + 1, sys.name(r), if long { "long" } else { "short" }).unwrap();
            json!({
                "index": k + 1,
                "name": sys.name(r),
                "coefficients": [i, j],
                "coordinates": r,
                "positive": sys.is_positive(r),
                "long": long,
            })
        })
        .collect();
    Outcome::info(json!({ "system": ty.to_string(), "roots": list }), text)
}

fn constants(ty: SystemType) -> Outcome {
    let t = StructureTable::new(ty);
    let name = |k: usize| t.sys.name(t.sys.all[k]);
    let mut text = String::new();
    let table: Vec<Value> = t
        .n
        .iter()
        .map(|(&(a, b), &n)| {
            writeln!(text, "N({}, {}) = {n}", name(a), name(b)).unwrap();
            json!({ "alpha": name(a), "beta": name(b), "n": n })
        })
        .collect();
    Outcome::info(json!({ "system": ty.to_string(), "n": table }), text)
}

fn relations(ty: SystemType, spec: &str, samples: usize, seed: u64, sequential: bool) -> Result<Outcome, Usage> {
    let g = group(ty, spec, FrameArg::Printed)?;
    let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
    let rep = check_steinberg(&g, samples, seed, exec).map_err(group_err)?;
    let mut text = format!("{} over {}, {} samples\n", rep.system, rep.ring, rep.samples);
    for r in &rep.relations {
        let verdict = if r.failures.is_empty() { "PASS" } else { "FAIL" };
        writeln!(text, "{}: {verdict} ({} checked, {} failures)", r.relation, r.checked, r.failures.len()).unwrap();
        for f in r.failures.iter().take(5) {
            writeln!(text, "  {f}").unwrap();
        }
    }
    for c in &rep.commutator_constants {
        let terms: Vec<String> = c.terms.iter().map(|t| format!("c{}{}={}", t.i, t.j, t.c)).collect();
        let rhs = if terms.is_empty() { "commute".to_string() } else { terms.join(" ") };
        writeln!(text, "[x_{}, x_{}]: {rhs}", c.alpha, c.beta).unwrap();
    }
    Ok(Outcome { pass: rep.all_pass(), json: serde_json::to_value(&rep).unwrap(), text })
}

fn split(ty: SystemType, spec: &str, elem: &str) -> Result<Outcome, Usage> {
    let g = group(ty, spec, FrameArg::Printed)?;
    let a = element(&g, elem)?;
    let s = split_module(&a).map_err(|e| e.to_string())?;
    let compatible = residue_compatible(&a, &s).map_err(|e| e.to_string())?;
    let text = format!("rank(+1) = {}\nrank(-1) = {}\nresidue compatible: {compatible}\n", s.rank0, s.rank1);
    Ok(Outcome {
        json: json!({ "system": ty.to_string(), "ring": spec, "elem": elem, "rank0": s.rank0, "rank1": s.rank1, "residue_compatible": compatible }),
        text,
        pass: compatible,
    })
}

fn autocheck(spec: &str, ty: SystemType, ring_spec: &str, samples: usize, seed: u64) -> Result<Outcome, Usage> {
    let raw = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec).map_err(|e| format!("cannot read {spec}: {e}"))?
    };
    let parsed: StandardAutoSpec = serde_json::from_str(&raw).map_err(|e| format!("bad automorphism spec: {e}"))?;
    let r = ring(ring_spec)?;
    let rep = verify_automorphism(&parsed, ty, &r, samples, seed).map_err(|e| match e {
        chev_auto::AutoError::Group(g) => group_err(g),
        e => e.to_string(),
    })?;
    let mut text = format!("{} over {}\n", rep.system, rep.ring);
    for c in &rep.checks {
        let verdict = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        writeln!(text, "{}: {verdict} ({} checked)", c.name, c.checked).unwrap();
        for f in c.failures.iter().take(5) {
            writeln!(text, "  {f}").unwrap();
        }
    }
    Ok(Outcome { pass: rep.all_pass(), json: serde_json::to_value(&rep).unwrap(), text })
}

fn replay(step: &str) -> Result<Outcome, Usage> {
    let steps = parse_steps(step).map_err(|e| e.to_string())?;
    let reports = run_steps(&steps).map_err(|e| e.to_string())?;
    let pass = reports.iter().all(StepReport::passed);
    let mut text = String::new();
    for r in &reports {
        writeln!(text, "{}: {}", r.step, if r.passed() { "PASS" } else { "FAIL" }).unwrap();
        if let Value::Object(m) = &r.details {
            for (k, v) in m.iter().filter(|(_, v)| !v.is_object()) {
                if v.as_array().is_some_and(|a| a.iter().any(|x| x.is_object() || x.is_array())) {
                    continue;
                }
                writeln!(text, "  {k}: {v}").unwrap();
            }
        }
    }
    let json = match reports.as_slice() {
        [one] => serde_json::to_value(one).unwrap(),
        many => serde_json::to_value(many).unwrap(),
    };
    Ok(Outcome { json, text, pass })
}

fn run(cli: &Cli) -> Result<Outcome, Usage> {
    match &cli.cmd {
        Cmd::Roots { system } => Ok(roots(*system)),
        Cmd::Constants { system } => Ok(constants(*system)),
        Cmd::Gen { system, ring, elem, frame } => {
            let g = group(*system, ring, *frame)?;
            let m = element(&g, elem)?;
            Ok(Outcome::info(json!(m.to_strings()), matrix_text(&m)))
        }
        Cmd::Relations { system, ring, samples, seed, sequential } => {
            relations(*system, ring, *samples, *seed, *sequential)
        }
        Cmd::Split { system, ring, elem } => split(*system, ring, elem),
        Cmd::Autocheck { spec, system, ring, samples, seed } => autocheck(spec, *system, ring, *samples, *seed),
        Cmd::Replay { step } => replay(step),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = if cli.json { Format::Json } else { cli.format };
    match run(&cli) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
                Format::Text => print!("{}", out.text),
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
