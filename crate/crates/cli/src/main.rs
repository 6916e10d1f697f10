//! `sv2`: build, verify and classify two-strand representations from JSON files.
//!
//! Exit status: 0 pass, 1 fail, 2 unreadable or malformed input, 3 the
//! input violates a hypothesis of the requested operation.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use sv2_core::fuzz::{self, FuzzConfig};
use sv2_core::rhizome::{parse_pattern, pattern_string};
use sv2_core::{
    analyze, build_v, canonical_form, endo_report, indecomposable, isomorphic, split_t, split_weight_blocks,
    verify_hdeg, verify_sv2, Error, GaussRat, Mat, RelationReport, Rep, Seed, VerdictKind,
};

#[derive(Parser)]
#[command(name = "sv2", version, about = "Calibrated two-strand representations over Q(i)")]
struct Cli {
    /// Print machine-readable JSON instead of a summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Build the representation from a seed file; prints a Rep.
    Construct { seed: PathBuf },
    /// Check the defining relations of a Rep; exit 0 iff all hold.
    Verify {
        rep: PathBuf,
        /// Check the four Hecke relations instead.
        #[arg(long)]
        hecke: bool,
    },
    /// Zero-pattern analysis of a seed file, a JSON matrix or a `.`/`*` pattern file.
    Rhizome { input: PathBuf },
    /// Indecomposability verdict for a seed, with a splitting when decomposable.
    Indecomposable { seed: PathBuf },
    /// Commutant of y1, y2, s for a Rep.
    Endo { rep: PathBuf },
    /// Orbit representative of a regular rhizomatic seed.
    Canonical { seed: PathBuf },
    /// Exit 0 iff two seeds give isomorphic representations.
    Isomorphic { first: PathBuf, second: PathBuf },
    /// Separate a Rep into its core and e-annihilated weight blocks.
    Split {
        rep: PathBuf,
        /// Also try to split the core along its lower-left block T.
        #[arg(long)]
        t: bool,
    },
    /// Randomized property suite.
    Fuzz {
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 4)]
        lmax: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Parse(String),
    Hypothesis(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::DimensionMismatch(_) => Failure::Parse(e.to_string()),
            _ => Failure::Hypothesis(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load_seed(path: &Path) -> Result<Seed, Failure> {
    let seed: Seed = load(path)?;
    seed.check_shape()?;
    Ok(seed)
}

fn load_rep(path: &Path) -> Result<Rep, Failure> {
    let rep: Rep = load(path)?;
    rep.check_shape()?;
    Ok(rep)
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("report serializes")
}

fn show_matrix(out: &mut String, name: &str, m: &Mat) {
    let cells: Vec<Vec<String>> = m.to_rows().iter().map(|r| r.iter().map(GaussRat::to_string).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let _ = writeln!(out, "{name} =");
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [{}]", line.join(" "));
    }
}

fn show_relations(out: &mut String, report: &RelationReport) {
    if report.passed {
        let _ = writeln!(out, "all relations hold");
        return;
    }
    let _ = writeln!(out, "{} violated entries", report.violations.len());
    for v in report.violations.iter().take(20) {
        let _ = writeln!(out, "  {} at ({}, {}): {} != {}", v.relation, v.row, v.col, v.lhs, v.rhs);
    }
}

fn emit<T: Serialize>(json: bool, value: &T, human: impl FnOnce(&mut String)) {
    if json {
        println!("{}", to_json(value));
    } else {
        let mut out = String::new();
        human(&mut out);
        print!("{out}");
    }
}

fn rhizome_input(path: &Path) -> Result<Mat, Failure> {
    let text = read(path)?;
    let trimmed = text.trim_start();
    let parse_err = |e: serde_json::Error| Failure::Parse(format!("{}: {e}", path.display()));
    if trimmed.starts_with('{') {
        let seed: Seed = serde_json::from_str(&text).map_err(parse_err)?;
        seed.check_shape()?;
        Ok(seed.s)
    } else if trimmed.starts_with('[') {
        serde_json::from_str(&text).map_err(parse_err)
    } else {
        parse_pattern(&text).map_err(|e| match e {
            Error::Parse(m) => Failure::Parse(format!("{}: {m}", path.display())),
            other => other.into(),
        })
    }
}

fn run(cli: Cli) -> Outcome {
    let json = cli.json;
    match cli.verb {
        Verb::Construct { seed } => {
            let rep = build_v(&load_seed(&seed)?)?;
            println!("{}", to_json(&rep));
            Ok(true)
        }
        Verb::Verify { rep, hecke } => {
            let rep = load_rep(&rep)?;
            let report = if hecke { verify_hdeg(&rep)? } else { verify_sv2(&rep)? };
            emit(json, &report, |o| show_relations(o, &report));
            Ok(report.passed)
        }
        Verb::Rhizome { input } => {
            let s = rhizome_input(&input)?;
            let report = analyze(&s);
            emit(json, &report, |o| {
                let _ = writeln!(o, "{}", pattern_string(&s));
                let _ = writeln!(o, "classes: {}", report.n_classes);
                let _ = writeln!(o, "zero rows: {}", report.zero_rows);
                let _ = writeln!(o, "zero columns: {}", report.zero_cols);
                let _ = writeln!(o, "is_rhizomatic: {}", report.is_rhizomatic);
            });
            Ok(true)
        }
        Verb::Indecomposable { seed } => {
            let verdict = indecomposable(&load_seed(&seed)?)?;
            emit(json, &verdict, |o| {
                let _ = writeln!(o, "{:?}: {}", verdict.value, verdict.reason);
                if let Some(d) = verdict.endo_dimension {
                    let _ = writeln!(o, "commutant dimension: {d}");
                }
                if let Some(w) = &verdict.witness {
                    let _ = writeln!(o, "invariant complements of dimensions {} and {}", w.first.len(), w.second.len());
                }
            });
            Ok(verdict.value != VerdictKind::Unknown)
        }
        Verb::Endo { rep } => {
            let report = endo_report(&load_rep(&rep)?)?;
            emit(json, &report, |o| {
                let _ = writeln!(o, "dimension: {}", report.dimension);
                let _ = writeln!(o, "all diagonal: {}", report.all_diagonal);
                for (n, b) in report.basis.iter().enumerate() {
                    show_matrix(o, &format!("X{}", n + 1), b);
                }
            });
            Ok(true)
        }
        Verb::Canonical { seed } => {
            let form = canonical_form(&load_seed(&seed)?)?;
            if json {
                println!("{}", form.to_json());
            } else {
                let ab: Vec<String> = form.ab.iter().map(GaussRat::to_string).collect();
                println!("(a, b) = ({})", ab.join(", "));
                let mut out = String::new();
                show_matrix(&mut out, "S", &form.s);
                print!("{out}");
            }
            Ok(true)
        }
        Verb::Isomorphic { first, second } => {
            let outcome = isomorphic(&load_seed(&first)?, &load_seed(&second)?)?;
            emit(json, &outcome, |o| {
                let word = if outcome.isomorphic { "isomorphic" } else { "not isomorphic" };
                let _ = writeln!(o, "{word}: {}", outcome.reason);
            });
            Ok(outcome.isomorphic)
        }
        Verb::Split { rep, t } => {
            let split = split_weight_blocks(&load_rep(&rep)?)?;
            let core_split = if t { Some(split_t(&split.core)?) } else { None };
            let value = serde_json::json!({ "weight_split": split, "t_split": core_split });
            emit(json, &value, |o| {
                let p = &split.partition;
                let _ = writeln!(o, "core: +1 weights {:?}, -1 weights {:?}", p.plus_block, p.minus_block);
                for b in &p.other_blocks {
                    let _ = writeln!(o, "d = {}: +d at {:?}, -d at {:?}", b.d, b.plus, b.minus);
                }
                if let Some(v) = &core_split {
                    let _ = writeln!(o, "core split: {:?}: {}", v.value, v.reason);
                }
            });
            Ok(core_split.is_none_or(|v| v.value == VerdictKind::Decomposable))
        }
        Verb::Fuzz { kmax, lmax, trials, seed } => {
            let report = fuzz::run(&FuzzConfig { kmax, lmax, trials, seed })?;
            emit(json, &report, |o| {
                for c in &report.checks {
                    let status = if c.failed == 0 { "ok  " } else { "FAIL" };
                    let _ = writeln!(o, "{status} {:<26} {} passed, {} failed", c.name, c.passed, c.failed);
                    if let Some(f) = &c.first_failure {
                        let _ = writeln!(o, "     first failure: {f}");
                    }
                }
            });
            Ok(report.all_passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Hypothesis(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
