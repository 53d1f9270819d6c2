//! The `braided-twist` command line.
//!
//! Exit codes: 0 when every selected check passes, 1 when a check fails, 2 on
//! usage, parse or structural errors.

use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::calculus::suite::check_bicovariance;
use crate::catalog::{self, CatalogEntry, Params};
use crate::display::{self, Section};
use crate::error::{structural, Result};
use crate::exec;
use crate::grading::check_grading_lemmas;
use crate::hopf::suite::check_hopf_axioms;
use crate::hopf::HopfStructure;
use crate::report::Report;
use crate::spec_file;
use crate::twist::suite::{check_braided_axioms, check_schauenburg_within, check_twist_composition, check_untwisted_limit};
use crate::twist::twist;

pub const SUITES: [&str; 8] =
    ["hopf", "grading", "confluence", "braided", "schauenburg", "calculus", "composition", "untwisted"];

/// Calculus suites never go past this word length.
pub const CALCULUS_MAX_LEN: usize = 2;

/// Word bases larger than this get restricted Schauenburg and calculus sweeps
/// unless `--full`.
pub const FULL_SWEEP_LIMIT: usize = 50;

#[derive(Parser, Debug)]
#[command(name = "braided-twist", version, about = "Phase twists of graded Hopf ∗-algebras, checked exactly")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
struct Source {
    /// `catalog:NAME` or the path of a JSON spec file
    source: String,
    /// SU_q(n): matrix size
    #[arg(long)]
    n: Option<usize>,
    /// SU_q(n): character exponents, e.g. 1,0,-1
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    p: Option<Vec<i32>>,
    /// C_λ: the scalar λ, e.g. q^2
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct ShowArgs {
    /// Sections to print (relations, coproduct, antipode, braiding, star, degrees)
    #[arg(long = "show", value_delimiter = ',')]
    show: Vec<String>,
    /// Include hidden generators such as idempotents
    #[arg(long)]
    show_hidden: bool,
    /// Also write the tables as JSON (`-` for standard output)
    #[arg(long)]
    json: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in algebras
    List,
    /// Print the structure maps of an algebra
    Show {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: ShowArgs,
    },
    /// Print the structure maps of the twisted algebra
    Twist {
        #[command(flatten)]
        src: Source,
        #[command(flatten)]
        out: ShowArgs,
        /// Twist variables, applied in order
        #[arg(long = "phase-var", value_delimiter = ',', default_value = "u")]
        phase_var: Vec<String>,
    },
    /// Run verification suites
    Check {
        #[command(flatten)]
        src: Source,
        /// Comma-separated subset of: hopf, grading, confluence, braided, schauenburg, calculus, composition, untwisted
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
        /// Longest basis word examined (defaults per algebra)
        #[arg(long)]
        max_len: Option<usize>,
        /// Twist variables, applied in order
        #[arg(long = "phase-var", value_delimiter = ',', default_value = "u")]
        phase_var: Vec<String>,
        /// Write the reports as JSON (`-` for standard output)
        #[arg(long)]
        json: Option<String>,
        /// Run on the calling thread only
        #[arg(long)]
        sequential: bool,
        /// Do not restrict the Schauenburg and calculus sweeps on large word bases
        #[arg(long)]
        full: bool,
    },
}

/// Loads a catalog entry or a spec file.
pub fn load(source: &str, params: &Params) -> Result<CatalogEntry> {
    match source.strip_prefix("catalog:") {
        Some(name) => catalog::build(name, params),
        None => {
            let text = std::fs::read_to_string(Path::new(source))
                .map_err(|e| structural(format!("cannot read {source}: {e}")))?;
            spec_file::parse(&text)
        }
    }
}

fn params(src: &Source) -> Params {
    Params { n: src.n, p: src.p.clone(), lambda: src.lambda.clone() }
}

fn twisted(entry: &CatalogEntry, vars: &[String]) -> Result<Arc<dyn HopfStructure>> {
    let mut h: Arc<dyn HopfStructure> = entry.hopf.clone();
    for v in vars {
        h = Arc::new(twist(h, v)?);
    }
    Ok(h)
}

fn sections(names: &[String], default: &[Section]) -> Result<Vec<Section>> {
    if names.is_empty() {
        return Ok(default.to_vec());
    }
    names
        .iter()
        .map(|s| {
            Section::parse(s.trim()).ok_or_else(|| {
                let known: Vec<&str> = Section::ALL.iter().map(|x| x.name()).collect();
                structural(format!("unknown section '{s}' (known: {})", known.join(", ")))
            })
        })
        .collect()
}

fn write_json(path: &str, value: &serde_json::Value, out: &mut dyn Write) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("json serializes") + "\n";
    if path == "-" {
        out.write_all(text.as_bytes()).map_err(|e| structural(e.to_string()))
    } else {
        std::fs::write(path, text).map_err(|e| structural(format!("cannot write {path}: {e}")))
    }
}

/// Runs the selected suites; the reports come back in suite order.
pub fn run_suites(
    entry: &CatalogEntry,
    suites: &[String],
    max_len: usize,
    vars: &[String],
    full: bool,
) -> Result<Vec<Report>> {
    if max_len == 0 {
        return Err(structural("--max-len must be at least 1"));
    }
    let selected: Vec<&str> = if suites.is_empty() {
        SUITES.to_vec()
    } else {
        let mut v = Vec::new();
        for s in suites {
            let s = s.trim();
            if !SUITES.contains(&s) {
                return Err(structural(format!("unknown suite '{s}' (known: {})", SUITES.join(", "))));
            }
            v.push(s);
        }
        v
    };
    let root = entry.hopf.clone();
    let needs_twist = selected.iter().any(|s| matches!(*s, "braided" | "schauenburg" | "untwisted" | "calculus"));
    let tw = if needs_twist { Some(twisted(entry, vars)?) } else { None };
    let mut reports = Vec::new();
    for s in selected {
        match s {
            "hopf" => reports.push(check_hopf_axioms(&root, max_len)?),
            "grading" => reports.push(check_grading_lemmas(&root, max_len)?),
            "confluence" => reports.push(root.presentation().confluence_report(&root.label(), None)?),
            "braided" => reports.push(check_braided_axioms(tw.as_deref().expect("twisted"), max_len)?),
            "schauenburg" => {
                let h = tw.as_deref().expect("twisted");
                let basis = crate::hopf::suite::words_upto(h, max_len)?.len();
                let total = (!full && basis > FULL_SWEEP_LIMIT).then_some(max_len + 1);
                let mut rep = check_schauenburg_within(h, max_len, total)?;
                if total.is_some() {
                    rep.notes.push(format!("{basis} basis words; rerun with --full for every pair"));
                }
                reports.push(rep);
            }
            "calculus" => {
                let mut l = max_len.min(CALCULUS_MAX_LEN);
                let basis = crate::hopf::suite::words_upto(root.as_ref(), l)?.len();
                let shrunk = !full && l > 1 && basis > FULL_SWEEP_LIMIT;
                if shrunk {
                    l = 1;
                }
                for h in [root.clone() as Arc<dyn HopfStructure>, tw.clone().expect("twisted")] {
                    let mut rep = check_bicovariance(h.as_ref(), l)?;
                    if shrunk {
                        rep.notes.push(format!("{basis} basis words; calculus run on generators, rerun with --full"));
                    } else if l < max_len {
                        rep.notes.push(format!("calculus checks stop at word length {CALCULUS_MAX_LEN}"));
                    }
                    reports.push(rep);
                }
            }
            "composition" => reports.push(check_twist_composition(root.clone(), max_len)?),
            "untwisted" => reports.push(check_untwisted_limit(tw.as_deref().expect("twisted"), max_len)?),
            _ => unreachable!(),
        }
    }
    Ok(reports)
}

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                return 2;
            }
            let _ = out.write_all(text.as_bytes());
            return 0;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| structural(e.to_string());
    match cli.cmd {
        Command::List => {
            for name in catalog::NAMES {
                writeln!(out, "catalog:{name:<14} {}", catalog::description(name)).map_err(io)?;
            }
            Ok(0)
        }
        Command::Show { src, out: o } => {
            let entry = load(&src.source, &params(&src))?;
            let secs = sections(&o.show, &Section::ALL)?;
            let h: Arc<dyn HopfStructure> = entry.hopf.clone();
            let t = display::render(&entry, h.as_ref(), &secs, o.show_hidden)?;
            out.write_all(t.text.as_bytes()).map_err(io)?;
            for n in &entry.notes {
                writeln!(out, "note: {n}").map_err(io)?;
            }
            if let Some(path) = &o.json {
                write_json(path, &t.json, out)?;
            }
            Ok(0)
        }
        Command::Twist { src, out: o, phase_var } => {
            let entry = load(&src.source, &params(&src))?;
            let secs =
                sections(&o.show, &[Section::Relations, Section::Coproduct, Section::Antipode, Section::Braiding])?;
            let h = twisted(&entry, &phase_var)?;
            let t = display::render(&entry, h.as_ref(), &secs, o.show_hidden)?;
            out.write_all(t.text.as_bytes()).map_err(io)?;
            if let Some(path) = &o.json {
                write_json(path, &t.json, out)?;
            }
            Ok(0)
        }
        Command::Check { src, suites, max_len, phase_var, json, sequential, full } => {
            if sequential {
                exec::set_sequential(true);
            }
            let entry = load(&src.source, &params(&src))?;
            let l = max_len.unwrap_or(entry.default_max_len);
            let reports = run_suites(&entry, &suites, l, &phase_var, full)?;
            let passed = reports.iter().all(Report::passed);
            for r in &reports {
                out.write_all(r.to_human().as_bytes()).map_err(io)?;
            }
            for n in &entry.notes {
                writeln!(out, "note: {n}").map_err(io)?;
            }
            let failed: usize = reports.iter().map(|r| r.failed_checks().count()).sum();
            writeln!(out, "{}", if passed { "all checks passed".to_string() } else { format!("{failed} checks failed") })
                .map_err(io)?;
            if let Some(path) = &json {
                let doc = json!({
                    "algebra": entry.name,
                    "maxLen": l,
                    "phaseVars": phase_var,
                    "passed": passed,
                    "reports": reports,
                });
                write_json(path, &doc, out)?;
            }
            Ok(if passed { 0 } else { 1 })
        }
    }
}
