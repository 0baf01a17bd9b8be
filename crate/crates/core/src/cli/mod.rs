//! Workspace parsing, command dispatch and certification reports.
//!
//! Exit status: `0` when every verdict passes, `1` when some verdict fails, `2` on input
//! errors (unreadable or malformed workspace, unknown names, bad command line).

mod parse;
mod report;

pub use parse::{parse_str, parse_workspace, Workspace, DEFAULT_DEPTH};
pub use report::{emit_report, CheckResult, Format, Status};

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::repcat::{
    q_functor, restriction_check, s_functor, strip_projectives, verify_roundtrip_r,
    verify_roundtrip_s, RepeComplex, RepeHom, TiltPair,
};
use crate::rmod::{decompose_grouped, Module};
use crate::wtilt::{check_good, check_wakamatsu, derive_s_data, CotorsionData, TiltingModule, Verdict};

/// Input errors; each maps to exit status 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: reference error: {msg}")]
    Reference { line: usize, msg: String },
    #[error("line {line}: invalid: {msg}")]
    Invariant { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
    #[error("unknown {kind} `{name}`")]
    UnknownName { kind: &'static str, name: String },
    #[error("{0}")]
    Usage(String),
}

/// Command line of the `repequiv` binary.
#[derive(Debug, Parser)]
#[command(name = "repequiv", version, about = "Certify Wakamatsu-tilting data and repetitive-category equivalences")]
pub struct Cli {
    /// Workspace file.
    pub workspace: PathBuf,
    /// Report format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

/// Selection of the tilting module and cotorsion data for functor commands. Each flag may
/// be omitted when the workspace declares exactly one candidate.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct Setup {
    /// Tilting module.
    #[arg(long)]
    pub tilt: Option<String>,
    /// Cotorsion data over `R`.
    #[arg(long = "data-r")]
    pub data_r: Option<String>,
    /// Cotorsion data over `S`; derived from the `R`-data when omitted.
    #[arg(long = "data-s")]
    pub data_s: Option<String>,
}

/// The commands.
#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Certify a tilting module (or the basic module of a named module) as Wakamatsu-tilting.
    CheckTilting {
        name: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Describe `S = End_R(T)` and check both endomorphism conditions.
    EndAlgebra { name: String },
    /// Check that a tilting module is good for the given cotorsion data.
    CheckGood {
        name: String,
        #[arg(long = "data-r")]
        data_r: Option<String>,
        #[arg(long = "data-s")]
        data_s: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Apply `S_T` to a complex over `R`.
    ApplySt {
        complex: String,
        #[command(flatten)]
        setup: Setup,
    },
    /// Apply `Q_DT` to a complex over `S`.
    ApplyQdt {
        complex: String,
        #[command(flatten)]
        setup: Setup,
    },
    /// Verify the round trip through both functors on a complex over `R` (or over `S`).
    VerifyRoundtrip {
        complex: String,
        #[command(flatten)]
        setup: Setup,
        /// Treat the complex as living over `S` when `R` and `S` coincide.
        #[arg(long)]
        dual: bool,
    },
    /// Check `F_T(M) ≅ Hom_R(T, M)` stably on the `𝒜`-generators.
    RestrictionCheck {
        #[command(flatten)]
        setup: Setup,
    },
    /// List the basis of one component of a complex.
    DescribeBasis { complex: String, degree: i32 },
    /// Run every applicable check on every declared object.
    Report {
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
}

fn unknown(kind: &'static str, name: &str) -> CliError {
    CliError::UnknownName { kind, name: name.to_string() }
}

/// A tilting module by name, or the basic version of a named module.
fn tilting_named(ws: &Workspace, name: &str) -> Result<Result<TiltingModule, String>, CliError> {
    if let Some(t) = ws.tilting(name) {
        return Ok(Ok(t.clone()));
    }
    let m = ws.module(name).ok_or_else(|| unknown("tilting module or module", name))?;
    Ok(basic_tilting(m, name).map_err(|e| e.to_string()))
}

fn basic_tilting(m: &Module, name: &str) -> Result<TiltingModule, Box<dyn std::error::Error>> {
    let reps: Vec<Module> = decompose_grouped(m)?.into_iter().map(|(s, _)| s).collect();
    Ok(TiltingModule::from_summands(&reps, &format!("End({name})"))?)
}

fn only<'a, T>(list: impl Iterator<Item = (&'a String, T)>, kind: &'static str) -> Result<(String, T), CliError> {
    let all: Vec<(&String, T)> = list.collect();
    match all.len() {
        1 => {
            let (n, v) = all.into_iter().next().expect("one element");
            Ok((n.clone(), v))
        }
        0 => Err(CliError::Usage(format!("no {kind} declared"))),
        _ => Err(CliError::Usage(format!("several {kind}s declared; name one with a flag"))),
    }
}

/// Resolved functor setup.
struct Resolved {
    tilt: String,
    pair: Result<TiltPair, String>,
    data_r: CotorsionData,
    data_s: CotorsionData,
}

fn resolve(ws: &Workspace, s: &Setup) -> Result<Resolved, CliError> {
    let (tilt, t) = match &s.tilt {
        Some(n) => (n.clone(), ws.tilting(n).ok_or_else(|| unknown("tilting module", n))?.clone()),
        None => {
            let (n, t) = only(ws.tiltings.iter().map(|(n, t)| (n, t)), "tilting module")?;
            (n, t.clone())
        }
    };
    let data_r = match &s.data_r {
        Some(n) => ws.data(n).ok_or_else(|| unknown("cotorsion data", n))?.clone(),
        None => {
            let r = t.r_algebra();
            let cands = ws.cotorsion.iter().filter(|(n, d)| *d.algebra == **r && !ws.is_derived(n)).map(|(n, d)| (n, d));
            only(cands, "cotorsion data over R")?.1.clone()
        }
    };
    if *data_r.algebra != **t.r_algebra() {
        return Err(CliError::Usage("the R-data lives over a different algebra than T".into()));
    }
    let data_s = match &s.data_s {
        Some(n) => ws.data(n).ok_or_else(|| unknown("cotorsion data", n))?.clone(),
        None => derive_s_data(&t, &data_r),
    };
    if *data_s.algebra != **t.s_algebra() {
        return Err(CliError::Usage("the S-data lives over a different algebra than End(T)".into()));
    }
    let pair = TiltPair::new(&t).map_err(|e| e.to_string());
    Ok(Resolved { tilt, pair, data_r, data_s })
}

fn complex_named<'a>(ws: &'a Workspace, name: &str) -> Result<&'a RepeComplex, CliError> {
    ws.complex(name).ok_or_else(|| unknown("complex", name))
}

fn dims_line(x: &RepeComplex) -> String {
    if x.is_zero() {
        return "0".into();
    }
    x.dims().iter().map(|(i, d)| format!("{i}:({})", d.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(","))).collect::<Vec<_>>().join(" ")
}

fn check_tilting(ws: &Workspace, name: &str, depth: usize) -> Result<CheckResult, CliError> {
    let cmd = "check-tilting";
    let t = match tilting_named(ws, name)? {
        Ok(t) => t,
        Err(e) => return Ok(CheckResult::error(cmd, name, depth, e)),
    };
    let w = match check_wakamatsu(&t, depth) {
        Ok(w) => w,
        Err(e) => return Ok(CheckResult::error(cmd, name, depth, e)),
    };
    let mut v = Verdict::new("Wakamatsu-tilting", false);
    v.push("conditions", w.certified(), w.verdict_line());
    let mut r = CheckResult::from_verdict(cmd, name, depth, &v);
    r.summary = format!(
        "{} summands, dim T = {}, Ext dims R-side {:?}, S-side {:?}",
        t.summands().len(),
        t.module().dim(),
        w.ext_r,
        w.ext_s
    );
    if !w.certified() {
        r.summary = format!("{}; {}", r.summary, w.verdict_line());
    }
    Ok(r)
}

fn end_algebra_report(ws: &Workspace, name: &str) -> Result<Vec<CheckResult>, CliError> {
    let cmd = "end-algebra";
    let t = match tilting_named(ws, name)? {
        Ok(t) => t,
        Err(e) => return Ok(vec![CheckResult::error(cmd, name, 0, e)]),
    };
    let s = t.s_algebra();
    let n = s.nverts();
    let cartan: Vec<String> =
        (0..n).map(|u| (0..n).map(|v| s.peirce(u, v).len().to_string()).collect::<Vec<_>>().join(" ")).collect();
    let info = CheckResult::info(
        cmd,
        name,
        format!("dim S = {}, {} vertices, Cartan rows [{}]", s.dim(), n, cartan.join("; ")),
        (0..n).map(|v| (format!("vertex {}", v + 1), format!("summand of dimension vector {:?}", t.summands()[v].dim_vector()))).collect(),
    );
    let mut v = Verdict::new("endomorphism conditions", false);
    match check_wakamatsu(&t, 1) {
        Ok(w) => {
            v.push("End_R(T) = S", w.end_s, "");
            v.push("End_S(T) = R", w.end_r, "");
        }
        Err(e) => return Ok(vec![info, CheckResult::error(cmd, name, 1, e)]),
    }
    Ok(vec![info, CheckResult::from_verdict(cmd, name, 1, &v)])
}

fn check_good_report(ws: &Workspace, name: &str, setup: &Setup, depth: usize) -> Result<CheckResult, CliError> {
    let setup = Setup { tilt: Some(name.to_string()), ..setup.clone() };
    let rs = resolve(ws, &setup)?;
    let t = ws.tilting(&rs.tilt).expect("resolved");
    Ok(match check_good(t, &rs.data_r, &rs.data_s, depth) {
        Ok(v) => CheckResult::from_verdict("check-good", name, depth, &v),
        Err(e) => CheckResult::error("check-good", name, depth, e),
    })
}

fn apply_st(ws: &Workspace, name: &str, setup: &Setup) -> Result<CheckResult, CliError> {
    let cmd = "apply-st";
    let x = complex_named(ws, name)?;
    let rs = resolve(ws, setup)?;
    let depth = rs.data_r.depth;
    let pair = match &rs.pair {
        Ok(p) => p,
        Err(e) => return Ok(CheckResult::error(cmd, name, depth, e)),
    };
    if **x.algebra() != **pair.rep_r.algebra() {
        return Err(CliError::Usage(format!("complex `{name}` does not live over R")));
    }
    let run = || -> Result<CheckResult, crate::repcat::RepcatError> {
        let s = s_functor(pair, x, &rs.data_r)?;
        let st = strip_projectives(&s.result)?;
        let mut v = Verdict::new("S_T", true);
        let maps: Vec<_> = (s.lmap.src().lo()..=s.lmap.src().hi()).map(|i| s.lmap.map(i)).collect();
        v.push("l(u) is a morphism", RepeHom::new(s.lmap.src(), s.lmap.tgt(), &maps).is_ok(), "");
        let mut r = CheckResult::from_verdict(cmd, name, depth, &v);
        r.summary = format!(
            "S_T({name}) dims {}; stable core dims {}; {} projective summands",
            dims_line(&s.result),
            dims_line(&st.core.trim()),
            st.summands.len()
        );
        Ok(r)
    };
    Ok(run().unwrap_or_else(|e| CheckResult::error(cmd, name, depth, e)))
}

fn apply_qdt(ws: &Workspace, name: &str, setup: &Setup) -> Result<CheckResult, CliError> {
    let cmd = "apply-qdt";
    let y = complex_named(ws, name)?;
    let rs = resolve(ws, setup)?;
    let depth = rs.data_s.depth;
    let pair = match &rs.pair {
        Ok(p) => p,
        Err(e) => return Ok(CheckResult::error(cmd, name, depth, e)),
    };
    if **y.algebra() != **pair.rep_s.algebra() {
        return Err(CliError::Usage(format!("complex `{name}` does not live over S")));
    }
    let run = || -> Result<CheckResult, crate::repcat::RepcatError> {
        let q = q_functor(pair, y, &rs.data_s)?;
        let st = strip_projectives(&q.result)?;
        let mut v = Verdict::new("Q_DT", true);
        let maps: Vec<_> = (q.rmap.src().lo()..=q.rmap.src().hi()).map(|i| q.rmap.map(i)).collect();
        v.push("r(v) is a morphism", RepeHom::new(q.rmap.src(), q.rmap.tgt(), &maps).is_ok(), "");
        let mut r = CheckResult::from_verdict(cmd, name, depth, &v);
        r.summary = format!(
            "Q_DT({name}) dims {}; stable core dims {}; {} projective summands",
            dims_line(&q.result),
            dims_line(&st.core.trim()),
            st.summands.len()
        );
        Ok(r)
    };
    Ok(run().unwrap_or_else(|e| CheckResult::error(cmd, name, depth, e)))
}

fn roundtrip(ws: &Workspace, name: &str, setup: &Setup, dual: bool) -> Result<CheckResult, CliError> {
    let cmd = "verify-roundtrip";
    let x = complex_named(ws, name)?;
    let rs = resolve(ws, setup)?;
    let depth = rs.data_r.depth.min(rs.data_s.depth);
    let pair = match &rs.pair {
        Ok(p) => p,
        Err(e) => return Ok(CheckResult::error(cmd, name, depth, e)),
    };
    let over_r = **x.algebra() == **pair.rep_r.algebra();
    let over_s = **x.algebra() == **pair.rep_s.algebra();
    let out = if over_r && !(dual && over_s) {
        verify_roundtrip_r(pair, x, &rs.data_r)
    } else if over_s {
        verify_roundtrip_s(pair, x, &rs.data_r, &rs.data_s)
    } else {
        return Err(CliError::Usage(format!("complex `{name}` lives over neither R nor S")));
    };
    Ok(match out {
        Ok(rep) => {
            let mut r = CheckResult::from_verdict(cmd, name, depth, &rep.verdict);
            let label = if over_r && !(dual && over_s) { "phi" } else { "compared" };
            let dims: Vec<String> = rep.dims.iter().map(|(i, a, b)| format!("{i}:{a}x{b}")).collect();
            r.summary = format!("{}; {label} dims {}", r.summary, dims.join(" "));
            r
        }
        Err(e) => CheckResult::error(cmd, name, depth, e),
    })
}

fn restriction(ws: &Workspace, setup: &Setup) -> Result<CheckResult, CliError> {
    let cmd = "restriction-check";
    let rs = resolve(ws, setup)?;
    let depth = rs.data_r.depth;
    Ok(match &rs.pair {
        Ok(pair) => match restriction_check(pair, &rs.data_r, &rs.data_r.a_gens) {
            Ok(v) => CheckResult::from_verdict(cmd, &rs.tilt, depth, &v),
            Err(e) => CheckResult::error(cmd, &rs.tilt, depth, e),
        },
        Err(e) => CheckResult::error(cmd, &rs.tilt, depth, e),
    })
}

fn describe_basis(ws: &Workspace, name: &str, degree: i32) -> Result<CheckResult, CliError> {
    let x = complex_named(ws, name)?;
    let c = x.component(degree);
    let alg = ws.algebra_name(x.algebra()).unwrap_or("?").to_string();
    let start = if degree >= x.lo() && degree <= x.hi() { x.range(degree).start } else { 0 };
    let items = (0..c.dim())
        .map(|k| (format!("basis {}", k + 1), format!("vertex {} of {alg}, window basis index {}", c.vert(k) + 1, start + k + 1)))
        .collect();
    Ok(CheckResult::info(
        "describe-basis",
        &format!("{name} {degree}"),
        format!("component of dimension {} with dimension vector {:?}", c.dim(), c.dim_vector()),
        items,
    ))
}

fn report_all(ws: &Workspace, depth: usize) -> Result<Vec<CheckResult>, CliError> {
    let mut out = Vec::new();
    for (name, t) in &ws.tiltings {
        out.push(check_tilting(ws, name, depth)?);
        let r = t.r_algebra();
        let data: Vec<&String> =
            ws.cotorsion.iter().filter(|(n, d)| *d.algebra == **r && !ws.is_derived(n)).map(|(n, _)| n).collect();
        for d in data {
            let data_s = ws.derived_for(name, d).map(|s| s.to_string());
            let setup = Setup { tilt: Some(name.clone()), data_r: Some(d.clone()), data_s };
            out.push(check_good_report(ws, name, &setup, depth)?);
            out.push(restriction(ws, &setup)?);
            for (xn, x) in &ws.complexes {
                if **x.algebra() == **r {
                    out.push(roundtrip(ws, xn, &setup, false)?);
                }
                if **x.algebra() == **t.s_algebra() && **t.s_algebra() != **r {
                    out.push(roundtrip(ws, xn, &setup, true)?);
                }
            }
        }
    }
    Ok(out)
}

/// Runs one command over a workspace.
pub fn run_command(ws: &Workspace, command: &Command) -> Result<Vec<CheckResult>, CliError> {
    Ok(match command {
        Command::CheckTilting { name, depth } => vec![check_tilting(ws, name, *depth)?],
        Command::EndAlgebra { name } => end_algebra_report(ws, name)?,
        Command::CheckGood { name, data_r, data_s, depth } => {
            let setup = Setup { tilt: None, data_r: data_r.clone(), data_s: data_s.clone() };
            vec![check_good_report(ws, name, &setup, *depth)?]
        }
        Command::ApplySt { complex, setup } => vec![apply_st(ws, complex, setup)?],
        Command::ApplyQdt { complex, setup } => vec![apply_qdt(ws, complex, setup)?],
        Command::VerifyRoundtrip { complex, setup, dual } => vec![roundtrip(ws, complex, setup, *dual)?],
        Command::RestrictionCheck { setup } => vec![restriction(ws, setup)?],
        Command::DescribeBasis { complex, degree } => vec![describe_basis(ws, complex, *degree)?],
        Command::Report { depth } => report_all(ws, *depth)?,
    })
}

/// Exit status for a list of results.
pub fn exit_status(results: &[CheckResult]) -> i32 {
    if results.iter().all(CheckResult::passed) {
        0
    } else {
        1
    }
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
}

/// Parses arguments, loads the workspace and runs the command.
pub fn main_with<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, status: 2 }
            } else {
                Outcome { stdout: text, stderr: String::new(), status: 0 }
            };
        }
    };
    let input_error = |e: CliError| Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), status: 2 };
    let ws = match parse_workspace(&cli.workspace) {
        Ok(ws) => ws,
        Err(e) => return input_error(e),
    };
    match run_command(&ws, &cli.command) {
        Ok(results) => Outcome { stdout: emit_report(&results, cli.format), stderr: String::new(), status: exit_status(&results) },
        Err(e) => input_error(e),
    }
}
