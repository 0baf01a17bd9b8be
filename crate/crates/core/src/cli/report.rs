//! Check results and their text and machine renderings.

use crate::wtilt::Verdict;

/// Outcome class of one result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Informational output that carries no verdict.
    Info,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

/// The result of one command on one subject.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub command: String,
    pub subject: String,
    pub status: Status,
    /// Depth to which the verdict is certified.
    pub depth: usize,
    /// True when the verdict quantifies over listed generators only.
    pub relative: bool,
    pub summary: String,
    /// `(name, detail)` of failed items, or informational lines.
    pub items: Vec<(String, String)>,
}

impl CheckResult {
    /// A result built from an itemized verdict.
    pub fn from_verdict(command: &str, subject: &str, depth: usize, v: &Verdict) -> CheckResult {
        let status = if v.passed() { Status::Pass } else { Status::Fail };
        let failed = v.failures().count();
        let summary = match status {
            Status::Pass => format!("{}: {} checks passed", v.title, v.items.len()),
            _ => format!("{}: {failed} of {} checks failed", v.title, v.items.len()),
        };
        CheckResult {
            command: command.into(),
            subject: subject.into(),
            status,
            depth,
            relative: v.relative,
            summary,
            items: v.failures().map(|i| (i.name.clone(), i.detail.clone())).collect(),
        }
    }

    /// A failure caused by an error raised during the computation.
    pub fn error(command: &str, subject: &str, depth: usize, e: impl std::fmt::Display) -> CheckResult {
        CheckResult {
            command: command.into(),
            subject: subject.into(),
            status: Status::Fail,
            depth,
            relative: false,
            summary: format!("error: {e}"),
            items: Vec::new(),
        }
    }

    /// Informational lines without a verdict.
    pub fn info(command: &str, subject: &str, summary: String, items: Vec<(String, String)>) -> CheckResult {
        CheckResult { command: command.into(), subject: subject.into(), status: Status::Info, depth: 0, relative: false, summary, items }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    fn certification(&self) -> String {
        let scope = if self.relative { ", relative to the listed generators" } else { "" };
        match self.status {
            Status::Pass => format!("certified to depth {}{scope}", self.depth),
            Status::Fail => format!("not certified to depth {}{scope}", self.depth),
            Status::Info => String::new(),
        }
    }
}

/// Report rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

/// Failures first, then the remaining results in their original order.
fn ordered(results: &[CheckResult]) -> Vec<&CheckResult> {
    let mut out: Vec<&CheckResult> = results.iter().filter(|r| r.status == Status::Fail).collect();
    out.extend(results.iter().filter(|r| r.status != Status::Fail));
    out
}

/// Quotes a machine value when it contains spaces, quotes, `=` or backslashes.
fn quote(s: &str) -> String {
    if !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || c == '"' || c == '\\' || c == '=') {
        return s.to_string();
    }
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Renders results. Both formats start with a header line; a passing or informational
/// result takes one line and a failure adds one line per failed item.
pub fn emit_report(results: &[CheckResult], format: Format) -> String {
    let failed = results.iter().filter(|r| r.status == Status::Fail).count();
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&format!("repequiv report: {} results, {failed} failed\n", results.len()));
            for r in ordered(results) {
                let cert = r.certification();
                let cert = if cert.is_empty() { String::new() } else { format!(" [{cert}]") };
                out.push_str(&format!("{} {} {}: {}{cert}\n", r.status.label(), r.command, r.subject, r.summary));
                for (name, detail) in &r.items {
                    if detail.is_empty() {
                        out.push_str(&format!("    {name}\n"));
                    } else {
                        out.push_str(&format!("    {name}: {detail}\n"));
                    }
                }
            }
        }
        Format::Machine => {
            out.push_str(&format!("report=repequiv results={} failed={failed}\n", results.len()));
            for r in ordered(results) {
                out.push_str(&format!(
                    "status={} command={} subject={} depth={} relative={} certification={} summary={}\n",
                    r.status.label(),
                    quote(&r.command),
                    quote(&r.subject),
                    r.depth,
                    r.relative,
                    quote(&r.certification()),
                    quote(&r.summary)
                ));
                for (name, detail) in &r.items {
                    out.push_str(&format!(
                        "item status={} command={} subject={} name={} detail={}\n",
                        r.status.label(),
                        quote(&r.command),
                        quote(&r.subject),
                        quote(name),
                        quote(detail)
                    ));
                }
            }
        }
    }
    out
}
