use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use coring::{Check, Error, Report, Result};

use crate::Global;

#[derive(Debug, Serialize)]
pub struct Artifact {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub summary: Vec<String>,
    pub elapsed_ms: u128,
    pub artifacts: Vec<Artifact>,
}

/// What a command produced before the report is assembled.
#[derive(Default)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub summary: Vec<String>,
    pub artifacts: Vec<Artifact>,
}

impl Outcome {
    pub fn add_report(&mut self, r: Report) {
        self.checks.extend(r.checks);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    /// Writes `value` as pretty JSON to `--out`, if given, and records its hash.
    pub fn export<T: Serialize>(&mut self, g: &Global, value: &T) -> Result<()> {
        if let Some(path) = &g.out {
            let text = coring::io::to_json(value) + "\n";
            write_file(path, &text)?;
            self.artifacts.push(Artifact {
                path: path.display().to_string(),
                sha256: hex::encode(Sha256::digest(text.as_bytes())),
            });
        }
        Ok(())
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))
}

fn width() -> usize {
    std::env::var("COLUMNS")
        .ok()
        .and_then(|c| c.trim().parse::<usize>().ok())
        .filter(|&w| w >= 20)
        .unwrap_or(100)
}

fn wrap(text: &str, indent: &str, w: usize) -> String {
    let opts = textwrap::Options::new(w).initial_indent(indent).subsequent_indent("        ");
    textwrap::fill(text, opts)
}

fn describe(c: &Check) -> String {
    let mut s = c.name.clone();
    if let Some(w) = &c.witness {
        let show = |v: &[coring::Scalar]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        s.push_str(&format!(
            "; witness {:?} ({}): lhs [{}] rhs [{}]",
            w.indices,
            w.location,
            show(&w.lhs),
            show(&w.rhs)
        ));
    }
    if let Some(n) = &c.note {
        s.push_str(&format!("; {n}"));
    }
    s
}

fn render(r: &RunReport) -> String {
    let w = width();
    let mut out = vec![wrap(&r.command.join(" "), "", w)];
    for line in &r.summary {
        out.push(wrap(line, "  ", w));
    }
    for c in &r.checks {
        let tag = match (c.passed, c.is_informational()) {
            (true, _) => "  ok    ",
            (false, true) => "  info  ",
            (false, false) => "  FAIL  ",
        };
        out.push(wrap(&describe(c), tag, w));
    }
    for a in &r.artifacts {
        out.push(wrap(&format!("wrote {} (sha256 {})", a.path, a.sha256), "  ", w));
    }
    out.push(format!("{} ({} checks, {} ms)", if r.passed { "PASS" } else { "FAIL" }, r.checks.len(), r.elapsed_ms));
    out.join("\n")
}

/// Prints the report and maps the result to the exit code contract:
/// 0 success, 1 verification failure, 2 input error.
pub fn finish(argv: Vec<String>, g: &Global, started: Instant, result: Result<Outcome>) -> ExitCode {
    let elapsed_ms = started.elapsed().as_millis();
    let mut command = argv;
    if let Some(first) = command.first_mut() {
        *first = "coring".into();
    }
    let outcome = match result {
        Ok(o) => o,
        Err(Error::Verification(report)) => {
            let mut o = Outcome::default();
            o.line(report.summary());
            o.add_report(*report);
            o
        }
        Err(e) if e.is_verification() => {
            let mut o = Outcome::default();
            o.checks.push(Check::fail("verification", None, Some(e.to_string())));
            o
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let passed = outcome.checks.iter().all(|c| c.passed || c.is_informational());
    let report = RunReport {
        command,
        passed,
        checks: outcome.checks,
        summary: outcome.summary,
        elapsed_ms,
        artifacts: outcome.artifacts,
    };
    if g.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        println!("{}", render(&report));
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
