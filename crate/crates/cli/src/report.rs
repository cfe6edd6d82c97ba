use std::collections::BTreeMap;
use std::fs;
use std::io::Write;

use repcur_core::CheckReport;
use serde::{Deserialize, Serialize};

use crate::args::RunConfig;
use crate::{run, CliError, EXIT_FAIL, EXIT_PASS};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub config: BTreeMap<String, String>,
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn new(cfg: &RunConfig, checks: Vec<CheckReport>) -> Self {
        Report {
            version: REPORT_VERSION,
            config: cfg.record(),
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// One line per check; for large runs, a tally per check name plus every
    /// failing line.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let verbose = self.checks.len() <= 40;
        let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = tally.entry(&c.check_name).or_default();
            e.0 += 1;
            if c.passed() {
                e.1 += 1;
            }
            if verbose || !c.passed() {
                out.push_str(&line(c));
                out.push('\n');
            }
        }
        if !verbose {
            for (name, (total, passed)) in &tally {
                out.push_str(&format!("{name}: {passed}/{total} passed\n"));
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }
}

fn line(c: &CheckReport) -> String {
    let params: Vec<String> = c.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!(
        "{} {} [{}] expected={} actual={}",
        if c.passed() { "PASS" } else { "FAIL" },
        c.check_name,
        params.join(" "),
        c.expected,
        c.actual
    )
}

/// Runs the request, prints the summary, writes the JSON report if asked,
/// and returns the exit code.
pub fn run_and_report(cfg: &RunConfig) -> Result<u8, CliError> {
    let checks = run::run(cfg)?;
    let report = Report::new(cfg, checks);
    let json = report.to_json();
    match &cfg.output {
        Some(p) if p.as_os_str() == "-" => {
            std::io::stdout()
                .write_all(json.as_bytes())
                .map_err(|source| CliError::Io {
                    path: "stdout".into(),
                    source,
                })?;
        }
        Some(p) => {
            fs::write(p, &json).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
            print!("{}", report.summary());
        }
        None => print!("{}", report.summary()),
    }
    Ok(if report.all_passed() { EXIT_PASS } else { EXIT_FAIL })
}
