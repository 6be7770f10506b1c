//! Run reports: the JSON interchange format and the line-per-check text
//! rendering.
//!
//! JSON reports contain no timing data and serialize fields in declaration
//! order, so they are byte-identical across runs with the same inputs and
//! seed. Elapsed times appear only in text mode.

use prerigid_core::report::{Report, Status};
use serde::Serialize;
use std::time::Duration;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
pub struct CheckJson {
    pub anchor: String,
    pub claim: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub test_set: String,
}

#[derive(Serialize)]
pub struct RunReport {
    pub schema_version: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub seed: u64,
    pub status: &'static str,
    pub checks: Vec<CheckJson>,
}

/// One named, timed section of a run.
pub struct Section {
    pub report: Report,
    pub elapsed: Duration,
}

pub struct RunOutcome {
    pub command: String,
    pub seed: u64,
    pub sections: Vec<Section>,
}

impl RunOutcome {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        RunOutcome {
            command: command.into(),
            seed,
            sections: Vec::new(),
        }
    }

    pub fn push(&mut self, report: Report, elapsed: Duration) {
        self.sections.push(Section { report, elapsed });
    }

    /// Run a closure as a timed section.
    pub fn section(&mut self, body: impl FnOnce() -> Report) {
        let start = std::time::Instant::now();
        let report = body();
        self.push(report, start.elapsed());
    }

    pub fn all_passed(&self) -> bool {
        self.sections.iter().all(|s| s.report.all_passed())
    }

    pub fn to_json(&self) -> RunReport {
        let mut checks = Vec::new();
        for s in &self.sections {
            for c in &s.report.checks {
                checks.push(CheckJson {
                    anchor: c.anchor.clone(),
                    claim: c.claim.clone(),
                    status: match c.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                    },
                    witness: c.witness.clone(),
                    test_set: c.test_set.clone(),
                });
            }
        }
        RunReport {
            schema_version: "1",
            tool_version: TOOL_VERSION,
            command: self.command.clone(),
            seed: self.seed,
            status: if self.all_passed() { "pass" } else { "fail" },
            checks,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            for c in &s.report.checks {
                let status = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                };
                out.push_str(&format!("{status} {} ({:.2?})", c.anchor, s.elapsed));
                if let Some(w) = &c.witness {
                    out.push_str(&format!(" — {w}"));
                }
                out.push('\n');
            }
        }
        let overall = if self.all_passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{overall} {} — {} checks, seed {}\n",
            self.command,
            self.sections
                .iter()
                .map(|s| s.report.checks.len())
                .sum::<usize>(),
            self.seed
        ));
        out
    }
}
