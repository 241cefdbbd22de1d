use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::check::{CheckResult, Status};
use super::config::{Config, Suite};
use super::suites::{tasks, RunContext};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub reported: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub config: Config,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    pub timings: Timings,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// `0` when no check failed, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(out, "# Verification report\n");
        let _ = writeln!(out, "{} passed, {} failed, {} reported ({:.0} ms)\n", s.pass, s.fail, s.reported, self.timings.total_ms);
        for suite in Suite::ALL {
            let rows: Vec<&CheckResult> = self.checks.iter().filter(|c| Suite::of_id(&c.id) == Some(suite)).collect();
            if rows.is_empty() {
                continue;
            }
            let _ = writeln!(out, "## {suite}\n");
            let _ = writeln!(out, "| id | status | residual | citation |");
            let _ = writeln!(out, "|---|---|---|---|");
            for c in rows {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "**fail**",
                    Status::Reported => "reported",
                };
                let residual = c.residual.to_string().replace('|', "\\|");
                let _ = writeln!(out, "| `{}` | {status} | `{residual}` | {} |", c.id, c.citation);
            }
            out.push('\n');
        }
        out
    }
}

fn summarize(checks: &[CheckResult]) -> Summary {
    checks.iter().fold(Summary::default(), |mut s, c| {
        match c.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Reported => s.reported += 1,
        }
        s
    })
}

/// Runs every check of the configured suites, in parallel, sorted by id.
pub fn run_suite(config: &Config) -> Report {
    let start = Instant::now();
    let ctx = RunContext::new(config.clone());
    let mut checks: Vec<CheckResult> = tasks(config).par_iter().flat_map_iter(|t| t.execute(&ctx)).collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    Report {
        version: REPORT_VERSION,
        config: config.clone(),
        summary: summarize(&checks),
        checks,
        timings: Timings { total_ms: start.elapsed().as_secs_f64() * 1e3 },
    }
}
