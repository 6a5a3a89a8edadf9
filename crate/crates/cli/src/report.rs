//! Audit reports and their text and machine renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    SkippedBound,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
            Status::SkippedBound => "skipped-bound",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub atoms: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseResult {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A hypothesis a clause depended on, and whether it held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub clause: String,
    pub holds: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub law: String,
    pub status: Status,
    pub summary: String,
    pub clauses: Vec<ClauseResult>,
    pub hypotheses: Vec<Hypothesis>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub skipped_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub check: String,
    pub micros: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    /// Wall-clock time per check, in the order of `checks`.
    pub timings: Vec<Timing>,
}

/// The part of a report that depends only on the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stable {
    pub summary: Summary,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MachineReport {
    pub schema_version: u32,
    pub stable: Stable,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::NotApplicable => s.not_applicable += 1,
                Status::SkippedBound => s.skipped_bound += 1,
            }
        }
        s
    }

    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn any_skipped(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::SkippedBound)
    }

    pub fn to_machine(&self, with_timings: bool) -> MachineReport {
        MachineReport {
            schema_version: SCHEMA_VERSION,
            stable: Stable {
                summary: self.summary(),
                checks: self.checks.clone(),
            },
            timings: with_timings.then(|| self.timings.clone()),
        }
    }

    pub fn emit(&self, format: Format, with_timings: bool) -> String {
        match format {
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(&self.to_machine(with_timings))
                    .expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => self.text(with_timings),
        }
    }

    fn text(&self, with_timings: bool) -> String {
        let mut out = String::new();
        let width = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(0);
        for (k, c) in self.checks.iter().enumerate() {
            let _ = write!(
                out,
                "{:<14} {:<width$}  [{}] {}",
                c.status.as_str(),
                c.name,
                c.law,
                c.summary
            );
            if with_timings {
                if let Some(t) = self.timings.get(k) {
                    let _ = write!(out, " ({} µs)", t.micros);
                }
            }
            out.push('\n');
            if matches!(c.status, Status::Fail | Status::SkippedBound) {
                for cl in c.clauses.iter().filter(|cl| cl.status != Status::Pass) {
                    let _ = write!(out, "    {}: {}", cl.id, cl.status.as_str());
                    if let Some(w) = &cl.witness {
                        let _ = write!(out, " at ({}): {}", w.atoms.join(", "), w.detail);
                    }
                    if let Some(n) = &cl.note {
                        let _ = write!(out, " ({n})");
                    }
                    out.push('\n');
                }
            }
        }
        let s = self.summary();
        let _ = writeln!(
            out,
            "{} checks: {} pass, {} fail, {} not-applicable, {} skipped-bound",
            self.checks.len(),
            s.pass,
            s.fail,
            s.not_applicable,
            s.skipped_bound
        );
        out
    }
}

/// Reads a machine report back.
pub fn parse_machine(text: &str) -> Result<MachineReport, serde_json::Error> {
    serde_json::from_str(text)
}
