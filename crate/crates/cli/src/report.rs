//! The verification report and its text and JSON renderings.

use chrono::{SecondsFormat, Utc};
use clausen::verify::{CheckRecord, Status};
use serde::{Deserialize, Serialize};
use std::io::{self, Write};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub conjecture: usize,
    pub errored: usize,
}

impl Summary {
    pub fn tally(records: &[CheckRecord]) -> Self {
        let count = |s: Status| records.iter().filter(|r| r.status == s).count();
        Self {
            total: records.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            conjecture: count(Status::SupportsConjecture),
            errored: count(Status::Error),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub tool_version: String,
    /// RFC 3339, UTC.
    pub timestamp: String,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

/// 12 significant digits in a fixed-width field, or "-" when absent.
fn sig12(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.11e}"))
}

fn short(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.2e}"))
}

impl Report {
    pub fn new(records: Vec<CheckRecord>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
            summary: Summary::tally(&records),
            records,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One fixed-width row per record, then diagnostics and the summary.
    pub fn write_table(&self, out: &mut impl Write) -> io::Result<()> {
        writeln!(
            out,
            "{:<14} {:<19} {:>19} {:>19} {:>9} {:>9} {:>8}",
            "id", "status", "lhs", "rhs", "residual", "tol", "ms"
        )?;
        for r in &self.records {
            writeln!(
                out,
                "{:<14} {:<19} {:>19} {:>19} {:>9} {:>9} {:>8}",
                r.id,
                r.status.as_str(),
                sig12(r.lhs),
                sig12(r.rhs),
                short(r.residual),
                short(Some(r.tol)),
                r.elapsed_ms
            )?;
        }
        for r in self.records.iter().filter(|r| matches!(r.status, Status::Fail | Status::Error)) {
            writeln!(out, "{}: {}", r.id, r.diagnostic.as_deref().unwrap_or("no diagnostic"))?;
        }
        let s = &self.summary;
        writeln!(
            out,
            "total {}  passed {}  failed {}  conjecture {}  errored {}",
            s.total, s.passed, s.failed, s.conjecture, s.errored
        )
    }
}
