//! Structured verification reports.
//!
//! The structured rendering is a single JSON document with a fixed field
//! order and records pre-sorted on a deterministic key, so two runs of the
//! same suite specification produce byte-identical output. Wall-clock
//! timings are collected for the human-readable rendering only; they are
//! deliberately left out of the structured document to keep it reproducible.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One executed (or skipped) check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub family: String,
    pub binding: String,
    pub suite: String,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    pub status: CheckStatus,
    /// Exact residual rendering on failure, or the skip reason.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip)]
    pub wall: Duration,
}

impl CheckRecord {
    fn sort_key(&self) -> (String, String, String, String, i64) {
        (
            self.family.clone(),
            self.binding.clone(),
            self.suite.clone(),
            self.check.clone(),
            self.n.unwrap_or(-1),
        )
    }
}

/// Aggregate of a suite run.
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
}

#[derive(Serialize)]
struct StructuredDoc<'a> {
    total: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    runs: &'a [CheckRecord],
}

impl VerificationReport {
    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn extend(&mut self, records: Vec<CheckRecord>) {
        self.records.extend(records);
    }

    /// Deterministic final order, independent of execution interleaving.
    pub fn sort(&mut self) {
        self.records.sort_by_key(|r| r.sort_key());
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for r in &self.records {
            match r.status {
                CheckStatus::Pass => counts.0 += 1,
                CheckStatus::Fail => counts.1 += 1,
                CheckStatus::Skipped => counts.2 += 1,
            }
        }
        counts
    }

    pub fn all_passed(&self) -> bool {
        self.counts().1 == 0
    }

    /// Canonical JSON rendering (no timings).
    pub fn to_structured(&self) -> String {
        let (passed, failed, skipped) = self.counts();
        let doc = StructuredDoc {
            total: self.records.len(),
            passed,
            failed,
            skipped,
            runs: &self.records,
        };
        let mut out = serde_json::to_string_pretty(&doc).expect("report serialization");
        out.push('\n');
        out
    }

    /// Human-readable rendering with per-record lines and a timing summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let status = match r.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            let n_part = r.n.map(|n| format!(" n={n}")).unwrap_or_default();
            let detail = r
                .detail
                .as_deref()
                .map(|d| format!("  [{d}]"))
                .unwrap_or_default();
            let _ = writeln!(
                out,
                "{status}  {:6} {:12} {}{n_part}{detail}  ({})",
                r.family, r.suite, r.check, r.binding
            );
        }
        let (passed, failed, skipped) = self.counts();
        let total_wall: Duration = self.records.iter().map(|r| r.wall).sum();
        let _ = writeln!(
            out,
            "\n{} checks: {passed} passed, {failed} failed, {skipped} skipped ({:.2}s check time)",
            self.records.len(),
            total_wall.as_secs_f64()
        );
        out
    }
}
