use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::spec::CampaignSpec;
use crate::error::{Error, Result};

/// A case in which the statement's conclusion was not found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub case_index: u64,
    pub codim: usize,
    pub rank: usize,
    /// False for cases beyond the covered codimension and for exploratory
    /// theorems; such records are findings, not refutations.
    pub in_hypothesis: bool,
    /// The subspace in the text exchange format.
    pub subspace: String,
    /// The direction `N` in the text exchange format.
    pub direction: String,
    pub diagnostics: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum CaseOutcome {
    Passed,
    Filtered,
    Failed(Box<FailureRecord>),
}

impl CaseOutcome {
    pub(crate) fn tag(&self) -> char {
        match self {
            CaseOutcome::Passed => 'P',
            CaseOutcome::Filtered => 'X',
            CaseOutcome::Failed(_) => 'F',
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    /// Cases processed: `passed + filtered + failed + findings`.
    pub total: u64,
    pub passed: u64,
    /// Cases whose side condition (or dimension bound) does not hold.
    pub filtered: u64,
    pub failed: u64,
    /// Negative cases outside the hypotheses or in exploratory mode.
    pub findings: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every processed case passed or was filtered.
    Verified,
    /// Some case inside the hypotheses failed.
    Falsified,
    /// No failures, but some out-of-hypothesis or exploratory case was negative.
    Findings,
    /// Stopped early with no in-hypothesis failure so far.
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: CampaignSpec,
    /// Size of the full case list (the sample count in sample mode).
    pub cases_planned: u64,
    pub counts: Counts,
    pub failures: Vec<FailureRecord>,
    pub findings: Vec<FailureRecord>,
    /// SHA-256 over the processed case descriptors and outcomes, in order.
    pub case_order_hash: String,
    pub elapsed_ms: u64,
    pub complete: bool,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// One letter per processed case when requested: `P` passed,
    /// `X` filtered, `F` failed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outcomes: Option<String>,
}

impl VerificationReport {
    pub(crate) fn verdict_for(complete: bool, failures: &[FailureRecord], findings: &[FailureRecord]) -> Verdict {
        if !failures.is_empty() {
            Verdict::Falsified
        } else if !complete {
            Verdict::Incomplete
        } else if findings.is_empty() {
            Verdict::Verified
        } else {
            Verdict::Findings
        }
    }

    pub fn is_consistent(&self) -> bool {
        let c = &self.counts;
        c.total == c.passed + c.filtered + c.failed + c.findings
            && c.failed == self.failures.len() as u64
            && c.findings == self.findings.len() as u64
            && self.failures.iter().all(|f| f.in_hypothesis)
            && self.findings.iter().all(|f| !f.in_hypothesis)
            && c.total <= self.cases_planned
            && (self.verdict == Verdict::Verified) == (self.complete && c.failed + c.findings == 0)
    }

    /// The report with `elapsed_ms` zeroed, for run-to-run comparison.
    pub fn without_timing(&self) -> Self {
        VerificationReport { elapsed_ms: 0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse(e.line(), e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let s = &self.spec;
        let c = &self.counts;
        let mut out = String::new();
        let _ = writeln!(out, "theorem   {}", s.theorem);
        let _ = writeln!(out, "field     gf {}", s.q);
        let _ = writeln!(out, "size      {}x{}", s.n, s.p);
        let _ = writeln!(out, "codim     {}..={}", s.codim_min, s.codim_max);
        let _ = writeln!(out, "rank      {}..={}", s.rank_min, s.rank_max);
        let _ = writeln!(out, "planned   {}", self.cases_planned);
        let _ = writeln!(out, "total     {}", c.total);
        let _ = writeln!(out, "passed    {}", c.passed);
        let _ = writeln!(out, "filtered  {}", c.filtered);
        let _ = writeln!(out, "failed    {}", c.failed);
        let _ = writeln!(out, "findings  {}", c.findings);
        let _ = writeln!(out, "complete  {}", self.complete);
        let _ = writeln!(out, "hash      {}", self.case_order_hash);
        let _ = writeln!(out, "elapsed   {} ms", self.elapsed_ms);
        let _ = writeln!(out, "verdict   {}", serde_json::to_value(self.verdict).unwrap().as_str().unwrap());
        if let Some(note) = &self.note {
            let _ = writeln!(out, "note      {note}");
        }
        for f in self.failures.iter().chain(&self.findings) {
            let kind = if f.in_hypothesis { "failure" } else { "finding" };
            let _ = writeln!(out, "\n# {kind}: case {} codim {} rank {}: {}", f.case_index, f.codim, f.rank, f.diagnostics);
            out.push_str(&f.subspace);
            out.push_str(&f.direction);
        }
        out
    }
}
