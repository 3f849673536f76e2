//! Exhaustive and sampled verification campaigns over small finite fields.
//!
//! A campaign walks a deterministic case list (codimension, subspace index,
//! direction rank), evaluates each case on a worker pool and merges the
//! results in case order, so reports do not depend on the worker count.

mod cases;
mod report;
mod spec;

pub use cases::CaseId;
pub use report::{Counts, FailureRecord, Verdict, VerificationReport};
pub use spec::{CampaignSpec, Mode, Theorem};

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use cases::CaseTable;
use report::CaseOutcome;

const CHUNK: usize = 1024;

/// Execution settings that do not affect the result.
#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    /// Stop before the next chunk once this passes.
    pub deadline: Option<Instant>,
    pub cancel: Option<Arc<AtomicBool>>,
    /// Keep one outcome letter per case in the report.
    pub record_outcomes: bool,
}

impl RunOptions {
    pub fn workers(workers: usize) -> Self {
        RunOptions { workers, ..Default::default() }
    }

    fn stopped(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d) || self.cancel.as_ref().is_some_and(|c| c.load(Ordering::Relaxed))
    }
}

/// Run a campaign. Fails with `Hypothesis` for parameters outside the
/// theorem, and with `Budget` if a case has more members than
/// `element_budget`.
pub fn run_campaign(spec: &CampaignSpec, options: &RunOptions) -> Result<VerificationReport> {
    spec.validate()?;
    let start = Instant::now();
    let table = CaseTable::new(spec)?;
    let order: Vec<u64> = match spec.mode {
        Mode::Exhaustive => (0..table.total()).collect(),
        Mode::Sample { count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            (0..count).map(|_| rng.gen_range(0..table.total())).collect()
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| Error::Hypothesis(format!("cannot start worker pool: {e}")))?;

    let mut hasher = Sha256::new();
    let mut counts = Counts::default();
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    let mut tags = String::new();
    let mut complete = true;
    for chunk in order.chunks(CHUNK) {
        if options.stopped() {
            complete = false;
            break;
        }
        let results: Vec<Result<(CaseId, CaseOutcome)>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&i| {
                    let id = table.id(i);
                    table.evaluate(&id).map(|o| (id, o))
                })
                .collect()
        });
        for r in results {
            let (id, outcome) = r?;
            hasher.update(format!("{} {} {} {} {}\n", id.index, id.codim, id.subspace, id.rank, outcome.tag()));
            counts.total += 1;
            if options.record_outcomes {
                tags.push(outcome.tag());
            }
            match outcome {
                CaseOutcome::Passed => counts.passed += 1,
                CaseOutcome::Filtered => counts.filtered += 1,
                CaseOutcome::Failed(f) if f.in_hypothesis => {
                    counts.failed += 1;
                    failures.push(*f);
                }
                CaseOutcome::Failed(f) => {
                    counts.findings += 1;
                    findings.push(*f);
                }
            }
        }
    }
    let verdict = VerificationReport::verdict_for(complete, &failures, &findings);
    Ok(VerificationReport {
        spec: spec.clone(),
        cases_planned: order.len() as u64,
        counts,
        failures,
        findings,
        case_order_hash: format!("{:x}", hasher.finalize()),
        elapsed_ms: start.elapsed().as_millis() as u64,
        complete,
        verdict,
        note: None,
        outcomes: options.record_outcomes.then_some(tags),
    })
}

/// Run exhaustively within `limit`; if that does not finish, run `samples`
/// sampled cases with `seed` instead and say so in the report's note.
pub fn run_with_fallback(
    spec: &CampaignSpec,
    options: &RunOptions,
    limit: Duration,
    samples: u64,
    seed: u64,
) -> Result<VerificationReport> {
    let mut exhaustive = spec.clone();
    exhaustive.mode = Mode::Exhaustive;
    let timed = RunOptions { deadline: Some(Instant::now() + limit), ..options.clone() };
    let first = run_campaign(&exhaustive, &timed)?;
    if first.complete {
        return Ok(first);
    }
    let sampled = exhaustive.sample(samples, seed);
    let mut report = run_campaign(&sampled, options)?;
    report.note = Some(format!(
        "exhaustive run stopped after {} of {} cases ({} s limit); reporting {samples} sampled cases with seed {seed}",
        first.counts.total,
        first.cases_planned,
        limit.as_secs()
    ));
    Ok(report)
}

fn run_as(theorem: Theorem, spec: &CampaignSpec, options: &RunOptions) -> Result<VerificationReport> {
    if spec.theorem != theorem {
        return Err(Error::Hypothesis(format!("spec is for {}, not {theorem}", spec.theorem)));
    }
    run_campaign(spec, options)
}

/// Linear subspaces of dimension above `n r` contain a matrix of rank above `r`.
pub fn run_flanders(spec: &CampaignSpec, options: &RunOptions) -> Result<VerificationReport> {
    run_as(Theorem::Flanders, spec, options)
}

/// Linear subspaces of codimension at most `n - 2` contain a witness.
pub fn run_main(spec: &CampaignSpec, options: &RunOptions) -> Result<VerificationReport> {
    run_as(Theorem::Main, spec, options)
}

/// Square affine spaces with `rank N = n - 1` meeting the kernel-into-image
/// condition contain a witness.
pub fn run_pencil(spec: &CampaignSpec, options: &RunOptions) -> Result<VerificationReport> {
    run_as(Theorem::Pencil, spec, options)
}

/// Square affine spaces with singular `N` meeting the non-injectivity
/// condition contain a witness.
pub fn run_square(spec: &CampaignSpec, options: &RunOptions) -> Result<VerificationReport> {
    run_as(Theorem::Square, spec, options)
}

/// The constant-determinant strengthening: strong mode over `q >= 3`,
/// exploratory mode over GF(2) with `n > 3`.
pub fn run_remark2(spec: &CampaignSpec, options: &RunOptions) -> Result<VerificationReport> {
    match spec.theorem {
        Theorem::Remark2Strong | Theorem::Remark2Conjecture => run_campaign(spec, options),
        other => Err(Error::Hypothesis(format!("spec is for {other}, not a constant-determinant mode"))),
    }
}
