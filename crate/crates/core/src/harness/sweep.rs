//! Conjecture sweep over every admissible `(n, k)` up to a bound.

use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::cache::{witness_digest, ResultsCache};
use crate::bounds::bound_report;
use crate::conjecture_value;
use crate::cover::CoverCertificate;
use crate::error::{Error, Result};
use crate::graph::{GraphParams, PetersenGraph};
use crate::par::{self, Execution};
use crate::solver::{beta_exact_with, SolveMethod, SolverConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordStatus {
    Resolved,
    /// The solver ran out of budget; only bounds are known.
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub schema: u32,
    pub n: usize,
    pub k: usize,
    pub status: RecordStatus,
    pub beta: Option<usize>,
    pub method: Option<SolveMethod>,
    pub lower: usize,
    pub min_upper: usize,
    pub exact: Option<usize>,
    pub conjecture: usize,
    /// `beta <= n + ceil(n/5)`; for unresolved pairs, known only when the
    /// bounds settle it.
    pub conjecture_satisfied: Option<bool>,
    pub witness: Option<CoverCertificate>,
    pub witness_digest: Option<String>,
    pub nodes: u64,
    pub elapsed_ms: f64,
}

impl SweepRecord {
    /// Equality ignoring timings.
    pub fn same_outcome(&self, other: &SweepRecord) -> bool {
        let strip = |r: &SweepRecord| SweepRecord { elapsed_ms: 0.0, ..r.clone() };
        strip(self) == strip(other)
    }

    /// Consistency of the record with the bounds and formulas it carries.
    pub fn check_failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let Some(beta) = self.beta else {
            if self.lower > self.min_upper {
                out.push(format!("P({},{}): lower {} > upper {}", self.n, self.k, self.lower, self.min_upper));
            }
            return out;
        };
        let tag = format!("P({},{})", self.n, self.k);
        if beta < self.lower {
            out.push(format!("{tag}: beta {beta} below lower bound {}", self.lower));
        }
        if beta > self.min_upper {
            out.push(format!("{tag}: beta {beta} above upper bound {}", self.min_upper));
        }
        if let Some(exact) = self.exact {
            if exact != beta {
                out.push(format!("{tag}: exact formula gives {exact}, solver gives {beta}"));
            }
        }
        if self.conjecture_satisfied != Some(beta <= self.conjecture) {
            out.push(format!("{tag}: conjecture flag inconsistent with beta"));
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub max_n: usize,
    pub jobs: Option<usize>,
    pub node_budget: u64,
    pub cache: Option<PathBuf>,
    pub execution: Execution,
}

impl SweepOptions {
    pub fn new(max_n: usize) -> Self {
        Self {
            max_n,
            jobs: None,
            node_budget: SolverConfig::default().node_budget,
            cache: None,
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepSummary {
    pub max_n: usize,
    pub pairs: usize,
    pub from_cache: usize,
    pub computed: usize,
    pub violations: Vec<(usize, usize)>,
    pub unresolved: Vec<(usize, usize)>,
    pub check_failures: Vec<String>,
    pub records: Vec<SweepRecord>,
}

impl SweepSummary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.check_failures.is_empty()
    }
}

/// Solve one pair and assemble its record.
pub fn sweep_record(params: GraphParams, node_budget: u64) -> Result<SweepRecord> {
    let (n, k) = (params.n(), params.k());
    let report = bound_report(n, k)?;
    let g = PetersenGraph::from_params(params);
    let config = SolverConfig { node_budget, ..SolverConfig::default() };
    let conjecture = conjecture_value(n);
    let base = SweepRecord {
        schema: SCHEMA_VERSION,
        n,
        k,
        status: RecordStatus::Resolved,
        beta: None,
        method: None,
        lower: report.lower,
        min_upper: report.min_upper,
        exact: report.exact.as_ref().map(|e| e.value),
        conjecture,
        conjecture_satisfied: None,
        witness: None,
        witness_digest: None,
        nodes: 0,
        elapsed_ms: 0.0,
    };
    let started = Instant::now();
    match beta_exact_with(&g, &config) {
        Ok(result) => {
            let cert = result.witness.to_certificate();
            Ok(SweepRecord {
                beta: Some(result.beta),
                method: Some(result.method),
                conjecture_satisfied: Some(result.beta <= conjecture),
                witness_digest: Some(witness_digest(&cert)),
                witness: Some(cert),
                nodes: result.nodes,
                elapsed_ms: result.elapsed.as_secs_f64() * 1e3,
                ..base
            })
        }
        Err(Error::BudgetExhausted { lower, upper, budget, .. }) => {
            let lower = lower.max(base.lower);
            let upper = upper.min(base.min_upper);
            let satisfied = if upper <= conjecture {
                Some(true)
            } else if lower > conjecture {
                Some(false)
            } else {
                None
            };
            Ok(SweepRecord {
                status: RecordStatus::Unresolved,
                lower,
                min_upper: upper,
                conjecture_satisfied: satisfied,
                nodes: budget,
                elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
                ..base
            })
        }
        Err(e) => Err(e),
    }
}

/// Run the sweep for every admissible pair with `n <= max_n`, reusing and
/// extending the cache when one is configured.
pub fn sweep(options: &SweepOptions) -> Result<SweepSummary> {
    if options.max_n < 3 {
        return Err(Error::Precondition(format!("sweep needs max_n >= 3, got {}", options.max_n)));
    }
    let cache = match &options.cache {
        Some(path) => ResultsCache::open(path)?.0,
        None => ResultsCache::in_memory(),
    };
    let pairs = GraphParams::admissible_up_to(options.max_n);
    let outcomes: Vec<Result<(SweepRecord, bool)>> = par::with_workers(options.jobs, || {
        par::map(options.execution, pairs.clone(), |p| {
            if let Some(hit) = cache.get(p.n(), p.k()) {
                return Ok((hit.clone(), true));
            }
            let record = sweep_record(p, options.node_budget)?;
            cache.append(&record)?;
            Ok((record, false))
        })
    });

    let mut summary = SweepSummary {
        max_n: options.max_n,
        pairs: pairs.len(),
        from_cache: 0,
        computed: 0,
        violations: Vec::new(),
        unresolved: Vec::new(),
        check_failures: Vec::new(),
        records: Vec::with_capacity(pairs.len()),
    };
    for outcome in outcomes {
        let (record, cached) = outcome?;
        if cached {
            summary.from_cache += 1;
        } else {
            summary.computed += 1;
        }
        if record.status == RecordStatus::Unresolved {
            summary.unresolved.push((record.n, record.k));
        }
        if record.conjecture_satisfied == Some(false) {
            summary.violations.push((record.n, record.k));
        }
        summary.check_failures.extend(record.check_failures());
        summary.records.push(record);
    }
    Ok(summary)
}
