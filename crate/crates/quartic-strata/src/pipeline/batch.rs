// SPDX-License-Identifier: MIT OR Apache-2.0
//! Parallel batch classification with reports streamed in input order.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::BufRead;

use rayon::prelude::*;
use serde::Serialize;

use super::records::CurveRecord;
use super::report::{classify_record, ClassificationReport};
use crate::classify::SingularityCandidates;
use crate::strata::StrataCatalog;
use crate::{Error, Result};

/// The built-in demo corpus: 30 quartics with bad primes above 7.
pub const DEMO_CORPUS: &str = include_str!("../../data/demo_corpus.txt");

/// Records per parallel chunk.
pub const DEFAULT_CHUNK: usize = 64;

#[derive(Clone, Debug)]
pub struct BatchOptions {
    /// Worker threads; 0 uses every available core.
    pub jobs: usize,
    /// Record the elapsed time of each classification.
    pub timings: bool,
    pub chunk: usize,
}

impl Default for BatchOptions {
    fn default() -> Self {
        BatchOptions { jobs: 0, timings: false, chunk: DEFAULT_CHUNK }
    }
}

/// One streamed outcome.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum BatchItem {
    Report(ClassificationReport),
    Error { line: usize, id: Option<String>, error: String },
}

impl BatchItem {
    pub fn to_text(&self) -> String {
        match self {
            BatchItem::Report(r) => r.to_text(),
            BatchItem::Error { line, id, error } => match id {
                Some(id) => format!("{id}: line {line}: {error}"),
                None => format!("line {line}: {error}"),
            },
        }
    }
}

/// Counts over a whole batch.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub records: usize,
    pub classified: usize,
    pub failed: usize,
    /// Classified (curve, prime) pairs.
    pub pairs: usize,
    pub without_supported_bad_primes: usize,
    pub with_unfactored_cofactor: usize,
    /// Pairs per stratum reached by the classification.
    pub strata: BTreeMap<String, usize>,
    /// Pairs per candidate set of stable reduction types.
    pub reduction_types: BTreeMap<String, usize>,
}

impl BatchSummary {
    fn absorb(&mut self, item: &BatchItem) {
        self.records += 1;
        let BatchItem::Report(r) = item else {
            self.failed += 1;
            return;
        };
        self.classified += 1;
        self.pairs += r.entries.len();
        if r.entries.is_empty() {
            self.without_supported_bad_primes += 1;
        }
        if r.bad_primes.factorization.remainder.is_some() {
            self.with_unfactored_cofactor += 1;
        }
        for e in &r.entries {
            let key = match &e.report.singularities {
                SingularityCandidates::Singular { stratum, .. } => stratum.name().to_string(),
                other => other.to_string(),
            };
            *self.strata.entry(key).or_default() += 1;
            *self.reduction_types.entry(e.report.types.to_string()).or_default() += 1;
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "records {} classified {} failed {} pairs {} without supported bad primes {} with unfactored cofactor {}",
            self.records,
            self.classified,
            self.failed,
            self.pairs,
            self.without_supported_bad_primes,
            self.with_unfactored_cofactor
        );
        let mut by_count = |title: &str, m: &BTreeMap<String, usize>| {
            let mut rows: Vec<(&String, &usize)> = m.iter().collect();
            rows.sort_by(|a, b| b.1.cmp(a.1).then(a.0.cmp(b.0)));
            let _ = write!(out, "\n{title}:");
            for (k, n) in rows {
                let _ = write!(out, "\n  {n:>6}  {k}");
            }
        };
        by_count("strata", &self.strata);
        by_count("reduction types", &self.reduction_types);
        out
    }
}

fn process(line_no: usize, line: &str, strata: &StrataCatalog, timings: bool) -> Option<BatchItem> {
    let rec = match CurveRecord::parse_line(line) {
        Ok(None) => return None,
        Ok(Some(rec)) => rec,
        Err(e) => return Some(BatchItem::Error { line: line_no, id: None, error: e.to_string() }),
    };
    Some(match classify_record(&rec, strata, timings) {
        Ok(r) => BatchItem::Report(r),
        Err(e) => BatchItem::Error { line: line_no, id: Some(rec.id), error: e.to_string() },
    })
}

/// Classifies every record of `input`, calling `sink` once per record in
/// input order. Malformed or singular records become error items.
pub fn run_batch<R: BufRead>(
    input: R,
    strata: &StrataCatalog,
    opts: &BatchOptions,
    mut sink: impl FnMut(&BatchItem),
) -> Result<BatchSummary> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let chunk = opts.chunk.max(1);
    let mut summary = BatchSummary::default();
    let mut lines = input.lines().enumerate();
    loop {
        let mut batch = Vec::with_capacity(chunk);
        for (i, line) in lines.by_ref().take(chunk) {
            let line = line.map_err(|e| Error::Input(format!("reading line {}: {e}", i + 1)))?;
            batch.push((i + 1, line));
        }
        if batch.is_empty() {
            return Ok(summary);
        }
        let items: Vec<Option<BatchItem>> =
            pool.install(|| batch.par_iter().map(|(n, l)| process(*n, l, strata, opts.timings)).collect());
        for item in items.into_iter().flatten() {
            summary.absorb(&item);
            sink(&item);
        }
    }
}

/// [`run_batch`] over an in-memory string.
pub fn run_batch_str(
    input: &str,
    strata: &StrataCatalog,
    opts: &BatchOptions,
    sink: impl FnMut(&BatchItem),
) -> Result<BatchSummary> {
    run_batch(input.as_bytes(), strata, opts, sink)
}
