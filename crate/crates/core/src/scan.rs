//! Streaming aggregation over planar-code graph streams.
//!
//! One decoder feeds fixed-size batches of records to a rayon pool; workers
//! compute per-graph reports; a single reducer folds them back in file
//! order. The reduction is associative and position-stable, so the report
//! is byte-identical for any worker count and any batch size.
//!
//! Mixed-order files are keyed by order into separate reports rather than
//! rejected. Records that fail to decode or analyze are counted and skipped
//! with their ordinal and byte offset; a truncated tail ends the stream.

use std::collections::BTreeMap;
use std::io::{self, Read};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codec::{CodecError, PlanarCodeReader, Record};
use crate::metrics::{report_with, DistanceEngine, GraphReport};

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("failed to build worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("all {} record(s) in the stream are malformed", .malformed.len())]
    AllRecordsMalformed { malformed: Vec<MalformedRecord> },
}

/// A skipped record: where it sat in the stream and why it was unusable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MalformedRecord {
    pub ordinal: u64,
    pub offset: u64,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    /// Worker threads; 0 means available parallelism.
    pub workers: usize,
    /// Records per parallel batch. Bounds memory together with record size.
    pub chunk_size: usize,
    /// Retain every arg-max graph (up to `retention_limit`) instead of only
    /// the first encountered.
    pub keep_all_argmax: bool,
    /// Cap on retained arg-max records per report and maximum kind.
    pub retention_limit: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { workers: 0, chunk_size: 256, keep_all_argmax: false, retention_limit: 16 }
    }
}

impl ScanOptions {
    fn retain_cap(&self) -> usize {
        if self.keep_all_argmax {
            self.retention_limit.max(1)
        } else {
            1
        }
    }
}

/// A retained arg-max graph: its exact source bytes plus its full report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArgMaxRecord {
    pub ordinal: u64,
    pub offset: u64,
    /// Planar-code record bytes exactly as read.
    pub code: Vec<u8>,
    pub report: GraphReport,
}

/// Aggregate over all scanned graphs of one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionReport {
    pub order: u32,
    /// Wiener complexity -> number of graphs.
    pub histogram: BTreeMap<u32, u64>,
    pub total: u64,
    /// Maximal Wiener complexity observed.
    pub max_complexity: u32,
    /// Number of graphs attaining `max_complexity`.
    pub max_complexity_count: u64,
    /// Wiener index multiset over the graphs attaining `max_complexity`.
    pub max_complexity_wieners: BTreeMap<u64, u64>,
    /// Maximal Wiener index observed.
    pub max_wiener: u64,
    /// Complexity of the first graph attaining `max_wiener`.
    pub max_wiener_complexity: u32,
    /// Diameter of the first graph attaining `max_wiener`.
    pub max_wiener_diameter: u32,
    /// Retained graphs attaining `max_wiener`, ascending ordinal.
    pub max_wiener_records: Vec<ArgMaxRecord>,
    /// Retained graphs attaining `max_complexity`, ascending ordinal.
    pub max_complexity_records: Vec<ArgMaxRecord>,
    /// Pentagon-part count -> graphs, over all scanned graphs.
    pub pentagon_part_hist: BTreeMap<u32, u64>,
    /// Isolated-pentagon count -> graphs, over all scanned graphs.
    pub isolated_pentagon_hist: BTreeMap<u32, u64>,
    /// As above, restricted to graphs attaining `max_complexity`.
    pub pentagon_part_hist_at_max: BTreeMap<u32, u64>,
    pub isolated_pentagon_hist_at_max: BTreeMap<u32, u64>,
}

fn bump<K: Ord>(map: &mut BTreeMap<K, u64>, key: K, by: u64) {
    *map.entry(key).or_insert(0) += by;
}

fn merge_counts<K: Ord + Copy>(into: &mut BTreeMap<K, u64>, from: &BTreeMap<K, u64>) {
    for (&k, &v) in from {
        bump(into, k, v);
    }
}

fn merge_records(into: &mut Vec<ArgMaxRecord>, from: Vec<ArgMaxRecord>, cap: usize) {
    into.extend(from);
    into.sort_by_key(|r| r.ordinal);
    into.dedup_by_key(|r| r.ordinal);
    into.truncate(cap);
}

impl DistributionReport {
    fn new(order: u32) -> Self {
        DistributionReport {
            order,
            histogram: BTreeMap::new(),
            total: 0,
            max_complexity: 0,
            max_complexity_count: 0,
            max_complexity_wieners: BTreeMap::new(),
            max_wiener: 0,
            max_wiener_complexity: 0,
            max_wiener_diameter: 0,
            max_wiener_records: Vec::new(),
            max_complexity_records: Vec::new(),
            pentagon_part_hist: BTreeMap::new(),
            isolated_pentagon_hist: BTreeMap::new(),
            pentagon_part_hist_at_max: BTreeMap::new(),
            isolated_pentagon_hist_at_max: BTreeMap::new(),
        }
    }

    /// Gap between order and maximal complexity.
    pub fn gap(&self) -> u32 {
        self.order - self.max_complexity
    }

    /// True when some scanned graph has pairwise distinct transmissions.
    pub fn has_transmission_irregular(&self) -> bool {
        self.total > 0 && self.max_complexity == self.order
    }

    fn observe(
        &mut self,
        report: GraphReport,
        bytes: Vec<u8>,
        ordinal: u64,
        offset: u64,
        options: &ScanOptions,
    ) {
        debug_assert_eq!(report.order, self.order);
        let cap = options.retain_cap();
        self.total += 1;
        bump(&mut self.histogram, report.complexity, 1);
        bump(&mut self.pentagon_part_hist, report.pentagons.parts, 1);
        bump(&mut self.isolated_pentagon_hist, report.pentagons.isolated, 1);

        let record = || ArgMaxRecord {
            ordinal,
            offset,
            code: bytes.clone(),
            report: report.clone(),
        };

        if report.complexity > self.max_complexity {
            self.max_complexity = report.complexity;
            self.max_complexity_count = 1;
            self.max_complexity_wieners = BTreeMap::from([(report.wiener, 1)]);
            self.pentagon_part_hist_at_max = BTreeMap::from([(report.pentagons.parts, 1)]);
            self.isolated_pentagon_hist_at_max =
                BTreeMap::from([(report.pentagons.isolated, 1)]);
            self.max_complexity_records = vec![record()];
        } else if report.complexity == self.max_complexity {
            self.max_complexity_count += 1;
            bump(&mut self.max_complexity_wieners, report.wiener, 1);
            bump(&mut self.pentagon_part_hist_at_max, report.pentagons.parts, 1);
            bump(&mut self.isolated_pentagon_hist_at_max, report.pentagons.isolated, 1);
            if options.keep_all_argmax && self.max_complexity_records.len() < cap {
                self.max_complexity_records.push(record());
            }
        }

        if report.wiener > self.max_wiener {
            self.max_wiener = report.wiener;
            self.max_wiener_complexity = report.complexity;
            self.max_wiener_diameter = report.diameter;
            self.max_wiener_records = vec![record()];
        } else if report.wiener == self.max_wiener
            && options.keep_all_argmax
            && self.max_wiener_records.len() < cap
        {
            self.max_wiener_records.push(record());
        }
    }

    /// Merges a partial report into this one. Associative and commutative;
    /// first-in-file-order tie handling is reproduced via record ordinals.
    pub fn merge(&mut self, other: DistributionReport, options: &ScanOptions) {
        assert_eq!(self.order, other.order, "reports must share an order");
        let cap = options.retain_cap();
        self.total += other.total;
        merge_counts(&mut self.histogram, &other.histogram);
        merge_counts(&mut self.pentagon_part_hist, &other.pentagon_part_hist);
        merge_counts(&mut self.isolated_pentagon_hist, &other.isolated_pentagon_hist);

        match other.max_complexity.cmp(&self.max_complexity) {
            std::cmp::Ordering::Greater => {
                self.max_complexity = other.max_complexity;
                self.max_complexity_count = other.max_complexity_count;
                self.max_complexity_wieners = other.max_complexity_wieners;
                self.pentagon_part_hist_at_max = other.pentagon_part_hist_at_max;
                self.isolated_pentagon_hist_at_max = other.isolated_pentagon_hist_at_max;
                self.max_complexity_records = other.max_complexity_records;
            }
            std::cmp::Ordering::Equal => {
                self.max_complexity_count += other.max_complexity_count;
                merge_counts(&mut self.max_complexity_wieners, &other.max_complexity_wieners);
                merge_counts(&mut self.pentagon_part_hist_at_max, &other.pentagon_part_hist_at_max);
                merge_counts(
                    &mut self.isolated_pentagon_hist_at_max,
                    &other.isolated_pentagon_hist_at_max,
                );
                merge_records(&mut self.max_complexity_records, other.max_complexity_records, cap);
            }
            std::cmp::Ordering::Less => {}
        }

        match other.max_wiener.cmp(&self.max_wiener) {
            std::cmp::Ordering::Greater => {
                self.max_wiener = other.max_wiener;
                self.max_wiener_complexity = other.max_wiener_complexity;
                self.max_wiener_diameter = other.max_wiener_diameter;
                self.max_wiener_records = other.max_wiener_records;
            }
            std::cmp::Ordering::Equal => {
                merge_records(&mut self.max_wiener_records, other.max_wiener_records, cap);
                // the retained first record decides the reported C_W and D
                let first = &self.max_wiener_records[0].report;
                self.max_wiener_complexity = first.complexity;
                self.max_wiener_diameter = first.diameter;
            }
            std::cmp::Ordering::Less => {}
        }
    }
}

/// Result of scanning one stream: per-order reports plus decode accounting.
/// `decoded + malformed.len() == records_seen` always holds.
#[derive(Debug, Serialize, Deserialize)]
pub struct ScanOutcome {
    pub reports: BTreeMap<u32, DistributionReport>,
    pub records_seen: u64,
    pub decoded: u64,
    pub malformed: Vec<MalformedRecord>,
}

impl ScanOutcome {
    /// The single report when the stream held exactly one order.
    pub fn single(&self) -> Option<&DistributionReport> {
        if self.reports.len() == 1 {
            self.reports.values().next()
        } else {
            None
        }
    }

    /// True when any scanned graph is transmission irregular (C_W = n).
    pub fn has_transmission_irregular(&self) -> bool {
        self.reports.values().any(DistributionReport::has_transmission_irregular)
    }
}

/// True when the report shows a graph with all transmissions distinct.
pub fn transmission_irregular_check(report: &DistributionReport) -> bool {
    report.has_transmission_irregular()
}

fn codec_error_site(e: &CodecError) -> (u64, u64) {
    match e {
        CodecError::BadHeader { offset } => (0, *offset),
        CodecError::TruncatedRecord { ordinal, offset }
        | CodecError::NonCubicRecord { ordinal, offset, .. }
        | CodecError::IdOutOfRange { ordinal, offset, .. }
        | CodecError::Graph { ordinal, offset, .. } => (*ordinal, *offset),
        CodecError::Io { .. } | CodecError::OrderTooLargeForNarrow { .. } => (0, 0),
    }
}

type Analyzed = (u64, u64, Vec<u8>, Result<GraphReport, String>);

fn analyze(engine: &mut DistanceEngine, record: Record) -> Analyzed {
    let Record { ordinal, offset, bytes, graph, .. } = record;
    let outcome = match graph {
        Err(e) => Err(e.to_string()),
        Ok(g) => report_with(engine, &g).map_err(|e| e.to_string()),
    };
    (ordinal, offset, bytes, outcome)
}

/// Scans a planar-code stream and aggregates per-order distribution reports.
///
/// Every decodable graph contributes exactly once. Identical output for any
/// worker count and chunk size.
pub fn scan<R: Read>(source: R, options: &ScanOptions) -> Result<ScanOutcome, ScanError> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(options.workers).build()?;
    let chunk_size = options.chunk_size.max(1);
    let mut reader = PlanarCodeReader::new(source);
    let mut outcome = ScanOutcome {
        reports: BTreeMap::new(),
        records_seen: 0,
        decoded: 0,
        malformed: Vec::new(),
    };

    let mut done = false;
    while !done {
        let mut chunk: Vec<Record> = Vec::with_capacity(chunk_size);
        while chunk.len() < chunk_size {
            match reader.next_record() {
                Ok(Some(record)) => chunk.push(record),
                Ok(None) => {
                    done = true;
                    break;
                }
                Err(CodecError::Io(e)) => return Err(ScanError::Io(e)),
                Err(e) => {
                    // data corruption: log the site and stop at the boundary
                    let (ordinal, offset) = codec_error_site(&e);
                    outcome.records_seen += 1;
                    outcome.malformed.push(MalformedRecord {
                        ordinal,
                        offset,
                        message: e.to_string(),
                    });
                    done = true;
                    break;
                }
            }
        }
        if chunk.is_empty() {
            continue;
        }
        let analyzed: Vec<Analyzed> = pool.install(|| {
            chunk
                .into_par_iter()
                .map_init(DistanceEngine::new, analyze)
                .collect()
        });
        for (ordinal, offset, bytes, result) in analyzed {
            outcome.records_seen += 1;
            match result {
                Ok(report) => {
                    outcome.decoded += 1;
                    outcome
                        .reports
                        .entry(report.order)
                        .or_insert_with(|| DistributionReport::new(report.order))
                        .observe(report, bytes, ordinal, offset, options);
                }
                Err(message) => {
                    outcome.malformed.push(MalformedRecord { ordinal, offset, message });
                }
            }
        }
    }

    if outcome.decoded == 0 && outcome.records_seen > 0 {
        return Err(ScanError::AllRecordsMalformed { malformed: outcome.malformed });
    }
    Ok(outcome)
}

/// Histograms of pentagon parts and isolated pentagons over a stream,
/// optionally restricted to the graphs attaining the maximal complexity of
/// their order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentagonHistograms {
    pub parts: BTreeMap<u32, u64>,
    pub isolated: BTreeMap<u32, u64>,
}

pub fn pentagon_histograms<R: Read>(
    source: R,
    only_max_complexity: bool,
    options: &ScanOptions,
) -> Result<PentagonHistograms, ScanError> {
    let outcome = scan(source, options)?;
    Ok(pentagon_histograms_of(&outcome, only_max_complexity))
}

/// The pentagon histograms of an existing scan outcome, merged over orders.
pub fn pentagon_histograms_of(outcome: &ScanOutcome, only_max_complexity: bool) -> PentagonHistograms {
    let mut histograms =
        PentagonHistograms { parts: BTreeMap::new(), isolated: BTreeMap::new() };
    for report in outcome.reports.values() {
        let (parts, isolated) = if only_max_complexity {
            (&report.pentagon_part_hist_at_max, &report.isolated_pentagon_hist_at_max)
        } else {
            (&report.pentagon_part_hist, &report.isolated_pentagon_hist)
        };
        merge_counts(&mut histograms.parts, parts);
        merge_counts(&mut histograms.isolated, isolated);
    }
    histograms
}
