//! Machine-readable run reports: one JSON object or CSV table per
//! verification suite, with exact rationals serialized as strings.
//!
//! The JSON schema is versioned and flat: {version, suite, family, params,
//! grid, passed, failed, skipped, witnesses, wall_time_ms}. The CSV form
//! has one row per verified degree tuple, so its row count equals the
//! tuple count of the run. Rationals always cross this boundary as exact
//! "p/q" strings, never as floats.

use crate::contiguous::{SuiteWitness, TupleRecord, TupleStatus};
use crate::exactcore::Rat;
use crate::families::FamilySpec;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Current JSON schema version.
pub const SCHEMA_VERSION: u32 = 1;

/// Serialized failure witness: which tuple, which index pair, which
/// evaluator, and the offending residual or error text.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessReport {
    /// Degree tuple that failed.
    pub degrees: Vec<u32>,
    /// 1-based index pair of the failing relation, when one is known.
    pub pair: Option<(usize, usize)>,
    /// Nonzero residual as "p/q", or the evaluator's error text.
    pub residual: String,
    /// Evaluator that produced the failure.
    pub evaluator: String,
}

impl From<&SuiteWitness> for WitnessReport {
    fn from(w: &SuiteWitness) -> Self {
        WitnessReport {
            degrees: w.degrees.clone(),
            pair: Some((w.j, w.k)),
            residual: w.detail.clone(),
            evaluator: w.evaluator_id.clone(),
        }
    }
}

/// The degree grid a suite ran over.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GridSpec {
    /// Factors per product (tuple length).
    pub factors: usize,
    /// Smallest degree per factor.
    pub min_degree: u32,
    /// Largest degree per factor.
    pub max_degree: u32,
    /// Number of tuples enumerated.
    pub tuples: usize,
}

/// One suite's aggregate result, the unit of JSON output.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SuiteReport {
    /// Schema version of this report.
    pub version: u32,
    /// Suite name: "contiguous", "oracle", "quad", or "genfun".
    pub suite: String,
    /// Family the suite ran on.
    pub family: String,
    /// Family parameters and scales, as exact "p/q" strings.
    pub params: BTreeMap<String, String>,
    /// The degree grid.
    pub grid: GridSpec,
    /// Tuples whose checks all passed.
    pub passed: usize,
    /// Tuples with a failing check.
    pub failed: usize,
    /// Tuples skipped due to evaluator poles or domain errors.
    pub skipped: usize,
    /// One record per failed tuple.
    pub witnesses: Vec<WitnessReport>,
    /// Wall-clock duration of the suite in milliseconds.
    pub wall_time_ms: u64,
}

impl SuiteReport {
    /// Renders the report as pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Serializes a rational exactly, as "p/q" (or "p" when q = 1).
pub fn rat_str(value: &Rat) -> String {
    value.to_string()
}

/// The family parameters (and any scales) of a run as a name → "p/q" map.
pub fn family_params(family: &FamilySpec) -> BTreeMap<String, String> {
    family
        .params()
        .into_iter()
        .map(|(name, value)| (name.to_string(), rat_str(&value)))
        .collect()
}

/// One CSV row per degree tuple: degrees, status, and failure detail.
pub fn records_to_csv(suite: &str, family: &str, records: &[TupleRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["suite", "family", "degrees", "status", "detail"])
        .expect("csv header");
    for record in records {
        let degrees = record
            .degrees
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let (status, detail) = match &record.status {
            TupleStatus::Pass => ("pass", String::new()),
            TupleStatus::Fail(w) => ("fail", format!("pair ({},{}): {}", w.j, w.k, w.detail)),
            TupleStatus::Skip => ("skip", String::new()),
        };
        writer
            .write_record([suite, family, &degrees, status, &detail])
            .expect("csv row");
    }
    String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
}
