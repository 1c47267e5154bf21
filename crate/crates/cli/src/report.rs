//! Per-instance analysis report.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use omrev::reversal::first_minimal_pair;
use omrev::{
    activity_records, is_binary, minimal_counts, reversal_classes, tutte_polynomial, ActivityRecord, GroundOrder, Mode,
    OrientedMatroid, PartitionExport, RegularityVerdict, Restriction, TuttePolynomial, COUNT_SETTINGS,
};

use crate::error::CliError;

/// Verbose exports are limited to ground sets of this size.
pub const VERBOSE_LIMIT: usize = 12;

/// Evaluation points, in report order.
pub const POINTS: [(i64, i64); 5] = [(1, 1), (1, 2), (2, 1), (1, 0), (0, 1)];

const ROW_LABELS: [&str; 5] = [
    "circuit-cocircuit reversal classes",
    "cocircuit reversal classes",
    "circuit reversal classes",
    "acyclic cocircuit reversal classes",
    "totally cyclic circuit reversal classes",
];

/// One row comparing a Tutte evaluation (left) with a class count (right).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityRow {
    /// Statement number, 2 through 6.
    pub item: u8,
    pub label: String,
    pub point: (i64, i64),
    pub lhs: u64,
    pub rhs: u64,
    pub equal: bool,
    pub lhs_greater: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub mode: Mode,
    pub restriction: Restriction,
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub name: String,
    pub n: usize,
    pub rank: usize,
    pub order: Vec<usize>,
    pub tutte: TuttePolynomial,
    pub tutte_text: String,
    pub evaluations: [u64; 5],
    pub reversal_counts: [u64; 5],
    pub minimal_counts: [u64; 5],
    pub regularity: RegularityVerdict,
    pub equality: Vec<EqualityRow>,
    /// Two minimal reorientations sharing a class, if any.
    pub witness: Option<WitnessPair>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partitions: Option<Vec<PartitionExport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub activity: Option<Vec<ActivityRecord>>,
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub order: Option<GroundOrder>,
    /// Include partitions (with members) and per-reorientation activity records.
    pub verbose: bool,
    pub timing: bool,
}

/// Settings searched for a witness pair, in order.
const WITNESS_SETTINGS: [(Mode, Restriction); 2] = [(Mode::Cocircuit, Restriction::Acyclic), (Mode::Both, Restriction::All)];

pub fn analyze(m: &OrientedMatroid, options: &AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    let start = Instant::now();
    let order = options.order.clone().unwrap_or_else(|| GroundOrder::identity(m.n()));
    if order.len() != m.n() {
        return Err(CliError::Input(format!("order has {} elements, the instance has {}", order.len(), m.n())));
    }

    let tutte = tutte_polynomial(m);
    let evaluations = tutte.standard_evaluations();
    let partitions = COUNT_SETTINGS
        .iter()
        .map(|&(mode, restriction)| reversal_classes(m, mode, restriction))
        .collect::<Result<Vec<_>, _>>()?;
    let reversal_counts: [u64; 5] = std::array::from_fn(|i| partitions[i].class_count() as u64);
    let minimal = minimal_counts(m, &order);

    let equality = (0..5)
        .map(|i| EqualityRow {
            item: i as u8 + 2,
            label: ROW_LABELS[i].to_string(),
            point: POINTS[i],
            lhs: evaluations[i],
            rhs: reversal_counts[i],
            equal: evaluations[i] == reversal_counts[i],
            lhs_greater: evaluations[i] > reversal_counts[i],
        })
        .collect();

    let mut witness = None;
    for (mode, restriction) in WITNESS_SETTINGS {
        let idx = COUNT_SETTINGS.iter().position(|&s| s == (mode, restriction)).expect("witness setting is counted");
        if let Some((a, b)) = first_minimal_pair(m, &partitions[idx], &order) {
            witness = Some(WitnessPair { mode, restriction, a: a.0, b: b.0 });
            break;
        }
    }

    let verbose = options.verbose && m.n() <= VERBOSE_LIMIT;
    Ok(AnalysisReport {
        name: m.name().to_string(),
        n: m.n(),
        rank: m.rank(),
        order: order.as_slice().to_vec(),
        tutte_text: tutte.to_string(),
        tutte,
        evaluations,
        reversal_counts,
        minimal_counts: minimal,
        regularity: is_binary(m),
        equality,
        witness,
        elapsed_us: options.timing.then(|| start.elapsed().as_micros() as u64),
        partitions: verbose.then(|| partitions.iter().map(|p| p.export(true)).collect()),
        activity: verbose.then(|| activity_records(m, &order)),
    })
}

fn set_text(bits: u32) -> String {
    let items: Vec<String> = omrev::signed::elements(bits).map(|e| e.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

impl AnalysisReport {
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "instance   {}", self.name);
        let _ = writeln!(out, "n, rank    {}, {}", self.n, self.rank);
        let _ = writeln!(out, "tutte      {}", self.tutte_text);
        let verdict = if self.regularity.regular { "regular" } else { "non-regular" };
        match &self.regularity.witness {
            Some(w) => {
                let _ = writeln!(out, "matroid    {verdict} (circuit {:?} meets cocircuit {:?} oddly)", w.circuit, w.cocircuit);
            }
            None => {
                let _ = writeln!(out, "matroid    {verdict}");
            }
        }
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{:<4} {:<40} {:>7} {:>10} {:>10} {:>9}  relation",
            "item", "count", "t(x,y)", "classes", "minimal", "point"
        );
        for (i, row) in self.equality.iter().enumerate() {
            let relation = if row.equal { "=" } else if row.lhs_greater { ">" } else { "<" };
            let _ = writeln!(
                out,
                "{:<4} {:<40} {:>7} {:>10} {:>10} {:>9}  {}",
                format!("({})", row.item),
                row.label,
                row.lhs,
                row.rhs,
                self.minimal_counts[i],
                format!("({},{})", row.point.0, row.point.1),
                relation
            );
        }
        let _ = writeln!(out);
        match &self.witness {
            Some(w) => {
                let _ = writeln!(
                    out,
                    "witness    {} and {} are minimal in one class (mode {}, restriction {})",
                    set_text(w.a),
                    set_text(w.b),
                    w.mode,
                    w.restriction
                );
            }
            None => {
                let _ = writeln!(out, "witness    none");
            }
        }
        if let Some(us) = self.elapsed_us {
            let _ = writeln!(out, "elapsed    {us} us");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use omrev::catalog;

    fn report(name: &str) -> AnalysisReport {
        let m = catalog::find(name).unwrap().build().unwrap();
        analyze(&m, &AnalyzeOptions::default()).unwrap()
    }

    #[test]
    fn triangle_rows_all_equal() {
        let r = report("tri");
        assert!(r.regularity.regular);
        assert!(r.equality.iter().all(|row| row.equal && !row.lhs_greater));
        assert_eq!(r.reversal_counts, [3, 4, 7, 2, 1]);
        assert_eq!(r.witness, None);
    }

    #[test]
    fn u24_rows_all_strict_with_witness() {
        let r = report("u24");
        assert!(!r.regularity.regular);
        assert!(r.equality.iter().all(|row| row.lhs_greater));
        let w = r.witness.unwrap();
        assert_eq!((w.mode, w.restriction), (Mode::Cocircuit, Restriction::Acyclic));
        assert!(w.a < w.b);
    }

    #[test]
    fn loop_acyclic_row_is_zero_zero() {
        let r = report("loop1");
        assert_eq!((r.equality[3].lhs, r.equality[3].rhs), (0, 0));
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let m = catalog::find("u25").unwrap().build().unwrap();
        let opts = AnalyzeOptions { verbose: true, ..Default::default() };
        let r = analyze(&m, &opts).unwrap();
        assert!(r.partitions.is_some() && r.activity.is_some());
        let text = serde_json::to_string_pretty(&r).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        let again = serde_json::to_string_pretty(&analyze(&m, &opts).unwrap()).unwrap();
        assert_eq!(text, again);
        assert_eq!(r.to_table(), analyze(&m, &opts).unwrap().to_table());
    }

    #[test]
    fn wrong_order_length_is_input_error() {
        let m = catalog::find("tri").unwrap().build().unwrap();
        let opts = AnalyzeOptions { order: Some(GroundOrder::identity(2)), ..Default::default() };
        assert!(matches!(analyze(&m, &opts), Err(CliError::Input(_))));
    }
}
