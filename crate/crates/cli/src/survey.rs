//! Ratio of basis count to circuit-cocircuit reversal classes.
//!
//! Reports the observed minimum of `t(1,1) / N` over non-regular instances.
//! No lower bound is asserted beyond `ratio > 1`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use omrev::{catalog_instances, is_binary, reversal_classes, tutte_polynomial, Mode, OrientedMatroid, Restriction};

use crate::error::CliError;
use crate::input::load_instance;

/// Largest `k` accepted for the `U_{2,k}` family.
pub const MAX_U2K: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `U_{2,4}, ..., U_{2,max_n}`.
    U2k { max_n: usize },
    CatalogNonregular,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub instance: String,
    pub n: usize,
    pub regular: bool,
    pub t11: u64,
    pub n_both_all: u64,
    pub ratio: f64,
    /// Minimum ratio over the non-regular rows so far.
    pub running_min: Option<f64>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub rows: Vec<SurveyRow>,
    pub min_ratio: Option<f64>,
    pub min_instance: Option<String>,
}

fn instances(family: Family) -> Result<Vec<OrientedMatroid>, CliError> {
    match family {
        Family::U2k { max_n } => {
            if !(4..=MAX_U2K).contains(&max_n) {
                return Err(CliError::Input(format!("--max-n must lie in 4..={MAX_U2K}, got {max_n}")));
            }
            (4..=max_n)
                .map(|k| Ok(OrientedMatroid::uniform(2, k)?.with_name(format!("u2{k}"))))
                .collect()
        }
        Family::CatalogNonregular => catalog_instances()
            .into_iter()
            .filter(|e| !e.is_regular())
            .map(|e| Ok(e.build()?))
            .collect(),
    }
}

/// Surveys a family plus any extra instances (catalog names or files).
/// Fails with an assertion error if a non-regular instance has ratio `<= 1`.
pub fn survey(family: Family, include: &[String]) -> Result<SurveyReport, CliError> {
    let mut ms = instances(family)?;
    for spec in include {
        ms.push(load_instance(spec)?);
    }

    let mut rows = Vec::with_capacity(ms.len());
    let mut min: Option<(f64, String)> = None;
    for m in &ms {
        let t11 = tutte_polynomial(m).standard_evaluations()[0];
        let n_both = reversal_classes(m, Mode::Both, Restriction::All)?.class_count() as u64;
        let ratio = t11 as f64 / n_both as f64;
        let regular = is_binary(m).regular;
        let note = if regular {
            "regular, excluded from minimum".to_string()
        } else {
            if t11 <= n_both {
                return Err(CliError::Assertion(format!(
                    "{}: non-regular but t(1,1) = {t11} <= {n_both} classes",
                    m.name()
                )));
            }
            if min.as_ref().is_none_or(|(r, _)| ratio < *r) {
                min = Some((ratio, m.name().to_string()));
            }
            String::new()
        };
        rows.push(SurveyRow {
            instance: m.name().to_string(),
            n: m.n(),
            regular,
            t11,
            n_both_all: n_both,
            ratio,
            running_min: min.as_ref().map(|(r, _)| *r),
            note,
        });
    }
    let (min_ratio, min_instance) = min.unzip();
    Ok(SurveyReport { rows, min_ratio, min_instance })
}

impl SurveyReport {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).map_err(|e| CliError::Input(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<12} {:>3} {:>8} {:>10} {:>9} {:>11}  note",
            "instance", "n", "t(1,1)", "N(both)", "ratio", "running min"
        );
        for r in &self.rows {
            let running = r.running_min.map_or("-".to_string(), |v| format!("{v:.4}"));
            let _ = writeln!(
                out,
                "{:<12} {:>3} {:>8} {:>10} {:>9.4} {:>11}  {}",
                r.instance, r.n, r.t11, r.n_both_all, r.ratio, running, r.note
            );
        }
        match (&self.min_ratio, &self.min_instance) {
            (Some(v), Some(name)) => {
                let _ = writeln!(out, "\nminimum observed ratio {v:.4} ({name})");
            }
            _ => {
                let _ = writeln!(out, "\nno non-regular instances surveyed");
            }
        }
        out
    }
}
