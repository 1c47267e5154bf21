//! Catalog-wide identity and inequality checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use omrev::catalog::{CatalogEntry, Tag};
use omrev::om::EXHAUSTIVE_CHECK_LIMIT;
use omrev::{
    greedy_minimalize, is_binary, is_minimal, minimal_counts, reversal_classes, reversal_counts, tutte_polynomial,
    GroundOrder, Mode, OrientedMatroid, Reorientation, Restriction,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    #[default]
    All,
    Regular,
    Nonregular,
}

impl Scope {
    fn includes(self, entry: &CatalogEntry) -> bool {
        match self {
            Scope::All => true,
            Scope::Regular => entry.has_tag(Tag::Regular),
            Scope::Nonregular => entry.has_tag(Tag::NonRegular),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::All => "all",
            Scope::Regular => "regular",
            Scope::Nonregular => "nonregular",
        })
    }
}

impl FromStr for Scope {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "all" => Ok(Scope::All),
            "regular" => Ok(Scope::Regular),
            "nonregular" | "non-regular" => Ok(Scope::Nonregular),
            _ => Err(CliError::Input(format!("unknown scope `{s}` (expected all, regular or nonregular)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub instance: String,
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyOutcome {
    pub scope: Scope,
    pub instances: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let mut out = format!(
            "verify {}: {} instances, {} checks, {} failed\n",
            self.scope,
            self.instances,
            self.checks.len(),
            failed
        );
        if let Some(f) = self.first_failure() {
            out.push_str(&format!("FAIL {} [{}]: {}\n", f.instance, f.check, f.detail));
        }
        out
    }
}

struct Recorder<'a> {
    instance: &'a str,
    checks: Vec<CheckResult>,
}

impl Recorder<'_> {
    fn check(&mut self, check: &'static str, passed: bool, detail: impl FnOnce() -> String) {
        let detail = if passed { String::new() } else { detail() };
        self.checks.push(CheckResult { instance: self.instance.to_string(), check, passed, detail });
    }
}

/// Runs every check on the entries in scope. Build failures are input errors;
/// everything else is recorded in the outcome.
pub fn verify_entries(entries: &[CatalogEntry], scope: Scope) -> Result<VerifyOutcome, CliError> {
    let mut checks = Vec::new();
    let mut instances = 0;
    for entry in entries.iter().filter(|e| scope.includes(e)) {
        let m = entry.build().map_err(|e| CliError::Input(format!("{}: {e}", entry.name)))?;
        instances += 1;
        checks.extend(verify_one(entry, &m)?);
    }
    Ok(VerifyOutcome { scope, instances, checks })
}

fn verify_one(entry: &CatalogEntry, m: &OrientedMatroid) -> Result<Vec<CheckResult>, CliError> {
    let mut r = Recorder { instance: &entry.name, checks: Vec::new() };

    let report = m.validate();
    r.check("axioms", report.passed(), || report.failures.join("; "));

    let evals = tutte_polynomial(m).standard_evaluations();
    let counts = reversal_counts(m)?;
    let order = GroundOrder::identity(m.n());
    let minimal = minimal_counts(m, &order);
    r.check("minimal-counts-equal-evaluations", minimal == evals, || {
        format!("minimal {minimal:?} vs evaluations {evals:?}")
    });

    r.check("counts-at-most-evaluations", (0..5).all(|i| counts[i] <= evals[i]), || {
        format!("counts {counts:?} exceed evaluations {evals:?}")
    });

    let regular = is_binary(m).regular;
    if regular {
        r.check("regular-counts-equal-evaluations", counts == evals, || {
            format!("counts {counts:?} vs evaluations {evals:?}")
        });
    } else {
        let applicable: Vec<usize> = (0..5)
            .filter(|&i| !(i == 3 && m.loops() != 0) && !(i == 4 && m.coloops() != 0))
            .collect();
        let bad: Vec<usize> = applicable.iter().copied().filter(|&i| counts[i] >= evals[i]).collect();
        r.check("nonregular-rows-strict", bad.is_empty(), || {
            format!("rows {bad:?} not strict: counts {counts:?} vs evaluations {evals:?}")
        });
    }

    let mut derived = Tag::derive(m);
    derived.sort();
    let mut declared = entry.tags.clone();
    declared.sort();
    r.check("tags", declared == derived, || format!("declared {declared:?}, derived {derived:?}"));

    if let Some(expected) = &entry.expected {
        r.check("expected-evaluations", expected.evaluations.value == evals, || {
            format!("recorded {:?}, computed {evals:?}", expected.evaluations.value)
        });
        r.check("expected-class-counts", expected.class_counts.value == counts, || {
            format!("recorded {:?}, computed {counts:?}", expected.class_counts.value)
        });
        r.check("expected-regularity", expected.regular.value == regular, || {
            format!("recorded {}, computed {regular}", expected.regular.value)
        });
        if let Some(acyclic) = expected.acyclic_cocircuit_classes {
            r.check("expected-acyclic-cocircuit-classes", acyclic.value == counts[3], || {
                format!("recorded {}, computed {}", acyclic.value, counts[3])
            });
        }
    }

    if m.n() <= EXHAUSTIVE_CHECK_LIMIT {
        let both = reversal_classes(m, Mode::Both, Restriction::All)?;
        let mut failure = None;
        for a in 0..=m.ground() {
            let a = Reorientation(a);
            let ok = match greedy_minimalize(m, a, &order) {
                Ok(out) => is_minimal(m, out.result, Mode::Both, &order) && both.same_class(a, out.result)?,
                Err(_) => false,
            };
            if !ok {
                failure = Some(a);
                break;
            }
        }
        r.check("greedy-minimalization", failure.is_none(), || {
            format!("reorientation {:#b} not minimalized within its class", failure.map_or(0, |a| a.0))
        });
    }

    Ok(r.checks)
}
