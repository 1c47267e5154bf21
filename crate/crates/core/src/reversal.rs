//! Circuit, cocircuit and circuit-cocircuit reversal classes of reorientations.
//!
//! Two reorientations `A` and `A △ supp(C)` are related when `C` is a positive
//! circuit or cocircuit of `-_A M`; classes are the transitive closure. All
//! `2^n` reorientations (or the acyclic / totally cyclic ones) are enumerated
//! and merged with a disjoint-set forest.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::activity::{is_minimal, GroundOrder};
use crate::error::{OmError, Result};
use crate::om::{OrientedMatroid, SetKind};
use crate::signed::Reorientation;
use crate::union_find::UnionFind;

/// Which positive sets may be reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Circuit,
    Cocircuit,
    Both,
}

impl Mode {
    pub fn kinds(self) -> &'static [SetKind] {
        match self {
            Mode::Circuit => &[SetKind::Circuit],
            Mode::Cocircuit => &[SetKind::Cocircuit],
            Mode::Both => &[SetKind::Circuit, SetKind::Cocircuit],
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Circuit => "circuit",
            Mode::Cocircuit => "cocircuit",
            Mode::Both => "both",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "circuit" => Ok(Mode::Circuit),
            "cocircuit" => Ok(Mode::Cocircuit),
            "both" => Ok(Mode::Both),
            _ => Err(format!("unknown mode `{s}` (expected circuit, cocircuit or both)")),
        }
    }
}

/// Which reorientations take part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Restriction {
    All,
    Acyclic,
    TotallyCyclic,
}

impl Restriction {
    pub fn admits(self, m: &OrientedMatroid, a: Reorientation) -> bool {
        match self {
            Restriction::All => true,
            Restriction::Acyclic => !m.has_positive(a, SetKind::Circuit),
            Restriction::TotallyCyclic => !m.has_positive(a, SetKind::Cocircuit),
        }
    }

    /// Rejects the combinations that have no meaning: acyclic reorientations
    /// have no positive circuit to reverse, totally cyclic ones no positive cocircuit.
    pub fn check_mode(self, mode: Mode) -> Result<()> {
        let ok = match self {
            Restriction::All => true,
            Restriction::Acyclic => mode != Mode::Circuit,
            Restriction::TotallyCyclic => mode != Mode::Cocircuit,
        };
        if ok {
            Ok(())
        } else {
            Err(OmError::ModeRestrictionMismatch { mode: mode.to_string(), restriction: self.to_string() })
        }
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Restriction::All => "all",
            Restriction::Acyclic => "acyclic",
            Restriction::TotallyCyclic => "totally_cyclic",
        })
    }
}

impl std::str::FromStr for Restriction {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Restriction::All),
            "acyclic" => Ok(Restriction::Acyclic),
            "totally_cyclic" | "totally-cyclic" => Ok(Restriction::TotallyCyclic),
            _ => Err(format!("unknown restriction `{s}` (expected all, acyclic or totally_cyclic)")),
        }
    }
}

const NOT_ADMITTED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub representative: u32,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<u32>>,
}

/// Partition of the admitted reorientations into reversal classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversalPartition {
    pub mode: Mode,
    pub restriction: Restriction,
    /// Indexed by reorientation word; the smallest member of the class, or
    /// `u32::MAX` when the reorientation is not admitted.
    class_of: Vec<u32>,
    class_count: usize,
}

impl ReversalPartition {
    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn is_admitted(&self, a: Reorientation) -> bool {
        self.class_of.get(a.0 as usize).is_some_and(|&c| c != NOT_ADMITTED)
    }

    pub fn admitted_count(&self) -> usize {
        self.class_of.iter().filter(|&&c| c != NOT_ADMITTED).count()
    }

    pub fn representative(&self, a: Reorientation) -> Result<Reorientation> {
        match self.class_of.get(a.0 as usize) {
            Some(&c) if c != NOT_ADMITTED => Ok(Reorientation(c)),
            _ => Err(OmError::NotAdmitted(a.0)),
        }
    }

    pub fn same_class(&self, a: Reorientation, b: Reorientation) -> Result<bool> {
        Ok(self.representative(a)? == self.representative(b)?)
    }

    /// Classes ordered by representative; members listed when requested.
    pub fn classes(&self, with_members: bool) -> Vec<ClassSummary> {
        let mut sizes = vec![0usize; self.class_of.len()];
        for &c in &self.class_of {
            if c != NOT_ADMITTED {
                sizes[c as usize] += 1;
            }
        }
        let mut members: Vec<Vec<u32>> = Vec::new();
        if with_members {
            members = vec![Vec::new(); self.class_of.len()];
            for (a, &c) in self.class_of.iter().enumerate() {
                if c != NOT_ADMITTED {
                    members[c as usize].push(a as u32);
                }
            }
        }
        sizes
            .iter()
            .enumerate()
            .filter(|(_, &s)| s > 0)
            .map(|(rep, &size)| ClassSummary {
                representative: rep as u32,
                size,
                members: with_members.then(|| std::mem::take(&mut members[rep])),
            })
            .collect()
    }

    pub fn export(&self, with_members: bool) -> PartitionExport {
        PartitionExport {
            mode: self.mode,
            restriction: self.restriction,
            class_count: self.class_count,
            classes: self.classes(with_members),
        }
    }
}

/// JSON shape of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionExport {
    pub mode: Mode,
    pub restriction: Restriction,
    pub class_count: usize,
    pub classes: Vec<ClassSummary>,
}

/// Admission flag for every reorientation word.
fn admitted_table(m: &OrientedMatroid, restriction: Restriction) -> Vec<bool> {
    (0..=m.ground()).map(|a| restriction.admits(m, Reorientation(a))).collect()
}

pub fn reversal_classes(m: &OrientedMatroid, mode: Mode, restriction: Restriction) -> Result<ReversalPartition> {
    restriction.check_mode(mode)?;
    let admitted = admitted_table(m, restriction);
    let mut uf = UnionFind::new(admitted.len());
    for (a, _) in admitted.iter().enumerate().filter(|(_, &ok)| ok) {
        let a = Reorientation(a as u32);
        for &kind in mode.kinds() {
            for c in m.positive_iter(a, kind) {
                let b = a.flip(c.support());
                if !admitted[b.0 as usize] {
                    return Err(OmError::InvariantViolation(format!(
                        "reversing {kind:?} {c} takes {restriction} reorientation {:#b} to {:#b}, which is not {restriction}",
                        a.0, b.0
                    )));
                }
                uf.union(a.0, b.0);
            }
        }
    }

    // relabel every class by its smallest member
    let mut smallest = vec![NOT_ADMITTED; admitted.len()];
    let mut class_of = vec![NOT_ADMITTED; admitted.len()];
    let mut class_count = 0;
    for (a, _) in admitted.iter().enumerate().filter(|(_, &ok)| ok) {
        let root = uf.find(a as u32) as usize;
        if smallest[root] == NOT_ADMITTED {
            smallest[root] = a as u32;
            class_count += 1;
        }
        class_of[a] = smallest[root];
    }
    Ok(ReversalPartition { mode, restriction, class_of, class_count })
}

/// The five settings counted against Tutte evaluations, in order.
pub const COUNT_SETTINGS: [(Mode, Restriction); 5] = [
    (Mode::Both, Restriction::All),
    (Mode::Cocircuit, Restriction::All),
    (Mode::Circuit, Restriction::All),
    (Mode::Cocircuit, Restriction::Acyclic),
    (Mode::Circuit, Restriction::TotallyCyclic),
];

/// Class counts in the settings of [`COUNT_SETTINGS`]: circuit-cocircuit,
/// cocircuit, circuit, acyclic cocircuit, totally cyclic circuit.
pub fn reversal_counts(m: &OrientedMatroid) -> Result<[u64; 5]> {
    let mut out = [0u64; 5];
    for (slot, &(mode, restriction)) in out.iter_mut().zip(&COUNT_SETTINGS) {
        *slot = reversal_classes(m, mode, restriction)?.class_count() as u64;
    }
    Ok(out)
}

pub fn same_class(
    m: &OrientedMatroid,
    a: Reorientation,
    b: Reorientation,
    mode: Mode,
    restriction: Restriction,
) -> Result<bool> {
    reversal_classes(m, mode, restriction)?.same_class(a, b)
}

/// First pair `(A, B)`, `A < B`, of distinct minimal reorientations in one
/// class, minimality taken for the same mode under the ground order.
pub fn find_minimal_pair_in_class(
    m: &OrientedMatroid,
    mode: Mode,
    restriction: Restriction,
) -> Result<Option<(Reorientation, Reorientation)>> {
    let partition = reversal_classes(m, mode, restriction)?;
    Ok(first_minimal_pair(m, &partition, &GroundOrder::identity(m.n())))
}

pub fn first_minimal_pair(
    m: &OrientedMatroid,
    partition: &ReversalPartition,
    order: &GroundOrder,
) -> Option<(Reorientation, Reorientation)> {
    let mut first_minimal = vec![NOT_ADMITTED; partition.class_of.len()];
    // within one class the best pair is its two smallest minimal members
    let mut best: Option<(Reorientation, Reorientation)> = None;
    for a in 0..=m.ground() {
        let a = Reorientation(a);
        if !partition.is_admitted(a) || !is_minimal(m, a, partition.mode, order) {
            continue;
        }
        let rep = partition.class_of[a.0 as usize] as usize;
        if first_minimal[rep] == NOT_ADMITTED {
            first_minimal[rep] = a.0;
        } else {
            let pair = (Reorientation(first_minimal[rep]), a);
            if best.is_none_or(|b| pair < b) {
                best = Some(pair);
            }
        }
    }
    best
}
