//! Orientation activities, minimal reorientations and activity classes.
//!
//! Everything here depends on a linear order of the ground set. The order is
//! passed as a [`GroundOrder`]; the numeric order is the identity.
//!
//! For a reorientation `-_A M`, an element is *active* if it is the minimum
//! of some positive circuit, *dual-active* if it is the minimum of some
//! positive cocircuit. `A` is minimal (for a mode) when it contains none of
//! those minima. Counting minimal reorientations gives the evaluations
//! `t(1,1), t(1,2), t(2,1), t(1,0), t(0,1)` for every oriented matroid.

use serde::{Deserialize, Serialize};

use crate::error::{OmError, Result};
use crate::om::{OrientedMatroid, SetKind};
use crate::reversal::Mode;
use crate::signed::{elements, Reorientation, SignedSet};
use crate::tutte::TuttePolynomial;

/// Largest ground set for which activity classes are enumerated.
pub const ACTIVITY_CLASS_LIMIT: usize = 16;

/// A linear order of `0..n`: `order[k]` is the `k`-th smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundOrder {
    order: Vec<usize>,
    position: Vec<usize>,
    identity: bool,
}

impl GroundOrder {
    pub fn identity(n: usize) -> Self {
        GroundOrder { order: (0..n).collect(), position: (0..n).collect(), identity: true }
    }

    pub fn from_permutation(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (k, &e) in order.iter().enumerate() {
            if e >= n || position[e] != usize::MAX {
                return Err(OmError::InvalidOrder(n));
            }
            position[e] = k;
        }
        let identity = order.iter().enumerate().all(|(k, &e)| k == e);
        Ok(GroundOrder { order, position, identity })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    #[inline]
    pub fn position(&self, e: usize) -> usize {
        self.position[e]
    }

    /// Smallest element of a nonempty set under this order.
    #[inline]
    pub fn min_of(&self, set: u32) -> usize {
        debug_assert!(set != 0);
        if self.identity {
            set.trailing_zeros() as usize
        } else {
            elements(set).min_by_key(|&e| self.position[e]).expect("nonempty set")
        }
    }

    /// Elements of `set` from smallest to largest under this order.
    pub fn sorted(&self, set: u32) -> Vec<usize> {
        let mut v: Vec<usize> = elements(set).collect();
        v.sort_by_key(|&e| self.position[e]);
        v
    }

    fn check(&self, m: &OrientedMatroid) {
        assert_eq!(self.len(), m.n(), "order length does not match the ground set");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActivityData {
    /// Minima of positive circuits.
    pub active: u32,
    /// Minima of positive cocircuits.
    pub dual_active: u32,
    pub o: u32,
    pub o_star: u32,
}

fn minima(m: &OrientedMatroid, a: Reorientation, kind: SetKind, order: &GroundOrder) -> u32 {
    m.positive_iter(a, kind).fold(0, |acc, s| acc | 1 << order.min_of(s.support()))
}

pub fn activities(m: &OrientedMatroid, a: Reorientation, order: &GroundOrder) -> ActivityData {
    order.check(m);
    let active = minima(m, a, SetKind::Circuit, order);
    let dual_active = minima(m, a, SetKind::Cocircuit, order);
    ActivityData { active, dual_active, o: active.count_ones(), o_star: dual_active.count_ones() }
}

/// True iff `A` holds no minimum of a positive set of the kinds in `mode`.
pub fn is_minimal(m: &OrientedMatroid, a: Reorientation, mode: Mode, order: &GroundOrder) -> bool {
    mode.kinds()
        .iter()
        .all(|&kind| m.positive_iter(a, kind).all(|s| !a.contains(order.min_of(s.support()))))
}

/// Counts of circuit-cocircuit minimal, cocircuit minimal, circuit minimal,
/// acyclic cocircuit minimal and totally cyclic circuit minimal reorientations.
pub fn minimal_counts(m: &OrientedMatroid, order: &GroundOrder) -> [u64; 5] {
    order.check(m);
    let mut counts = [0u64; 5];
    for a in 0..=m.ground() {
        let a = Reorientation(a);
        let holds_min = |kind| {
            let mut any_positive = false;
            let mut blocked = false;
            for s in m.positive_iter(a, kind) {
                any_positive = true;
                if a.contains(order.min_of(s.support())) {
                    blocked = true;
                    break;
                }
            }
            (any_positive, blocked)
        };
        let (has_circuit, circuit_blocked) = holds_min(SetKind::Circuit);
        let (has_cocircuit, cocircuit_blocked) = holds_min(SetKind::Cocircuit);
        counts[0] += u64::from(!circuit_blocked && !cocircuit_blocked);
        counts[1] += u64::from(!cocircuit_blocked);
        counts[2] += u64::from(!circuit_blocked);
        counts[3] += u64::from(!has_circuit && !cocircuit_blocked);
        counts[4] += u64::from(!has_cocircuit && !circuit_blocked);
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Minimalized {
    pub result: Reorientation,
    pub steps: u64,
}

/// Reverses positive circuits and cocircuits whose minimum lies in the
/// current reoriented set until none is left.
///
/// Each step takes the candidate with the smallest minimum, ties broken by the
/// lexicographically smallest support (both under `order`).
pub fn greedy_minimalize(m: &OrientedMatroid, a: Reorientation, order: &GroundOrder) -> Result<Minimalized> {
    order.check(m);
    let cap = 1u64 << (2 * m.n());
    let mut current = a;
    let mut steps = 0u64;
    loop {
        let mut best: Option<(usize, Vec<usize>, &SignedSet)> = None;
        for kind in [SetKind::Circuit, SetKind::Cocircuit] {
            for s in m.positive_iter(current, kind) {
                let low = order.min_of(s.support());
                if !current.contains(low) {
                    continue;
                }
                let key = (order.position(low), order.sorted(s.support()).iter().map(|&e| order.position(e)).collect());
                if best.as_ref().is_none_or(|(p, sup, _)| key < (*p, sup.clone())) {
                    best = Some((key.0, key.1, s));
                }
            }
        }
        let Some((_, _, s)) = best else {
            return Ok(Minimalized { result: current, steps });
        };
        if steps == cap {
            return Err(OmError::Invalid(format!(
                "greedy minimalization from {:#b} exceeded {cap} steps",
                a.0
            )));
        }
        current = current.flip(s.support());
        steps += 1;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Circuit,
    Cocircuit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Part {
    pub leader: usize,
    pub elements: u32,
    pub side: Side,
}

/// Parts ordered by leader under the ground order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ActivePartition {
    pub parts: Vec<Part>,
}

impl ActivePartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Parts `F(a_i) \ F(a_{i+1})` where `F(a)` is the union of positive sets
/// of one kind whose minimum is at least `a`.
fn side_parts(m: &OrientedMatroid, a: Reorientation, kind: SetKind, order: &GroundOrder) -> Vec<Part> {
    let side = match kind {
        SetKind::Circuit => Side::Circuit,
        SetKind::Cocircuit => Side::Cocircuit,
    };
    let positives: Vec<(usize, u32)> = m
        .positive_iter(a, kind)
        .map(|s| (order.position(order.min_of(s.support())), s.support()))
        .collect();
    let mut leaders: Vec<usize> = positives.iter().map(|&(p, _)| p).collect();
    leaders.sort_unstable();
    leaders.dedup();
    let above = |p: usize| positives.iter().filter(|&&(q, _)| q >= p).fold(0u32, |u, &(_, s)| u | s);
    leaders
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let next = leaders.get(i + 1).map_or(0, |&q| above(q));
            Part { leader: order.as_slice()[p], elements: above(p) & !next, side }
        })
        .collect()
}

pub fn active_partition(m: &OrientedMatroid, a: Reorientation, order: &GroundOrder) -> Result<ActivePartition> {
    order.check(m);
    let mut parts = side_parts(m, a, SetKind::Circuit, order);
    parts.extend(side_parts(m, a, SetKind::Cocircuit, order));
    parts.sort_by_key(|p| order.position(p.leader));

    let mut covered = 0u32;
    for p in &parts {
        if p.elements & covered != 0 {
            return Err(OmError::InvariantViolation(format!(
                "active partition of {:#b}: part led by {} overlaps earlier parts",
                a.0, p.leader
            )));
        }
        if p.elements >> p.leader & 1 == 0 || order.min_of(p.elements) != p.leader {
            return Err(OmError::InvariantViolation(format!(
                "active partition of {:#b}: {} is not the minimum of its part",
                a.0, p.leader
            )));
        }
        covered |= p.elements;
    }
    if covered != m.ground() {
        return Err(OmError::InvariantViolation(format!(
            "active partition of {:#b} covers {covered:#b}, not the ground set",
            a.0
        )));
    }
    Ok(ActivePartition { parts })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActivityClass {
    /// Smallest member.
    pub representative: u32,
    pub size: usize,
    pub parts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivityClasses {
    /// Indexed by reorientation word: the smallest member of its class.
    pub class_of: Vec<u32>,
    /// Ordered by representative.
    pub classes: Vec<ActivityClass>,
}

impl ActivityClasses {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Partition of all reorientations into activity classes: the class of `A`
/// is obtained by reversing any union of parts of its active partition.
pub fn activity_classes(m: &OrientedMatroid, order: &GroundOrder) -> Result<ActivityClasses> {
    order.check(m);
    if m.n() > ACTIVITY_CLASS_LIMIT {
        return Err(OmError::GroundSetTooLarge(m.n()));
    }
    const UNSEEN: u32 = u32::MAX;
    let total = 1usize << m.n();
    let mut class_of = vec![UNSEEN; total];
    let mut classes = Vec::new();
    for start in 0..total as u32 {
        if class_of[start as usize] != UNSEEN {
            continue;
        }
        let partition = active_partition(m, Reorientation(start), order)?;
        let k = partition.len();
        // `start` is the smallest unassigned word, and the class is disjoint
        // from every earlier class, so `start` is its smallest member
        for mask in 0..1u32 << k {
            let flip = partition
                .parts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0u32, |u, (_, p)| u | p.elements);
            let member = start ^ flip;
            if class_of[member as usize] != UNSEEN {
                return Err(OmError::InvariantViolation(format!(
                    "reorientation {member:#b} generated from {start:#b} already belongs to the class of {:#b}",
                    class_of[member as usize]
                )));
            }
            if member != start && active_partition(m, Reorientation(member), order)? != partition {
                return Err(OmError::InvariantViolation(format!(
                    "reorientations {start:#b} and {member:#b} share an activity class but not an active partition"
                )));
            }
            class_of[member as usize] = start;
        }
        classes.push(ActivityClass { representative: start, size: 1 << k, parts: k });
    }
    Ok(ActivityClasses { class_of, classes })
}

/// Tutte polynomial from orientation activities:
/// `t(x, y) = sum over A of (x/2)^{o*(A)} (y/2)^{o(A)}`.
pub fn tutte_via_activities(m: &OrientedMatroid, order: &GroundOrder) -> Result<TuttePolynomial> {
    order.check(m);
    let n = m.n();
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    for a in 0..=m.ground() {
        let d = activities(m, Reorientation(a), order);
        counts[d.o_star as usize][d.o as usize] += 1;
    }
    let (rank, nullity) = (m.rank(), n - m.rank());
    let mut coeffs = vec![vec![0u64; nullity + 1]; rank + 1];
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let denominator = 1u64 << (i + j);
            if c % denominator != 0 || i > rank || j > nullity {
                return Err(OmError::Invalid(format!(
                    "activity sum term {c} x^{i} y^{j} / 2^{} is not a Tutte coefficient",
                    i + j
                )));
            }
            coeffs[i][j] = c / denominator;
        }
    }
    Ok(TuttePolynomial::new(rank, coeffs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalFlags {
    pub circuit: bool,
    pub cocircuit: bool,
    pub both: bool,
}

/// Per-reorientation activity record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActivityRecord {
    #[serde(rename = "A")]
    pub a: u32,
    pub o: u32,
    pub o_star: u32,
    pub minimal: MinimalFlags,
}

pub fn activity_records(m: &OrientedMatroid, order: &GroundOrder) -> Vec<ActivityRecord> {
    (0..=m.ground())
        .map(|a| {
            let r = Reorientation(a);
            let d = activities(m, r, order);
            ActivityRecord {
                a,
                o: d.o,
                o_star: d.o_star,
                minimal: MinimalFlags {
                    circuit: is_minimal(m, r, Mode::Circuit, order),
                    cocircuit: is_minimal(m, r, Mode::Cocircuit, order),
                    both: is_minimal(m, r, Mode::Both, order),
                },
            }
        })
        .collect()
}
