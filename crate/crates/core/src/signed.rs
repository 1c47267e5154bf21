//! Signed sets and reorientations over ground sets encoded as bit words.
//!
//! Element `e` of the ground set is bit `e` of a `u32`. Every set of elements
//! in this crate (supports, reorientations, parts) uses that encoding.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{OmError, Result};

/// Iterates the elements of a bit-encoded set in increasing order.
pub fn elements(mut set: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let e = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(e)
        }
    })
}

/// Builds a bit-encoded set from element indices.
pub fn set_of<I: IntoIterator<Item = usize>>(items: I) -> u32 {
    items.into_iter().fold(0, |acc, e| acc | (1 << e))
}

/// Mask with the low `n` bits set.
pub fn full_set(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A pair of disjoint element sets: the positive and the negative part.
///
/// Circuits and cocircuits come in opposite pairs `{X, -X}`. The canonical
/// representative of a pair has the smallest support element in `pos`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    pub pos: u32,
    pub neg: u32,
}

impl SignedSet {
    pub fn new(pos: u32, neg: u32) -> Result<Self> {
        let s = SignedSet { pos, neg };
        if pos & neg != 0 {
            return Err(OmError::OverlappingSignedSet(s));
        }
        if pos | neg == 0 {
            return Err(OmError::EmptySignedSet);
        }
        Ok(s)
    }

    pub fn from_elements(pos: &[usize], neg: &[usize]) -> Result<Self> {
        Self::new(set_of(pos.iter().copied()), set_of(neg.iter().copied()))
    }

    #[inline]
    pub fn support(&self) -> u32 {
        self.pos | self.neg
    }

    #[inline]
    pub fn negated(&self) -> Self {
        SignedSet { pos: self.neg, neg: self.pos }
    }

    /// Flips the sign of every element of `a`.
    #[inline]
    pub fn reoriented(&self, a: u32) -> Self {
        SignedSet {
            pos: (self.pos & !a) | (self.neg & a),
            neg: (self.neg & !a) | (self.pos & a),
        }
    }

    pub fn is_canonical(&self) -> bool {
        let s = self.support();
        s != 0 && self.pos & (s & s.wrapping_neg()) != 0
    }

    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            *self
        } else {
            self.negated()
        }
    }

    /// True if this set or its negation is positive in the reorientation by `a`.
    #[inline]
    pub fn positive_up_to_sign(&self, a: u32) -> bool {
        (self.neg & !a == 0 && self.pos & a == 0) || (self.pos & !a == 0 && self.neg & a == 0)
    }

    /// Elements where `self` and `other` carry the same sign.
    #[inline]
    pub fn agreements(&self, other: &SignedSet) -> u32 {
        (self.pos & other.pos) | (self.neg & other.neg)
    }

    /// Elements where `self` and `other` carry opposite signs.
    #[inline]
    pub fn disagreements(&self, other: &SignedSet) -> u32 {
        (self.pos & other.neg) | (self.neg & other.pos)
    }

    pub fn max_element(&self) -> Option<usize> {
        let s = self.support();
        (s != 0).then(|| 31 - s.leading_zeros() as usize)
    }

    /// Sort key used for storage order: support size, then elements lexicographically.
    pub(crate) fn storage_key(&self) -> (u32, Vec<usize>, Vec<usize>) {
        (
            self.support().count_ones(),
            elements(self.support()).collect(),
            elements(self.pos).collect(),
        )
    }
}

impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: u32| elements(s).map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({{{}}},{{{}}})", list(self.pos), list(self.neg))
    }
}

#[derive(Serialize, Deserialize)]
struct SignedSetRepr {
    pos: Vec<usize>,
    #[serde(default)]
    neg: Vec<usize>,
}

impl Serialize for SignedSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SignedSetRepr {
            pos: elements(self.pos).collect(),
            neg: elements(self.neg).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SignedSetRepr::deserialize(deserializer)?;
        if let Some(&e) = repr.pos.iter().chain(&repr.neg).find(|&&e| e >= 32) {
            return Err(serde::de::Error::custom(format!("element {e} out of range")));
        }
        SignedSet::from_elements(&repr.pos, &repr.neg).map_err(serde::de::Error::custom)
    }
}

/// A reorientation `-_A M`, identified with the set `A` of reoriented elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Reorientation(pub u32);

impl Reorientation {
    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    /// Symmetric difference with a support.
    pub fn flip(self, support: u32) -> Self {
        Reorientation(self.0 ^ support)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        elements(self.0)
    }
}

impl From<u32> for Reorientation {
    fn from(bits: u32) -> Self {
        Reorientation(bits)
    }
}
