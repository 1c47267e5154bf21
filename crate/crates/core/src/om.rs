//! Oriented matroids given by their full lists of signed circuits and cocircuits.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{OmError, Result, MAX_ELEMENTS};
use crate::linalg::{ColumnSubset, IntMatrix};
use crate::signed::{elements, full_set, Reorientation, SignedSet};

/// Ground sets up to this size get the exhaustive Farkas check in [`OrientedMatroid::validate`].
pub const EXHAUSTIVE_CHECK_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetKind {
    Circuit,
    Cocircuit,
}

/// An oriented matroid on the ground set `0..n`, ordered numerically.
///
/// Each signed circuit and cocircuit pair `{X, -X}` is stored once, in
/// canonical form, sorted by support size and then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientedMatroid {
    name: String,
    n: usize,
    rank: usize,
    circuits: Vec<SignedSet>,
    cocircuits: Vec<SignedSet>,
}

/// Acyclic and cyclic parts of a reorientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartDecomposition {
    /// Union of the supports of positive cocircuits.
    pub acyclic_part: u32,
    /// Union of the supports of positive circuits.
    pub cyclic_part: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub farkas_checked: bool,
    /// Failed checks, first counterexample of each kind.
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.failures.into_iter().next() {
            None => Ok(()),
            Some(first) => Err(OmError::Invalid(first)),
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        Err(OmError::GroundSetTooLarge(n))
    } else {
        Ok(())
    }
}

fn sort_storage(sets: &mut Vec<SignedSet>) {
    sets.sort_by_cached_key(|s| s.storage_key());
    sets.dedup();
}

/// Inclusion-minimal dependent column sets and their kernel sign patterns.
fn matrix_circuits(m: &IntMatrix) -> Vec<SignedSet> {
    let n = m.cols();
    let rank = m.rank();
    let mut found: Vec<SignedSet> = Vec::new();
    for k in 1..=(rank + 1).min(n) {
        let mut subset: u32 = (1 << k) - 1;
        let limit = 1u32 << n;
        while subset < limit {
            if !found.iter().any(|c| c.support() & !subset == 0) {
                let cols: Vec<usize> = elements(subset).collect();
                if let ColumnSubset::Circuit(signs) = m.analyze_columns(&cols) {
                    let mut pos = 0;
                    let mut neg = 0;
                    for (&c, &s) in cols.iter().zip(&signs) {
                        match s {
                            1 => pos |= 1 << c,
                            -1 => neg |= 1 << c,
                            _ => unreachable!("minimal dependent set has a full-support kernel vector"),
                        }
                    }
                    found.push(SignedSet { pos, neg }.canonical());
                }
            }
            // next word with the same popcount
            let c = subset & subset.wrapping_neg();
            let r = subset + c;
            subset = (((r ^ subset) >> 2) / c) | r;
        }
    }
    sort_storage(&mut found);
    found
}

impl OrientedMatroid {
    /// The oriented matroid of the columns of an integer matrix.
    pub fn from_matrix(name: impl Into<String>, matrix: &[Vec<i64>]) -> Result<Self> {
        let rows = matrix.len();
        let cols = matrix.first().map_or(0, |r| r.len());
        for (row, r) in matrix.iter().enumerate() {
            if r.len() != cols {
                return Err(OmError::RaggedMatrix { row, found: r.len(), expected: cols });
            }
        }
        check_size(cols)?;
        let m = IntMatrix::from_rows(rows, cols, |i, j| BigInt::from(matrix[i][j]));
        Ok(Self::from_int_matrix(name.into(), &m))
    }

    fn from_int_matrix(name: String, m: &IntMatrix) -> Self {
        let n = m.cols();
        let rank = m.rank();
        let circuits = matrix_circuits(m);
        let kernel = m.kernel_basis();
        let dual = IntMatrix::from_rows(kernel.len(), n, |i, j| kernel[i][j].clone());
        let cocircuits = matrix_circuits(&dual);
        OrientedMatroid { name, n, rank, circuits, cocircuits }
    }

    /// Graphic oriented matroid: edge `(u, v)` is directed from `u` to `v`,
    /// with `+1` at the head and `-1` at the tail of its incidence column.
    pub fn from_graph(name: impl Into<String>, vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_size(edges.len())?;
        for &(u, v) in edges {
            if u >= vertices || v >= vertices {
                return Err(OmError::VertexOutOfRange(u, v, vertices));
            }
        }
        let m = IntMatrix::from_rows(vertices, edges.len(), |vertex, e| {
            let (tail, head) = edges[e];
            if tail == head {
                BigInt::from(0)
            } else if vertex == head {
                BigInt::from(1)
            } else if vertex == tail {
                BigInt::from(-1)
            } else {
                BigInt::from(0)
            }
        });
        Ok(Self::from_int_matrix(name.into(), &m))
    }

    /// Uniform oriented matroid `U_{r,n}` realized by the Vandermonde matrix
    /// with column `i` equal to `(1, t, t^2, ..., t^{r-1})` for `t = i + 1`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(OmError::InvalidUniform { r, n });
        }
        check_size(n)?;
        let m = IntMatrix::from_rows(r, n, |i, j| BigInt::from(j as i64 + 1).pow(i as u32));
        Ok(Self::from_int_matrix(format!("U_{{{r},{n}}}"), &m))
    }

    /// Oriented matroid from explicit circuit and cocircuit lists.
    ///
    /// The rank is inferred with the greedy circuit oracle; the result must
    /// pass [`validate`](Self::validate).
    pub fn from_signed_sets(
        name: impl Into<String>,
        n: usize,
        circuits: Vec<SignedSet>,
        cocircuits: Vec<SignedSet>,
    ) -> Result<Self> {
        check_size(n)?;
        let ground = full_set(n);
        for s in circuits.iter().chain(&cocircuits) {
            let s = SignedSet::new(s.pos, s.neg)?;
            if s.support() & !ground != 0 {
                return Err(OmError::ElementOutOfRange { element: s.max_element().unwrap_or(0), n });
            }
        }
        let canon = |v: Vec<SignedSet>| {
            let mut v: Vec<SignedSet> = v.into_iter().map(|s| s.canonical()).collect();
            sort_storage(&mut v);
            v
        };
        let mut om = OrientedMatroid {
            name: name.into(),
            n,
            rank: 0,
            circuits: canon(circuits),
            cocircuits: canon(cocircuits),
        };
        om.rank = crate::tutte::rank(&om, ground);
        om.validate().into_result()?;
        Ok(om)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ground(&self) -> u32 {
        full_set(self.n)
    }

    pub fn circuits(&self) -> &[SignedSet] {
        &self.circuits
    }

    pub fn cocircuits(&self) -> &[SignedSet] {
        &self.cocircuits
    }

    pub fn sets(&self, kind: SetKind) -> &[SignedSet] {
        match kind {
            SetKind::Circuit => &self.circuits,
            SetKind::Cocircuit => &self.cocircuits,
        }
    }

    /// Elements forming a circuit on their own.
    pub fn loops(&self) -> u32 {
        self.circuits.iter().map(|c| c.support()).filter(|s| s.count_ones() == 1).fold(0, |a, s| a | s)
    }

    /// Elements forming a cocircuit on their own.
    pub fn coloops(&self) -> u32 {
        self.cocircuits.iter().map(|c| c.support()).filter(|s| s.count_ones() == 1).fold(0, |a, s| a | s)
    }

    pub fn dual(&self) -> Self {
        OrientedMatroid {
            name: format!("{}*", self.name),
            n: self.n,
            rank: self.n - self.rank,
            circuits: self.cocircuits.clone(),
            cocircuits: self.circuits.clone(),
        }
    }

    /// Stored sets of the given kind that are positive, up to sign, in `-_A M`.
    pub fn positive_sets(&self, a: Reorientation, kind: SetKind) -> Vec<SignedSet> {
        self.positive_iter(a, kind).copied().collect()
    }

    pub(crate) fn positive_iter(&self, a: Reorientation, kind: SetKind) -> impl Iterator<Item = &SignedSet> {
        self.sets(kind).iter().filter(move |s| s.positive_up_to_sign(a.0))
    }

    pub(crate) fn has_positive(&self, a: Reorientation, kind: SetKind) -> bool {
        self.positive_iter(a, kind).next().is_some()
    }

    fn parts(&self, a: Reorientation) -> PartDecomposition {
        let union = |kind| self.positive_iter(a, kind).fold(0, |u, s| u | s.support());
        PartDecomposition { acyclic_part: union(SetKind::Cocircuit), cyclic_part: union(SetKind::Circuit) }
    }

    /// Acyclic and cyclic parts of `-_A M`; errors unless they partition the ground set.
    pub fn part_decomposition(&self, a: Reorientation) -> Result<PartDecomposition> {
        let p = self.parts(a);
        if p.acyclic_part & p.cyclic_part != 0 || p.acyclic_part | p.cyclic_part != self.ground() {
            return Err(OmError::Invalid(format!(
                "acyclic part {:#b} and cyclic part {:#b} of reorientation {:#b} do not partition the ground set",
                p.acyclic_part, p.cyclic_part, a.0
            )));
        }
        Ok(p)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        let ground = self.ground();

        for (label, sets) in [("circuit", &self.circuits), ("cocircuit", &self.cocircuits)] {
            if let Some(s) = sets.iter().find(|s| s.pos & s.neg != 0 || s.support() == 0) {
                failures.push(format!("{label} {s} is not a nonempty disjoint pair"));
            }
            if let Some(s) = sets.iter().find(|s| s.support() & !ground != 0) {
                failures.push(format!("{label} {s} has elements outside the ground set"));
            }
            if let Some(s) = sets.iter().find(|s| !s.is_canonical()) {
                failures.push(format!("{label} {s} is not in canonical form"));
            }
            'outer: for (i, x) in sets.iter().enumerate() {
                for y in &sets[i + 1..] {
                    let (sx, sy) = (x.support(), y.support());
                    if sx & !sy == 0 || sy & !sx == 0 {
                        failures.push(format!("{label} supports of {x} and {y} are comparable"));
                        break 'outer;
                    }
                }
            }
        }

        'orth: for c in &self.circuits {
            for d in &self.cocircuits {
                if c.support() & d.support() != 0 && (c.agreements(d) == 0 || c.disagreements(d) == 0) {
                    failures.push(format!("circuit {c} and cocircuit {d} are not orthogonal"));
                    break 'orth;
                }
            }
        }

        let farkas_checked = self.n <= EXHAUSTIVE_CHECK_LIMIT;
        if farkas_checked {
            for a in 0..=ground {
                if let Err(OmError::Invalid(msg)) = self.part_decomposition(Reorientation(a)) {
                    failures.push(msg);
                    break;
                }
            }
        }

        ValidationReport { farkas_checked, failures }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ss(pos: &[usize], neg: &[usize]) -> SignedSet {
        SignedSet::from_elements(pos, neg).unwrap()
    }

    fn triangle() -> OrientedMatroid {
        OrientedMatroid::from_matrix("tri", &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap()
    }

    #[test]
    fn triangle_from_matrix() {
        // kernel of [[1,0,1],[0,1,1]] is spanned by (1,1,-1); the row space
        // minimal supports are (1,0,1), (0,1,1) and (1,-1,0).
        let m = triangle();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.circuits(), &[ss(&[0, 1], &[2])]);
        assert_eq!(m.cocircuits(), &[ss(&[0], &[1]), ss(&[0, 2], &[]), ss(&[1, 2], &[])]);
        assert!(m.validate().passed());
    }

    #[test]
    fn u24_from_matrix() {
        // columns (1,0),(0,1),(1,1),(1,2); the sign of each 3-subset kernel
        // vector follows from Cramer's rule on the 2x2 minors.
        let m = OrientedMatroid::from_matrix("u24", &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
        assert_eq!(
            m.circuits(),
            &[ss(&[0, 1], &[2]), ss(&[0, 1], &[3]), ss(&[0, 3], &[2]), ss(&[1, 2], &[3])]
        );
        assert_eq!(m.cocircuits().len(), 4);
        assert!(m.cocircuits().iter().all(|d| d.support().count_ones() == 3));
        assert!(m.cocircuits().contains(&ss(&[1, 2, 3], &[])));
        let report = m.validate();
        assert!(report.farkas_checked);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn zero_column_is_a_loop() {
        let m = OrientedMatroid::from_matrix("loop", &[vec![0]]).unwrap();
        assert_eq!(m.circuits(), &[ss(&[0], &[])]);
        assert!(m.cocircuits().is_empty());
        assert_eq!(m.loops(), 1);
        let empty_rows = OrientedMatroid::from_matrix("loop", &[]).unwrap();
        assert_eq!(empty_rows.n(), 0);
    }

    #[test]
    fn graph_builders() {
        let tri = OrientedMatroid::from_graph("tri", 3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.rank(), 2);
        assert_eq!(tri.circuits().len(), 1);
        assert_eq!(tri.circuits()[0].support(), 0b111);
        assert_eq!(tri.cocircuits().len(), 3);

        let lp = OrientedMatroid::from_graph("loop", 1, &[(0, 0)]).unwrap();
        assert_eq!(lp.circuits(), &[ss(&[0], &[])]);

        let path = OrientedMatroid::from_graph("path", 3, &[(0, 1), (1, 2)]).unwrap();
        assert!(path.circuits().is_empty());
        assert_eq!(path.cocircuits(), &[ss(&[0], &[]), ss(&[1], &[])]);

        assert_eq!(
            OrientedMatroid::from_graph("bad", 2, &[(0, 2)]),
            Err(OmError::VertexOutOfRange(0, 2, 2))
        );
        let many: Vec<(usize, usize)> = (0..21).map(|i| (0, i % 2)).collect();
        assert_eq!(OrientedMatroid::from_graph("big", 2, &many), Err(OmError::GroundSetTooLarge(21)));
    }

    #[test]
    fn uniform_counts() {
        let u = OrientedMatroid::uniform(2, 4).unwrap();
        assert_eq!((u.rank(), u.circuits().len(), u.cocircuits().len()), (2, 4, 4));
        let coloop = OrientedMatroid::uniform(1, 1).unwrap();
        assert!(coloop.circuits().is_empty());
        assert_eq!(coloop.cocircuits(), &[ss(&[0], &[])]);
        let u25 = OrientedMatroid::uniform(2, 5).unwrap();
        assert_eq!((u25.circuits().len(), u25.cocircuits().len()), (10, 5));
        assert!(u25.circuits().iter().all(|c| c.support().count_ones() == 3));
        assert!(u25.cocircuits().iter().all(|c| c.support().count_ones() == 4));
        assert_eq!(OrientedMatroid::uniform(3, 2), Err(OmError::InvalidUniform { r: 3, n: 2 }));
        assert_eq!(OrientedMatroid::uniform(2, 21), Err(OmError::GroundSetTooLarge(21)));
        let free = OrientedMatroid::uniform(0, 2).unwrap();
        assert_eq!(free.circuits().len(), 2);
    }

    #[test]
    fn from_signed_sets_paths() {
        let tri = triangle();
        let rebuilt =
            OrientedMatroid::from_signed_sets("tri", 3, tri.circuits().to_vec(), tri.cocircuits().to_vec()).unwrap();
        assert_eq!(rebuilt.rank(), 2);
        assert_eq!(rebuilt, tri);

        let bad = OrientedMatroid::from_signed_sets("bad", 1, vec![ss(&[0], &[])], vec![ss(&[0], &[])]);
        assert!(matches!(bad, Err(OmError::Invalid(msg)) if msg.contains("orthogonal")));

        let free = OrientedMatroid::from_signed_sets("free", 2, vec![], vec![ss(&[0], &[]), ss(&[1], &[])]).unwrap();
        assert_eq!(free.rank(), 2);

        let comparable = OrientedMatroid::from_signed_sets(
            "cmp",
            3,
            vec![ss(&[0, 1], &[]), ss(&[0, 1, 2], &[])],
            vec![],
        );
        assert!(matches!(comparable, Err(OmError::Invalid(msg)) if msg.contains("comparable")));

        let empty = OrientedMatroid::from_signed_sets("e", 2, vec![SignedSet { pos: 0, neg: 0 }], vec![]);
        assert_eq!(empty, Err(OmError::EmptySignedSet));
    }

    #[test]
    fn tampered_u24_fails_orthogonality() {
        let u = OrientedMatroid::uniform(2, 4).unwrap();
        let mut circuits = u.circuits().to_vec();
        // flip the sign of the largest element of the first circuit
        let c = circuits[0];
        let e = 1 << c.max_element().unwrap();
        circuits[0] = c.reoriented(e);
        let tampered = OrientedMatroid { circuits, ..u };
        let report = tampered.validate();
        assert!(!report.passed());
        assert!(report.failures[0].contains("not orthogonal"), "{:?}", report.failures);
    }

    #[test]
    fn positive_sets_and_parts() {
        let tri = triangle();
        assert!(tri.positive_sets(Reorientation(0), SetKind::Circuit).is_empty());
        assert_eq!(tri.positive_sets(Reorientation(0b100), SetKind::Circuit), vec![ss(&[0, 1], &[2])]);
        assert_eq!(
            tri.part_decomposition(Reorientation(0)).unwrap(),
            PartDecomposition { acyclic_part: 0b111, cyclic_part: 0 }
        );
        assert_eq!(
            tri.part_decomposition(Reorientation(0b100)).unwrap(),
            PartDecomposition { acyclic_part: 0, cyclic_part: 0b111 }
        );

        let lp = OrientedMatroid::from_matrix("loop", &[vec![0]]).unwrap();
        for a in 0..2 {
            assert_eq!(lp.positive_sets(Reorientation(a), SetKind::Circuit), vec![ss(&[0], &[])]);
        }

        let path = OrientedMatroid::from_graph("path", 3, &[(0, 1), (1, 2)]).unwrap();
        for a in 0..4 {
            assert_eq!(
                path.part_decomposition(Reorientation(a)).unwrap(),
                PartDecomposition { acyclic_part: 0b11, cyclic_part: 0 }
            );
        }
    }

    #[test]
    fn duality() {
        let u = OrientedMatroid::uniform(2, 4).unwrap();
        let d = u.dual();
        assert_eq!(d.rank(), 2);
        assert!(d.circuits().iter().all(|c| c.support().count_ones() == 3));
        assert_eq!(d.dual().circuits(), u.circuits());
        assert_eq!(d.dual().cocircuits(), u.cocircuits());

        let free = OrientedMatroid::uniform(2, 2).unwrap();
        let loops = free.dual();
        assert_eq!(loops.loops(), 0b11);
        assert_eq!(loops.rank(), 0);
    }

    #[test]
    fn rebuild_is_deterministic() {
        let a = OrientedMatroid::uniform(3, 6).unwrap();
        let b = OrientedMatroid::uniform(3, 6).unwrap();
        assert_eq!(a, b);
    }
}
