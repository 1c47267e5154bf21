//! Independent oracles checked against the library.
//!
//! The oracles here recompute things from first principles (sign vectors,
//! explicit graph search, plain subset enumeration) without going through
//! the library's union-find, memoized ranks or storage conventions.

use std::collections::{BTreeSet, VecDeque};

use omrev::{
    catalog_instances, minimal_counts, reversal_classes, reversal_counts, tutte_polynomial, GroundOrder, Mode,
    OrientedMatroid, Restriction, COUNT_SETTINGS,
};

/// Sign vector of a stored signed set after reorienting by `a`.
fn signs(pos: u32, neg: u32, a: u32, n: usize) -> Vec<i8> {
    (0..n)
        .map(|e| {
            let s = if pos >> e & 1 == 1 {
                1
            } else if neg >> e & 1 == 1 {
                -1
            } else {
                0
            };
            if a >> e & 1 == 1 {
                -s
            } else {
                s
            }
        })
        .collect()
}

fn nonneg(v: &[i8]) -> bool {
    v.iter().all(|&s| s >= 0)
}

fn nonpos(v: &[i8]) -> bool {
    v.iter().all(|&s| s <= 0)
}

/// Supports of the sets of one kind that are positive (either sign) in `-_A M`.
fn positive_supports(sets: &[(u32, u32)], a: u32, n: usize) -> Vec<u32> {
    sets.iter()
        .filter(|&&(p, q)| {
            let v = signs(p, q, a, n);
            nonneg(&v) || nonpos(&v)
        })
        .map(|&(p, q)| p | q)
        .collect()
}

/// Reversal class count by breadth-first search over reorientations.
fn bfs_class_count(m: &OrientedMatroid, mode: Mode, restriction: Restriction) -> u64 {
    let n = m.n();
    let circuits: Vec<(u32, u32)> = m.circuits().iter().map(|c| (c.pos, c.neg)).collect();
    let cocircuits: Vec<(u32, u32)> = m.cocircuits().iter().map(|c| (c.pos, c.neg)).collect();
    let admitted = |a: u32| match restriction {
        Restriction::All => true,
        Restriction::Acyclic => positive_supports(&circuits, a, n).is_empty(),
        Restriction::TotallyCyclic => positive_supports(&cocircuits, a, n).is_empty(),
    };
    let moves = |a: u32| {
        let mut out = Vec::new();
        if mode != Mode::Cocircuit {
            out.extend(positive_supports(&circuits, a, n));
        }
        if mode != Mode::Circuit {
            out.extend(positive_supports(&cocircuits, a, n));
        }
        out
    };
    let mut seen = BTreeSet::new();
    let mut classes = 0;
    for start in 0..1u32 << n {
        if !admitted(start) || seen.contains(&start) {
            continue;
        }
        classes += 1;
        let mut queue = VecDeque::from([start]);
        seen.insert(start);
        while let Some(a) = queue.pop_front() {
            for s in moves(a) {
                let b = a ^ s;
                assert!(admitted(b), "{}: move left the admitted set", m.name());
                if seen.insert(b) {
                    queue.push_back(b);
                }
            }
        }
    }
    classes
}

#[test]
fn union_find_counts_match_breadth_first_search() {
    for e in catalog_instances() {
        let m = e.build().unwrap();
        let bfs: Vec<u64> = COUNT_SETTINGS.iter().map(|&(mode, r)| bfs_class_count(&m, mode, r)).collect();
        assert_eq!(reversal_counts(&m).unwrap().to_vec(), bfs, "{}", e.name);
        // mode=both gives the same classes under either restriction
        assert_eq!(
            reversal_classes(&m, Mode::Both, Restriction::Acyclic).unwrap().class_count() as u64,
            bfs[3],
            "{}",
            e.name
        );
        assert_eq!(
            reversal_classes(&m, Mode::Both, Restriction::TotallyCyclic).unwrap().class_count() as u64,
            bfs[4],
            "{}",
            e.name
        );
    }
}

/// Rank of a set of columns of a small integer matrix, by Gauss-Jordan
/// elimination with cross-multiplication on `i128`.
fn column_rank(matrix: &[Vec<i64>], cols: &[usize]) -> usize {
    let mut rows: Vec<Vec<i128>> = matrix.iter().map(|r| cols.iter().map(|&c| r[c] as i128).collect()).collect();
    let mut rank = 0;
    for c in 0..cols.len() {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let (f, g) = (rows[rank][c], rows[i][c]);
                for j in 0..cols.len() {
                    rows[i][j] = rows[i][j] * f - rows[rank][j] * g;
                }
                let gcd = rows[i].iter().fold(0i128, |a, &b| gcd(a, b.abs()));
                if gcd > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= gcd);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Tutte evaluation by corank-nullity over raw column ranks.
fn corank_nullity_eval(matrix: &[Vec<i64>], n: usize, x: i128, y: i128) -> i128 {
    let all: Vec<usize> = (0..n).collect();
    let full = column_rank(matrix, &all) as u32;
    (0..1u32 << n)
        .map(|s| {
            let cols: Vec<usize> = (0..n).filter(|&e| s >> e & 1 == 1).collect();
            let r = column_rank(matrix, &cols) as u32;
            (x - 1).pow(full - r) * (y - 1).pow(cols.len() as u32 - r)
        })
        .sum()
}

#[test]
fn tutte_matches_raw_matrix_ranks() {
    let cases: Vec<(&str, Vec<Vec<i64>>)> = vec![
        ("u24", vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2]]),
        ("u35", vec![vec![1, 1, 1, 1, 1], vec![1, 2, 3, 4, 5], vec![1, 4, 9, 16, 25]]),
        ("parallel", vec![vec![1, 1, 0, 2, 0], vec![0, 0, 1, 1, 0]]),
        ("k4", vec![
            vec![-1, -1, -1, 0, 0, 0],
            vec![1, 0, 0, -1, -1, 0],
            vec![0, 1, 0, 1, 0, -1],
            vec![0, 0, 1, 0, 1, 1],
        ]),
    ];
    for (name, matrix) in cases {
        let n = matrix[0].len();
        let m = OrientedMatroid::from_matrix(name, &matrix).unwrap();
        let t = tutte_polynomial(&m);
        for (x, y) in [(1, 1), (1, 2), (2, 1), (1, 0), (0, 1), (3, 2), (2, 5)] {
            assert_eq!(t.evaluate(x, y), corank_nullity_eval(&matrix, n, x as i128, y as i128), "{name} at ({x},{y})");
        }
    }
}

/// Circuit sign vectors must be orthogonal to every row-space vector, and
/// cocircuit supports must be the minimal nonempty row-space supports.
#[test]
fn signed_circuits_are_orthogonal_to_the_row_space() {
    let matrix = vec![vec![1i64, 0, 1, 1, 2, 0], vec![0, 1, 1, 2, -1, 0], vec![1, 1, 0, 3, 0, 0]];
    let m = OrientedMatroid::from_matrix("mix", &matrix).unwrap();
    let n = 6;
    let mut row_space = Vec::new();
    for a in -6i64..=6 {
        for b in -6i64..=6 {
            for c in -6i64..=6 {
                let v: Vec<i64> = (0..n).map(|j| a * matrix[0][j] + b * matrix[1][j] + c * matrix[2][j]).collect();
                if v.iter().any(|&x| x != 0) {
                    row_space.push(v);
                }
            }
        }
    }
    for c in m.circuits() {
        let s = signs(c.pos, c.neg, 0, n);
        // a circuit sign vector is the sign of a kernel vector: its dot product
        // with every row-space vector vanishes, so it cannot be one-signed
        for v in &row_space {
            let terms: Vec<i64> = (0..n).map(|j| s[j] as i64 * v[j].signum()).collect();
            let meets = terms.iter().any(|&t| t != 0);
            if meets {
                assert!(terms.iter().any(|&t| t > 0) && terms.iter().any(|&t| t < 0), "circuit {c} vs {v:?}");
            }
        }
    }
    // cocircuit supports are complements of hyperplanes: each is the support
    // of some row-space vector, and a minimal one
    let supports: BTreeSet<u32> = row_space
        .iter()
        .map(|v| (0..n).filter(|&j| v[j] != 0).fold(0u32, |s, j| s | 1 << j))
        .collect();
    for d in m.cocircuits() {
        assert!(supports.contains(&d.support()), "cocircuit {d} is not a row-space support");
        assert!(!supports.iter().any(|&s| s != d.support() && s & !d.support() == 0), "cocircuit {d} not minimal");
    }
    // element 5 is a zero column
    assert_eq!(m.loops(), 1 << 5);
}

#[test]
fn minimal_counts_by_direct_predicate() {
    // Recount with the raw definition: A contains no minimum of a positive set.
    for e in catalog_instances() {
        let m = e.build().unwrap();
        let n = m.n();
        let circuits: Vec<(u32, u32)> = m.circuits().iter().map(|c| (c.pos, c.neg)).collect();
        let cocircuits: Vec<(u32, u32)> = m.cocircuits().iter().map(|c| (c.pos, c.neg)).collect();
        let mut counts = [0u64; 5];
        for a in 0..1u32 << n {
            let pc = positive_supports(&circuits, a, n);
            let pd = positive_supports(&cocircuits, a, n);
            let free = |sets: &[u32]| sets.iter().all(|s| a >> s.trailing_zeros() & 1 == 0);
            counts[0] += (free(&pc) && free(&pd)) as u64;
            counts[1] += free(&pd) as u64;
            counts[2] += free(&pc) as u64;
            counts[3] += (pc.is_empty() && free(&pd)) as u64;
            counts[4] += (pd.is_empty() && free(&pc)) as u64;
        }
        assert_eq!(minimal_counts(&m, &GroundOrder::identity(n)), counts, "{}", e.name);
    }
}
