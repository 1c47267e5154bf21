//! Rank oracle and the exact Tutte polynomial of the underlying matroid.

use serde::{Deserialize, Serialize};

use crate::om::OrientedMatroid;
use crate::signed::elements;

/// Rank of `set` by greedy growth of an independent set in ground order.
pub fn rank(m: &OrientedMatroid, set: u32) -> usize {
    let supports: Vec<u32> = m.circuits().iter().map(|c| c.support()).collect();
    let mut independent = 0u32;
    for e in elements(set & m.ground()) {
        let grown = independent | 1 << e;
        if !supports.iter().any(|&s| s & !grown == 0) {
            independent = grown;
        }
    }
    independent.count_ones() as usize
}

/// Ranks of all `2^n` subsets, indexed by subset word.
///
/// Greedy in ground order processes the largest element of `S` last, so the
/// greedy independent set of `S` extends that of `S` minus its largest element.
pub fn all_ranks(m: &OrientedMatroid) -> Vec<u8> {
    let n = m.n();
    let by_max: Vec<Vec<u32>> = (0..n)
        .map(|e| {
            m.circuits()
                .iter()
                .filter(|c| c.max_element() == Some(e))
                .map(|c| c.support())
                .collect()
        })
        .collect();
    let size = 1usize << n;
    let mut greedy = vec![0u32; size];
    let mut ranks = vec![0u8; size];
    for s in 1..size {
        let top = 31 - (s as u32).leading_zeros() as usize;
        let prev = greedy[s & !(1 << top)];
        let grown = prev | 1 << top;
        // only circuits whose largest element is `top` can appear in `grown`
        // without already appearing in `prev`
        let dependent = by_max[top].iter().any(|&c| c & !grown == 0);
        greedy[s] = if dependent { prev } else { grown };
        ranks[s] = greedy[s].count_ones() as u8;
    }
    ranks
}

/// Integer coefficients `t_ij` of `x^i y^j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuttePolynomial {
    pub rank: usize,
    /// Row `i` holds the coefficients of `x^i y^0, x^i y^1, ...`.
    pub coeffs: Vec<Vec<u64>>,
}

impl TuttePolynomial {
    /// `coeffs` is expected to be `(rank+1) x (nullity+1)`.
    pub fn new(rank: usize, coeffs: Vec<Vec<u64>>) -> Self {
        TuttePolynomial { rank, coeffs }
    }

    pub fn coeff(&self, i: usize, j: usize) -> u64 {
        self.coeffs.get(i).and_then(|row| row.get(j)).copied().unwrap_or(0)
    }

    pub fn evaluate(&self, x: i64, y: i64) -> i128 {
        let mut total = 0i128;
        let mut xp = 1i128;
        for row in &self.coeffs {
            let mut yp = 1i128;
            for &c in row {
                total += c as i128 * xp * yp;
                yp *= y as i128;
            }
            xp *= x as i128;
        }
        total
    }

    /// The five evaluations at `(1,1), (1,2), (2,1), (1,0), (0,1)`.
    pub fn standard_evaluations(&self) -> [u64; 5] {
        [(1, 1), (1, 2), (2, 1), (1, 0), (0, 1)].map(|(x, y)| self.evaluate(x, y) as u64)
    }

    /// `t(M*; x, y) = t(M; y, x)`, so this is the Tutte polynomial of the dual.
    pub fn swapped(&self) -> Self {
        let rows = self.coeffs.len();
        let cols = self.coeffs.first().map_or(0, |r| r.len());
        let coeffs = (0..cols).map(|j| (0..rows).map(|i| self.coeffs[i][j]).collect()).collect();
        TuttePolynomial { rank: cols.saturating_sub(1), coeffs }
    }
}

impl std::fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mono = |v: &str, p: usize| match p {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{p}"),
        };
        // descending x-degree, then ascending y-degree
        let mut terms = Vec::new();
        for i in (0..self.coeffs.len()).rev() {
            for (j, &c) in self.coeffs[i].iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let m = format!("{}{}", mono("x", i), mono("y", j));
                terms.push(match (c, m.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => m,
                    _ => format!("{c}{m}"),
                });
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn binomial_row(k: usize) -> Vec<i128> {
    let mut row = vec![1i128];
    for _ in 0..k {
        let mut next = vec![1i128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row
}

/// Converts a table of `(x-1)^i (y-1)^j` counts to monomial coefficients.
fn shift_basis(counts: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let rows = counts.len();
    let cols = counts.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0i128; cols]; rows];
    for i in 0..rows {
        let bi = binomial_row(i);
        for j in 0..cols {
            let c = counts[i][j];
            if c == 0 {
                continue;
            }
            let bj = binomial_row(j);
            // (x-1)^i = sum_a C(i,a) x^a (-1)^(i-a)
            for a in 0..=i {
                for b in 0..=j {
                    let sign = if (i - a + j - b) % 2 == 0 { 1 } else { -1 };
                    out[a][b] += sign * c * bi[a] * bj[b];
                }
            }
        }
    }
    out
}

/// Corank–nullity expansion over all subsets of the ground set.
pub fn tutte_polynomial(m: &OrientedMatroid) -> TuttePolynomial {
    let ranks = all_ranks(m);
    let full = m.rank();
    let nullity = m.n() - full;
    let mut counts = vec![vec![0i128; nullity + 1]; full + 1];
    for (s, &r) in ranks.iter().enumerate() {
        let r = r as usize;
        let size = (s as u32).count_ones() as usize;
        counts[full - r][size - r] += 1;
    }
    let coeffs = shift_basis(&counts)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| u64::try_from(c).expect("Tutte coefficients are nonnegative"))
                .collect()
        })
        .collect();
    TuttePolynomial { rank: full, coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::om::OrientedMatroid;

    /// Number of rank-sized independent subsets, by direct enumeration.
    fn brute_force_bases(m: &OrientedMatroid) -> u64 {
        (0..=m.ground())
            .filter(|&s| s.count_ones() as usize == m.rank() && rank(m, s) == m.rank())
            .count() as u64
    }

    fn poly(rank: usize, rows: &[&[u64]]) -> TuttePolynomial {
        TuttePolynomial::new(rank, rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn greedy_rank_examples() {
        let tri = OrientedMatroid::from_matrix("tri", &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(rank(&tri, 0b111), 2);
        let u24 = OrientedMatroid::uniform(2, 4).unwrap();
        assert_eq!(rank(&u24, 0b1), 1);
        let lp = OrientedMatroid::from_matrix("loop", &[vec![0]]).unwrap();
        assert_eq!(rank(&lp, 0b1), 0);
    }

    #[test]
    fn memoized_ranks_agree_with_greedy() {
        for m in [OrientedMatroid::uniform(3, 6).unwrap(), OrientedMatroid::uniform(2, 5).unwrap()] {
            let all = all_ranks(&m);
            for s in 0..=m.ground() {
                assert_eq!(all[s as usize] as usize, rank(&m, s));
            }
        }
    }

    #[test]
    fn known_polynomials() {
        // triangle: x^2 + x + y
        let tri = OrientedMatroid::from_matrix("tri", &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(tutte_polynomial(&tri), poly(2, &[&[0, 1], &[1, 0], &[1, 0]]));
        // U_{2,4}: x^2 + 2x + 2y + y^2
        let u24 = OrientedMatroid::uniform(2, 4).unwrap();
        assert_eq!(tutte_polynomial(&u24), poly(2, &[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]));
        // U_{2,5}: x^2 + 3x + 3y + 2y^2 + y^3
        let u25 = OrientedMatroid::uniform(2, 5).unwrap();
        assert_eq!(tutte_polynomial(&u25), poly(2, &[&[0, 3, 2, 1], &[3, 0, 0, 0], &[1, 0, 0, 0]]));
        assert_eq!(tutte_polynomial(&u25).to_string(), "x^2 + 3x + 3y + 2y^2 + y^3");
    }

    #[test]
    fn evaluations() {
        let u24 = tutte_polynomial(&OrientedMatroid::uniform(2, 4).unwrap());
        assert_eq!(u24.evaluate(1, 1), 6);
        assert_eq!(u24.evaluate(1, 0), 3);
        assert_eq!(u24.standard_evaluations(), [6, 11, 11, 3, 3]);
        let tri = tutte_polynomial(&OrientedMatroid::from_matrix("tri", &[vec![1, 0, 1], vec![0, 1, 1]]).unwrap());
        assert_eq!(tri.evaluate(2, 1), 7);
        assert_eq!(tri.evaluate(-1, 3), 3);
    }

    #[test]
    fn basis_count_and_duality() {
        for m in [
            OrientedMatroid::uniform(2, 4).unwrap(),
            OrientedMatroid::uniform(3, 6).unwrap(),
            OrientedMatroid::from_graph("k4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
            OrientedMatroid::from_matrix("lt", &[vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap(),
        ] {
            let t = tutte_polynomial(&m);
            assert_eq!(t.evaluate(1, 1) as u64, brute_force_bases(&m), "{}", m.name());
            assert_eq!(tutte_polynomial(&m.dual()), t.swapped(), "{}", m.name());
        }
    }

    #[test]
    fn loops_and_coloops_factor() {
        let lp = tutte_polynomial(&OrientedMatroid::from_matrix("loop", &[vec![0]]).unwrap());
        assert_eq!(lp, poly(0, &[&[0, 1]]));
        let coloop = tutte_polynomial(&OrientedMatroid::uniform(1, 1).unwrap());
        assert_eq!(coloop, poly(1, &[&[0], &[1]]));
        let with_loop = OrientedMatroid::from_matrix("lt", &[vec![0, 1, 0, 1], vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(tutte_polynomial(&with_loop).evaluate(1, 0), 0);
        let empty = tutte_polynomial(&OrientedMatroid::uniform(0, 0).unwrap());
        assert_eq!(empty.evaluate(5, 7), 1);
    }
}
