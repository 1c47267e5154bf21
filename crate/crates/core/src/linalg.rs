//! Exact fraction-free integer linear algebra.
//!
//! Elimination is Bareiss-style: every intermediate entry is a minor of the
//! input, so divisions are exact. Computations run over `i128` with checked
//! arithmetic and are redone over `BigInt` when a step overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) trait ExactInt: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> i8;
    fn neg(&self) -> Self;
    /// `a * b - c * d`
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn div_exact(&self, d: &Self) -> Self;
    fn to_big(&self) -> BigInt;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i8 {
        i128::signum(*self) as i8
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn div_exact(&self, d: &Self) -> Self {
        debug_assert_eq!(self % d, 0);
        self / d
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum(&self) -> i8 {
        if Signed::is_positive(self) {
            1
        } else if Signed::is_negative(self) {
            -1
        } else {
            0
        }
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn div_exact(&self, d: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % d)));
        self / d
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: ExactInt> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Mat::from_fn(self.rows, cols.len(), |i, j| self.at(i, cols[j]).clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

/// Result of fraction-free forward elimination.
#[derive(Debug, Clone)]
pub(crate) struct Echelon<T> {
    /// Row echelon form; rows `rank..` are zero. Spans the input row space.
    pub mat: Mat<T>,
    pub pivots: Vec<usize>,
    /// Number of row swaps performed.
    pub swaps: usize,
}

impl<T> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Bareiss elimination with column skipping. `None` on overflow.
pub(crate) fn echelon<T: ExactInt>(mut m: Mat<T>) -> Option<Echelon<T>> {
    let mut prev = T::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            m.swap_rows(p, r);
            swaps += 1;
        }
        let pivot = m.at(r, c).clone();
        for i in r + 1..m.rows {
            let lead = m.at(i, c).clone();
            for j in c + 1..m.cols {
                let v = T::mul_sub(&pivot, m.at(i, j), &lead, m.at(r, j))?;
                m.data[i * m.cols + j] = v.div_exact(&prev);
            }
            m.data[i * m.cols + c] = T::zero();
        }
        // Entries left of the pivot column in row r are already zero, rows
        // above r keep their values.
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Some(Echelon { mat: m, pivots, swaps })
}

pub(crate) fn determinant<T: ExactInt>(m: Mat<T>) -> Option<T> {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Some(T::one());
    }
    let e = echelon(m)?;
    if e.rank() < n {
        return Some(T::zero());
    }
    let d = e.mat.at(n - 1, n - 1).clone();
    Some(if e.swaps % 2 == 1 { d.neg() } else { d })
}

/// Kernel vector of an `r x (r+1)` matrix of full row rank, by signed
/// maximal minors: `x_j = (-1)^j det(B without column j)`.
pub(crate) fn cross_kernel<T: ExactInt>(b: &Mat<T>) -> Option<Vec<T>> {
    assert_eq!(b.cols, b.rows + 1);
    let mut out = Vec::with_capacity(b.cols);
    for j in 0..b.cols {
        let keep: Vec<usize> = (0..b.cols).filter(|&c| c != j).collect();
        let d = determinant(b.select_columns(&keep))?;
        out.push(if j % 2 == 1 { d.neg() } else { d });
    }
    Some(out)
}

/// Integer matrix stored exactly, with an `i128` shadow when every entry fits.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct IntMatrix {
    big: Mat<BigInt>,
    small: Option<Mat<i128>>,
}

/// What column-subset analysis found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum ColumnSubset {
    Independent,
    /// Corank one: the signs of the (unique up to scale) kernel vector.
    Circuit(Vec<i8>),
    /// Dependent with corank above one, so not inclusion-minimal.
    Redundant,
}

impl IntMatrix {
    pub fn from_rows(rows: usize, cols: usize, entries: impl Fn(usize, usize) -> BigInt) -> Self {
        let big = Mat::from_fn(rows, cols, entries);
        let small = big
            .data
            .iter()
            .map(|v| v.to_i128())
            .collect::<Option<Vec<_>>>()
            .map(|data| Mat { rows, cols, data });
        IntMatrix { big, small }
    }

    pub fn cols(&self) -> usize {
        self.big.cols
    }

    fn run<R>(&self, f: impl Fn(&Mat<i128>) -> Option<R>, g: impl Fn(&Mat<BigInt>) -> Option<R>) -> R {
        if let Some(r) = self.small.as_ref().and_then(&f) {
            return r;
        }
        g(&self.big).expect("BigInt arithmetic cannot overflow")
    }

    pub fn rank(&self) -> usize {
        self.run(|m| echelon(m.clone()).map(|e| e.rank()), |m| echelon(m.clone()).map(|e| e.rank()))
    }

    pub fn analyze_columns(&self, cols: &[usize]) -> ColumnSubset {
        self.run(|m| analyze(m, cols), |m| analyze(m, cols))
    }

    /// Integer basis of the right kernel, one vector per non-pivot column,
    /// each divided by the gcd of its entries.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        let vecs = self.run(
            |m| kernel(m).map(|vs| vs.into_iter().map(|v| v.iter().map(|x| x.to_big()).collect()).collect()),
            kernel,
        );
        vecs.into_iter().map(primitive).collect()
    }
}

fn analyze<T: ExactInt>(m: &Mat<T>, cols: &[usize]) -> Option<ColumnSubset> {
    let k = cols.len();
    let e = echelon(m.select_columns(cols))?;
    let rank = e.rank();
    if rank == k {
        return Some(ColumnSubset::Independent);
    }
    if rank + 1 < k {
        return Some(ColumnSubset::Redundant);
    }
    let b = Mat::from_fn(rank, k, |i, j| e.mat.at(i, j).clone());
    let x = cross_kernel(&b)?;
    Some(ColumnSubset::Circuit(x.iter().map(|v| v.signum()).collect()))
}

fn kernel<T: ExactInt>(m: &Mat<T>) -> Option<Vec<Vec<T>>> {
    let e = echelon(m.clone())?;
    let r = e.rank();
    let mut out = Vec::new();
    for f in 0..m.cols {
        if e.pivots.contains(&f) {
            continue;
        }
        let mut cols = e.pivots.clone();
        cols.push(f);
        cols.sort_unstable();
        let b = Mat::from_fn(r, r + 1, |i, j| e.mat.at(i, cols[j]).clone());
        let x = cross_kernel(&b)?;
        let mut v = vec![T::zero(); m.cols];
        for (j, &c) in cols.iter().enumerate() {
            v[c] = x[j].clone();
        }
        out.push(v);
    }
    Some(out)
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(<BigInt as Zero>::zero(), |g, x| g.gcd(x));
    if Zero::is_zero(&g) || One::is_one(&g) {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}
