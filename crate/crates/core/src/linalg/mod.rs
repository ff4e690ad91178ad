//! Dense matrices over any [`Ring`], with exact determinants, Pfaffians,
//! minors and hyperpfaffians.

mod det;
mod hyper;
mod pfaffian;

use std::ops::Deref;

use crate::algebra::Ring;

pub use det::det;
pub(crate) use hyper::combinations;
pub use hyper::{block_permutations, blocked_tensor, hyperpfaffian, AlternatingTensor, MAX_HYPER_DIM};
pub use pfaffian::{congruence_pfaffian, pfaffian, sub_pfaffian};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, not square")]
    NonSquare { rows: usize, cols: usize },
    #[error("index {index} out of bounds for size {bound}")]
    IndexOutOfBounds { index: usize, bound: usize },
    #[error("index set has odd size {0}")]
    OddIndexSet(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("dimension {dim} is not divisible by order {order}")]
    DimNotDivisible { dim: usize, order: usize },
    #[error("tensor order {0} must be even")]
    OddOrder(usize),
    #[error("index list is not strictly increasing")]
    NotIncreasing,
    #[error("hyperpfaffian dimension {0} exceeds the enumeration cap")]
    TooLarge(usize),
}

/// Strictly increasing list of 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self, LinalgError> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LinalgError::NotIncreasing);
        }
        Ok(IndexSet(indices))
    }

    pub fn range(n: usize) -> Self {
        IndexSet((0..n).collect())
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for IndexSet {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RingMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Ring> RingMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RingMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(RingMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> RingMatrix<U> {
        RingMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        }))
    }

    /// The submatrix on the given rows and columns, in the order given.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<Self, LinalgError> {
        check_bounds(rows, self.rows)?;
        check_bounds(cols, self.cols)?;
        Ok(Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone()))
    }

    /// Determinant of the selected square submatrix.
    pub fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Result<T, LinalgError> {
        det(&self.minor(rows, cols)?)
    }
}

fn check_bounds(idx: &[usize], bound: usize) -> Result<(), LinalgError> {
    match idx.iter().find(|&&i| i >= bound) {
        Some(&index) => Err(LinalgError::IndexOutOfBounds { index, bound }),
        None => Ok(()),
    }
}

/// Skew-symmetric matrix stored as its strict upper triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix<T> {
    dim: usize,
    upper: Vec<T>,
}

impl<T: Ring> SkewMatrix<T> {
    /// Builds from `f(i, j)` for `i < j`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut upper = Vec::with_capacity(dim * dim.saturating_sub(1) / 2);
        for i in 0..dim {
            for j in i + 1..dim {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { dim, upper }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| T::zero())
    }

    /// Reads the upper triangle of a square matrix; the rest is ignored.
    pub fn from_upper(m: &RingMatrix<T>) -> Result<Self, LinalgError> {
        if m.rows() != m.cols() {
            return Err(LinalgError::NonSquare { rows: m.rows(), cols: m.cols() });
        }
        Ok(Self::from_fn(m.rows(), |i, j| m.get(i, j).clone()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        // offset of row i in the packed triangle, then column
        i * (2 * self.dim - i - 1) / 2 + (j - i - 1)
    }

    /// Entry `(i, j)` with antisymmetry applied.
    pub fn get(&self, i: usize, j: usize) -> T {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => T::zero(),
            Less => self.upper[self.slot(i, j)].clone(),
            Greater => self.upper[self.slot(j, i)].neg(),
        }
    }

    pub(crate) fn upper_ref(&self, i: usize, j: usize) -> &T {
        &self.upper[self.slot(i, j)]
    }

    /// Sets `(i, j)` for `i < j` (and so `(j, i)` to the negative).
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        if i < j {
            let s = self.slot(i, j);
            self.upper[s] = value;
        } else if j < i {
            let s = self.slot(j, i);
            self.upper[s] = value.neg();
        }
    }

    pub fn to_matrix(&self) -> RingMatrix<T> {
        RingMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j))
    }

    /// Principal submatrix on `idx` (taken in the given order).
    pub fn principal(&self, idx: &[usize]) -> Result<Self, LinalgError> {
        check_bounds(idx, self.dim)?;
        Ok(Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Rational};

    #[test]
    fn skew_storage_is_antisymmetric() {
        let a = SkewMatrix::from_fn(4, |i, j| rat((10 * i + j) as i64));
        for i in 0..4 {
            assert_eq!(a.get(i, i), rat(0));
            for j in 0..4 {
                assert_eq!(a.get(i, j), -a.get(j, i));
            }
        }
        assert_eq!(a.get(1, 3), rat(13));
    }

    #[test]
    fn minor_selection() {
        let m = RingMatrix::from_fn(3, 4, |i, j| rat((i * 4 + j) as i64));
        assert_eq!(m.minor(&[0, 1, 2], &[0, 1, 2, 3]).unwrap(), m);
        assert_eq!(m.minor(&[0], &[0]).unwrap().entries(), &[rat(0)]);
        assert_eq!(m.minor(&[2], &[1, 3]).unwrap().entries(), &[rat(9), rat(11)]);
        assert!(matches!(m.minor(&[3], &[0]), Err(LinalgError::IndexOutOfBounds { .. })));
    }

    #[test]
    fn index_set_must_increase() {
        assert!(IndexSet::new(vec![0, 2, 5]).is_ok());
        assert_eq!(IndexSet::new(vec![1, 1]), Err(LinalgError::NotIncreasing));
        let m: RingMatrix<Rational> = RingMatrix::identity(3);
        assert_eq!(m.mul(&m).unwrap(), m);
    }
}
