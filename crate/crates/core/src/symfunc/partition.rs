use std::fmt;
use std::str::FromStr;

use crate::linalg::IndexSet;

use super::SymfuncError;

/// Integer partition with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, SymfuncError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymfuncError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `□(a, b)`: `a` rows of length `b`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if b == 0 {
            Self::empty()
        } else {
            Partition(vec![b; a])
        }
    }

    /// `δ(k) = (k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` for 1-based `i`, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(1);
        Partition((1..=width).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Length of the main diagonal, `p(λ)`.
    pub fn diagonal(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &p)| p > i).count()
    }

    /// Frobenius arms `λ_i - i` and legs `λ'_i - i` (1-based `i ≤ p(λ)`).
    pub fn frobenius(&self) -> (Vec<usize>, Vec<usize>) {
        let d = self.diagonal();
        let conj = self.conjugate();
        let arms = (1..=d).map(|i| self.part(i) - i).collect();
        let legs = (1..=d).map(|i| conj.part(i) - i).collect();
        (arms, legs)
    }

    /// Inverse of [`Partition::frobenius`]; both lists strictly decreasing.
    pub fn from_frobenius(arms: &[usize], legs: &[usize]) -> Result<Self, SymfuncError> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strict(arms) || !strict(legs) {
            return Err(SymfuncError::BadFrobenius);
        }
        let p = arms.len();
        let mut parts: Vec<usize> = (0..p).map(|i| arms[i] + i + 1).collect();
        let depth = legs.first().map_or(0, |&b| b + 1);
        for i in p + 1..=depth {
            parts.push((1..=p).filter(|&j| legs[j - 1] + j >= i).count());
        }
        Partition::new(parts)
    }

    /// Componentwise `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(1) <= cols
    }

    /// `λ†(a, b)_i = b - λ_{a+1-i}`.
    pub fn complement(&self, a: usize, b: usize) -> Result<Self, SymfuncError> {
        if !self.fits_in(a, b) {
            return Err(SymfuncError::NotInBox { shape: self.clone(), rows: a, cols: b });
        }
        Partition::new((1..=a).map(|i| b - self.part(a + 1 - i)).collect())
    }

    /// `I(λ) = {λ_r, λ_{r-1} + 1, ..., λ_1 + r - 1}`.
    pub fn index_set(&self, r: usize) -> Result<IndexSet, SymfuncError> {
        if self.len() > r {
            return Err(SymfuncError::TooLong { shape: self.clone(), max: r });
        }
        Ok(IndexSet::new((1..=r).map(|i| self.part(r + 1 - i) + i - 1).collect())
            .expect("index set of a partition increases"))
    }

    /// All partitions fitting in `rows x cols`, in reverse lexicographic order
    /// of their parts starting from the empty partition.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn go(row: usize, rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).unwrap());
            if row == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                go(row + 1, rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, rows, cols, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0)));
        out
    }

    /// All partitions of `n`.
    pub fn of_size(n: usize) -> Vec<Partition> {
        Self::all_in_box(n, n).into_iter().filter(|p| p.size() == n).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = SymfuncError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SymfuncError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, SymfuncError> {
        if !outer.contains(&inner) {
            return Err(SymfuncError::ShapeInvalid { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(row, col)`, 1-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.outer.len() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push((i, j));
            }
        }
        out
    }

    /// At most one cell in each column.
    pub fn is_horizontal_strip(&self) -> bool {
        (2..=self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i - 1))
    }

    /// At most one cell in each row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.outer.len()).all(|i| self.outer.part(i) <= self.inner.part(i) + 1)
    }
}
