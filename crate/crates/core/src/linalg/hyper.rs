use std::collections::HashMap;

use num_bigint::BigInt;

use crate::algebra::{Rational, Ring};

use super::{sub_pfaffian, LinalgError, SkewMatrix};

/// Largest `n * r` accepted by [`hyperpfaffian`].
pub const MAX_HYPER_DIM: usize = 12;

/// Alternating `n`-tensor on `dim` indices, stored on increasing tuples.
#[derive(Debug, Clone)]
pub struct AlternatingTensor<T> {
    order: usize,
    dim: usize,
    values: HashMap<Vec<usize>, T>,
}

impl<T: Ring> AlternatingTensor<T> {
    /// Evaluates `f` on every increasing `order`-tuple of `0..dim`.
    pub fn from_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> T) -> Self {
        let mut values = HashMap::new();
        for tuple in combinations(dim, order) {
            let v = f(&tuple);
            if !v.is_zero() {
                values.insert(tuple, v);
            }
        }
        AlternatingTensor { order, dim, values }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at an arbitrary index tuple, with the permutation sign applied.
    pub fn get(&self, idx: &[usize]) -> T {
        let mut sorted = idx.to_vec();
        let mut odd = false;
        // insertion sort, counting transpositions
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return T::zero();
        }
        match self.values.get(&sorted) {
            Some(v) if odd => v.neg(),
            Some(v) => v.clone(),
            None => T::zero(),
        }
    }
}

/// All increasing `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Permutations of `0..n*r` whose consecutive length-`n` blocks are
/// increasing, listed as one-line words, each with its sign (true = odd).
pub fn block_permutations(n: usize, r: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    walk_blocks(n, (0..n * r).collect(), false, &mut Vec::new(), false, &mut |w, odd| {
        out.push((w.to_vec(), odd))
    });
    out
}

/// Enumerates ordered block decompositions of `remaining`. With `canonical`
/// set, each block must contain the smallest remaining letter, which picks
/// one ordering of the blocks.
fn walk_blocks(
    n: usize,
    remaining: Vec<usize>,
    canonical: bool,
    word: &mut Vec<usize>,
    odd: bool,
    visit: &mut dyn FnMut(&[usize], bool),
) {
    if remaining.is_empty() {
        visit(word, odd);
        return;
    }
    let m = remaining.len();
    let choices = if canonical {
        combinations(m - 1, n - 1).into_iter().map(|c| {
            let mut b = vec![0];
            b.extend(c.into_iter().map(|i| i + 1));
            b
        }).collect()
    } else {
        combinations(m, n)
    };
    for block in choices {
        // inversions between the block and the letters placed after it
        let mut inv = 0;
        for (t, &pos) in block.iter().enumerate() {
            inv += pos - t;
        }
        let chosen: Vec<usize> = block.iter().map(|&p| remaining[p]).collect();
        let rest: Vec<usize> = remaining
            .iter()
            .enumerate()
            .filter(|(p, _)| !block.contains(p))
            .map(|(_, &v)| v)
            .collect();
        let len = word.len();
        word.extend_from_slice(&chosen);
        walk_blocks(n, rest, canonical, word, odd ^ (inv % 2 == 1), visit);
        word.truncate(len);
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// `Pf^[n](t) = (1/r!) * sum over block permutations of sign * product of
/// block entries`, where `t.dim() = n * r`.
pub fn hyperpfaffian<T: Ring>(t: &AlternatingTensor<T>) -> Result<T, LinalgError> {
    let (n, dim) = (t.order, t.dim);
    if n == 0 || dim % n != 0 {
        return Err(LinalgError::DimNotDivisible { dim, order: n });
    }
    if dim > MAX_HYPER_DIM {
        return Err(LinalgError::TooLarge(dim));
    }
    let r = dim / n;
    // For even n the r! block orderings all carry the same sign, so summing
    // one representative per orbit is the same as dividing by r!.
    let canonical = n % 2 == 0;
    let mut acc = T::zero();
    walk_blocks(n, (0..dim).collect(), canonical, &mut Vec::new(), false, &mut |w, odd| {
        let mut term = T::one();
        for block in w.chunks(n) {
            let v = t.get(block);
            if v.is_zero() {
                return;
            }
            term = term.mul(&v);
        }
        acc = if odd { acc.sub(&term) } else { acc.add(&term) };
    });
    if !canonical {
        acc = acc.scale(&Rational::new(BigInt::from(1), factorial(r)));
    }
    Ok(acc)
}

/// The tensor `(i_1..i_n) -> Pf(a restricted to i_1..i_n)`.
pub fn blocked_tensor<T: Ring>(a: &SkewMatrix<T>, n: usize) -> Result<AlternatingTensor<T>, LinalgError> {
    if n % 2 == 1 {
        return Err(LinalgError::OddOrder(n));
    }
    if n == 0 || !a.dim().is_multiple_of(n) {
        return Err(LinalgError::DimNotDivisible { dim: a.dim(), order: n });
    }
    Ok(AlternatingTensor::from_fn(n, a.dim(), |idx| {
        sub_pfaffian(a, idx).expect("even in-range tuple")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, random_rational, seeded_rng};
    use crate::linalg::pfaffian;

    #[test]
    fn six_block_permutations_of_four() {
        let e = block_permutations(2, 2);
        let words: Vec<Vec<usize>> = e.iter().map(|(w, _)| w.iter().map(|i| i + 1).collect()).collect();
        let expect = [
            [1, 2, 3, 4],
            [1, 3, 2, 4],
            [1, 4, 2, 3],
            [2, 3, 1, 4],
            [2, 4, 1, 3],
            [3, 4, 1, 2],
        ];
        assert_eq!(words.len(), 6);
        for w in expect {
            assert!(words.contains(&w.to_vec()));
        }
        let odd: Vec<bool> = e.iter().map(|(_, o)| *o).collect();
        assert_eq!(odd.iter().filter(|&&o| o).count(), 2);
    }

    #[test]
    fn single_block_is_the_entry() {
        let t = AlternatingTensor::from_fn(3, 3, |_| rat(7));
        assert_eq!(hyperpfaffian(&t).unwrap(), rat(7));
        assert_eq!(t.get(&[1, 0, 2]), rat(-7));
        assert_eq!(t.get(&[1, 1, 2]), rat(0));
    }

    #[test]
    fn order_two_is_the_pfaffian() {
        let mut rng = seeded_rng(4);
        let a = SkewMatrix::from_fn(6, |_, _| random_rational(&mut rng, 9));
        let t = blocked_tensor(&a, 2).unwrap();
        assert_eq!(hyperpfaffian(&t).unwrap(), pfaffian(&a));
    }

    #[test]
    fn odd_order_uses_full_enumeration() {
        // n = 3, r = 2: the two block orders cancel for any tensor
        let mut rng = seeded_rng(8);
        let t = AlternatingTensor::from_fn(3, 6, |_| random_rational(&mut rng, 5));
        assert_eq!(hyperpfaffian(&t).unwrap(), rat(0));
    }

    #[test]
    fn errors() {
        let t = AlternatingTensor::from_fn(2, 5, |_| rat(1));
        assert!(matches!(hyperpfaffian(&t), Err(LinalgError::DimNotDivisible { .. })));
        let big = AlternatingTensor::from_fn(2, 14, |_| rat(1));
        assert_eq!(hyperpfaffian(&big).unwrap_err(), LinalgError::TooLarge(14));
        let a = SkewMatrix::<Rational>::zeros(6);
        assert_eq!(blocked_tensor(&a, 3).unwrap_err(), LinalgError::OddOrder(3));
    }
}
