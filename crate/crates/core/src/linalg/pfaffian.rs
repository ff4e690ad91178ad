use std::collections::HashMap;

use crate::algebra::Ring;

use super::{LinalgError, RingMatrix, SkewMatrix};

/// Dimension above which rational Pfaffians switch to skew elimination.
const EXPANSION_LIMIT: usize = 14;

/// Exact Pfaffian. The empty matrix has Pfaffian 1 and odd dimensions give 0.
pub fn pfaffian<T: Ring>(a: &SkewMatrix<T>) -> T {
    let n = a.dim();
    if n % 2 == 1 {
        return T::zero();
    }
    match n {
        0 => T::one(),
        2 => a.upper_ref(0, 1).clone(),
        _ if T::CHEAP_DIVISION && n > EXPANSION_LIMIT => elimination(a),
        _ => {
            let idx: Vec<usize> = (0..n).collect();
            Expansion { a, memo: HashMap::new() }.pf(&idx, (1u64 << n) - 1)
        }
    }
}

/// Pfaffian of the principal submatrix on `idx`.
pub fn sub_pfaffian<T: Ring>(a: &SkewMatrix<T>, idx: &[usize]) -> Result<T, LinalgError> {
    if idx.len() % 2 == 1 {
        return Err(LinalgError::OddIndexSet(idx.len()));
    }
    Ok(pfaffian(&a.principal(idx)?))
}

/// `Pf(X A X^T)` for a `2n x N` matrix `X` and `N x N` skew `A`.
pub fn congruence_pfaffian<T: Ring>(x: &RingMatrix<T>, a: &SkewMatrix<T>) -> Result<T, LinalgError> {
    if x.cols() != a.dim() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{}x{} matrix against skew dimension {}",
            x.rows(),
            x.cols(),
            a.dim()
        )));
    }
    let xa = x.mul(&a.to_matrix())?;
    let prod = SkewMatrix::from_fn(x.rows(), |i, j| {
        let mut acc = T::zero();
        for k in 0..x.cols() {
            acc = acc.add(&xa.get(i, k).mul(x.get(j, k)));
        }
        acc
    });
    Ok(pfaffian(&prod))
}

/// First-row expansion memoized on the bitmask of remaining indices.
struct Expansion<'a, T> {
    a: &'a SkewMatrix<T>,
    memo: HashMap<u64, T>,
}

impl<T: Ring> Expansion<'_, T> {
    fn pf(&mut self, idx: &[usize], mask: u64) -> T {
        if mask == 0 {
            return T::one();
        }
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let mut rest = mask & !(1 << first);
        let mut acc = T::zero();
        let mut pos = 0;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let entry = self.a.upper_ref(idx[first], idx[j]);
            if !entry.is_zero() {
                let sub = self.pf(idx, mask & !(1 << first) & !(1 << j));
                if !sub.is_zero() {
                    let term = entry.mul(&sub);
                    acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            pos += 1;
        }
        self.memo.insert(mask, acc.clone());
        acc
    }
}

/// Congruence elimination: pivot on `a[k][k+1]`, clear the rest of rows
/// `k, k+1` by simultaneous row/column operations, multiply the pivots.
fn elimination<T: Ring>(a: &SkewMatrix<T>) -> T {
    let n = a.dim();
    let mut m: Vec<Vec<T>> = (0..n).map(|i| (0..n).map(|j| a.get(i, j)).collect()).collect();
    let mut result = T::one();
    for k in (0..n).step_by(2) {
        let Some(p) = (k + 1..n).find(|&j| !m[k][j].is_zero()) else {
            return T::zero();
        };
        if p != k + 1 {
            swap_index(&mut m, k + 1, p);
            result = result.neg();
        }
        let pivot = m[k][k + 1].clone();
        result = result.mul(&pivot);
        for i in k + 2..n {
            // index i -= (m[k][i]/pivot) * index (k+1)
            let t = m[k][i].exact_div(&pivot).expect("nonzero pivot");
            if !t.is_zero() {
                add_multiple(&mut m, i, k + 1, &t.neg());
            }
            // index i -= (m[k+1][i]/m[k+1][k]) * index k
            let t = m[k + 1][i].exact_div(&m[k + 1][k]).expect("nonzero pivot");
            if !t.is_zero() {
                add_multiple(&mut m, i, k, &t.neg());
            }
        }
    }
    result
}

fn swap_index<T>(m: &mut [Vec<T>], a: usize, b: usize) {
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Row `dst += t * row src` and the same on columns.
fn add_multiple<T: Ring>(m: &mut [Vec<T>], dst: usize, src: usize, t: &T) {
    let n = m.len();
    for j in 0..n {
        let v = m[src][j].mul(t);
        m[dst][j] = m[dst][j].add(&v);
    }
    for row in m.iter_mut().take(n) {
        let v = row[src].mul(t);
        row[dst] = row[dst].add(&v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, random_rational, seeded_rng, Polynomial, Rational};
    use crate::linalg::det;

    fn random_skew(dim: usize, seed: u64) -> SkewMatrix<Rational> {
        let mut rng = seeded_rng(seed);
        SkewMatrix::from_fn(dim, |_, _| random_rational(&mut rng, 7))
    }

    #[test]
    fn small_cases() {
        let t = SkewMatrix::from_fn(2, |_, _| rat(5));
        assert_eq!(pfaffian(&t), rat(5));
        assert_eq!(pfaffian(&SkewMatrix::<Rational>::zeros(0)), rat(1));
        assert_eq!(pfaffian(&random_skew(5, 1)), rat(0));
        let v = |i: u32| Polynomial::var(i);
        // indices of the six upper entries a12 a13 a14 a23 a24 a34
        let mut k = 0;
        let a = SkewMatrix::from_fn(4, |_, _| {
            k += 1;
            v(k - 1)
        });
        let expect = &(&(&v(0) * &v(5)) - &(&v(1) * &v(4))) + &(&v(2) * &v(3));
        assert_eq!(pfaffian(&a), expect);
    }

    #[test]
    fn square_is_determinant() {
        for (s, dim) in [2, 4, 6, 8].iter().cycle().take(40).enumerate() {
            let a = random_skew(*dim, s as u64);
            let pf = pfaffian(&a);
            assert_eq!(&pf * &pf, det(&a.to_matrix()).unwrap());
        }
    }

    #[test]
    fn elimination_matches_expansion() {
        for s in 0..20 {
            let mut a = random_skew(8, 100 + s);
            if s % 3 == 0 {
                a.set(0, 1, rat(0));
            }
            let idx: Vec<usize> = (0..8).collect();
            let e = Expansion { a: &a, memo: HashMap::new() }.pf(&idx, 255);
            assert_eq!(elimination(&a), e);
        }
        let a = random_skew(16, 3);
        let pf = pfaffian(&a);
        assert_eq!(&pf * &pf, det(&a.to_matrix()).unwrap());
    }

    #[test]
    fn sub_pfaffian_selection() {
        let a = random_skew(6, 9);
        assert_eq!(sub_pfaffian(&a, &[0, 1, 2, 3, 4, 5]).unwrap(), pfaffian(&a));
        assert_eq!(sub_pfaffian(&a, &[1, 4]).unwrap(), a.get(1, 4));
        assert_eq!(sub_pfaffian(&a, &[1, 2, 4]), Err(LinalgError::OddIndexSet(3)));
    }

    #[test]
    fn congruence_identity_and_zero_row() {
        let a = random_skew(4, 5);
        let id = RingMatrix::identity(4);
        assert_eq!(congruence_pfaffian(&id, &a).unwrap(), pfaffian(&a));
        let mut x = RingMatrix::from_fn(4, 4, |i, j| rat((i * 3 + j * j) as i64));
        for j in 0..4 {
            x.set(2, j, rat(0));
        }
        assert_eq!(congruence_pfaffian(&x, &a).unwrap(), rat(0));
    }
}
