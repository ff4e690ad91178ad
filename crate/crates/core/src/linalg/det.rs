use crate::algebra::Ring;

use super::{LinalgError, RingMatrix};

/// Largest dimension handled by memoized cofactor expansion when division in
/// the scalar ring is expensive.
const EXPANSION_LIMIT: usize = 12;

/// Exact determinant.
///
/// Rationals use Bareiss elimination. Polynomial-like scalars use cofactor
/// expansion memoized on column subsets up to dimension 12 (division free),
/// and Bareiss with exact division beyond that.
pub fn det<T: Ring>(m: &RingMatrix<T>) -> Result<T, LinalgError> {
    if m.rows() != m.cols() {
        return Err(LinalgError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    Ok(match n {
        0 => T::one(),
        1 => m.get(0, 0).clone(),
        2 => m.get(0, 0).mul(m.get(1, 1)).sub(&m.get(0, 1).mul(m.get(1, 0))),
        _ if T::CHEAP_DIVISION || n > EXPANSION_LIMIT => bareiss(m),
        _ => expansion(m),
    })
}

/// `dp[S]` holds the determinant of rows `0..|S|` restricted to columns `S`;
/// each layer expands along its last row.
fn expansion<T: Ring>(m: &RingMatrix<T>) -> T {
    let n = m.rows();
    let full = (1usize << n) - 1;
    let mut dp: Vec<Option<T>> = vec![None; 1 << n];
    dp[0] = Some(T::one());
    let mut layer = vec![0usize];
    for k in 0..n {
        let mut next = Vec::new();
        for &mask in &layer {
            let Some(sub) = dp[mask].clone() else { continue };
            if sub.is_zero() {
                continue;
            }
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let a = m.get(k, j);
                if a.is_zero() {
                    continue;
                }
                let bigger = (mask >> j).count_ones();
                let mut term = a.mul(&sub);
                if bigger % 2 == 1 {
                    term = term.neg();
                }
                let target = mask | (1 << j);
                match &mut dp[target] {
                    Some(acc) => *acc = acc.add(&term),
                    slot @ None => {
                        *slot = Some(term);
                        next.push(target);
                    }
                }
            }
        }
        for &mask in &layer {
            if mask != full {
                dp[mask] = None;
            }
        }
        layer = next;
    }
    dp[full].take().unwrap_or_else(T::zero)
}

fn bareiss<T: Ring>(m: &RingMatrix<T>) -> T {
    let n = m.rows();
    let mut a: Vec<Vec<T>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step divides exactly by the previous pivot");
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, random_rational, seeded_rng, Polynomial, RatFunc, Rational};

    /// Leibniz formula over all permutations.
    fn leibniz<T: Ring>(m: &RingMatrix<T>) -> T {
        fn go<T: Ring>(m: &RingMatrix<T>, row: usize, used: &mut Vec<bool>, sign: bool, acc: T, out: &mut T) {
            let n = m.rows();
            if row == n {
                *out = out.add(&if sign { acc.neg() } else { acc });
                return;
            }
            for j in 0..n {
                if used[j] {
                    continue;
                }
                let flips = used[j + 1..].iter().filter(|&&u| u).count() % 2 == 1;
                used[j] = true;
                go(m, row + 1, used, sign ^ flips, acc.mul(m.get(row, j)), out);
                used[j] = false;
            }
        }
        let mut out = T::zero();
        go(m, 0, &mut vec![false; m.rows()], false, T::one(), &mut out);
        out
    }

    #[test]
    fn identity_and_nonsquare() {
        for n in 0..6 {
            assert_eq!(det(&RingMatrix::<Rational>::identity(n)).unwrap(), rat(1));
        }
        let m = RingMatrix::<Rational>::zeros(2, 3);
        assert_eq!(det(&m), Err(LinalgError::NonSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let mut rng = seeded_rng(11);
        for _ in 0..200 {
            let m = RingMatrix::from_fn(5, 5, |_, _| random_rational(&mut rng, 9));
            assert_eq!(det(&m).unwrap(), leibniz(&m));
        }
    }

    #[test]
    fn zero_pivots_are_swapped() {
        let m = RingMatrix::from_rows(vec![
            vec![rat(0), rat(1), rat(2)],
            vec![rat(0), rat(3), rat(4)],
            vec![rat(5), rat(6), rat(0)],
        ])
        .unwrap();
        assert_eq!(det(&m).unwrap(), leibniz(&m));
    }

    #[test]
    fn symbolic_routes_agree() {
        let m = RingMatrix::from_fn(4, 4, |i, j| {
            let x = Polynomial::var(i as u32);
            Ring::pow(&x, j as u32)
        });
        let e = det(&m).unwrap();
        assert_eq!(e, leibniz(&m));
        assert_eq!(e, bareiss(&m));
        let r = m.map(|p| RatFunc::from_poly(p.clone()));
        assert_eq!(det(&r).unwrap(), RatFunc::from_poly(e));
    }
}
