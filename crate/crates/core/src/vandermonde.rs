//! Generalized Vandermonde matrices and the signed partition sums built from
//! their exponent-shifted variants.

use crate::algebra::{sign, Ring};
use crate::linalg::{det, RingMatrix};
use crate::symfunc::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VandermondeError {
    #[error("expected {expected} values for {what}, got {got}")]
    LengthMismatch { what: &'static str, expected: usize, got: usize },
    #[error("{shape} has more than {max} parts")]
    PartitionTooLong { shape: Partition, max: usize },
}

fn check_len<T>(what: &'static str, v: &[T], expected: usize) -> Result<(), VandermondeError> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(VandermondeError::LengthMismatch { what, expected, got: v.len() })
    }
}

/// `V^{p,q}(x;a)`: row `i` is `(1, x_i, ..., x_i^{p-1}, a_i, a_i x_i, ..., a_i x_i^{q-1})`.
pub fn build_v<T: Ring>(p: usize, q: usize, xs: &[T], a: &[T]) -> Result<RingMatrix<T>, VandermondeError> {
    build_v_shifted(p, q, &Partition::empty(), &Partition::empty(), xs, a)
}

pub fn det_v<T: Ring>(p: usize, q: usize, xs: &[T], a: &[T]) -> Result<T, VandermondeError> {
    Ok(det(&build_v(p, q, xs, a)?).expect("square"))
}

/// `W^n(x;a)`: column `j` (0-based) is `x_i^j + a_i x_i^{n-1-j}`.
pub fn build_w<T: Ring>(n: usize, xs: &[T], a: &[T]) -> Result<RingMatrix<T>, VandermondeError> {
    check_len("x", xs, n)?;
    check_len("a", a, n)?;
    let pows: Vec<Vec<T>> = xs.iter().map(|x| powers(x, n)).collect();
    Ok(RingMatrix::from_fn(n, n, |i, j| pows[i][j].add(&a[i].mul(&pows[i][n - 1 - j]))))
}

pub fn det_w<T: Ring>(n: usize, xs: &[T], a: &[T]) -> Result<T, VandermondeError> {
    Ok(det(&build_w(n, xs, a)?).expect("square"))
}

/// `U^{p,q}(x,y;a,b)`: row `i` is `(a_i x_i^{p-1-k} y_i^k)_{k<p}` followed by
/// `(b_i x_i^{q-1-k} y_i^k)_{k<q}`.
pub fn build_u<T: Ring>(
    p: usize,
    q: usize,
    xs: &[T],
    ys: &[T],
    a: &[T],
    b: &[T],
) -> Result<RingMatrix<T>, VandermondeError> {
    let n = p + q;
    for (what, v) in [("x", xs), ("y", ys), ("a", a), ("b", b)] {
        check_len(what, v, n)?;
    }
    let top = p.max(q);
    let xp: Vec<Vec<T>> = xs.iter().map(|x| powers(x, top)).collect();
    let yp: Vec<Vec<T>> = ys.iter().map(|y| powers(y, top)).collect();
    Ok(RingMatrix::from_fn(n, n, |i, j| {
        let (coef, deg, k) = if j < p { (&a[i], p, j) } else { (&b[i], q, j - p) };
        coef.mul(&xp[i][deg - 1 - k]).mul(&yp[i][k])
    }))
}

pub fn det_u<T: Ring>(p: usize, q: usize, xs: &[T], ys: &[T], a: &[T], b: &[T]) -> Result<T, VandermondeError> {
    Ok(det(&build_u(p, q, xs, ys, a, b)?).expect("square"))
}

/// `V^{p,q}_{λ,μ}(x;a)`: the first `p` columns are `x_i^k` for `k ∈ I_p(λ)`,
/// the last `q` are `a_i x_i^k` for `k ∈ I_q(μ)`.
pub fn build_v_shifted<T: Ring>(
    p: usize,
    q: usize,
    lam: &Partition,
    mu: &Partition,
    xs: &[T],
    a: &[T],
) -> Result<RingMatrix<T>, VandermondeError> {
    let n = p + q;
    check_len("x", xs, n)?;
    check_len("a", a, n)?;
    for (shape, max) in [(lam, p), (mu, q)] {
        if shape.len() > max {
            return Err(VandermondeError::PartitionTooLong { shape: shape.clone(), max });
        }
    }
    let mut cols: Vec<(bool, usize)> = Vec::with_capacity(n);
    cols.extend(lam.index_set(p).unwrap().iter().map(|&k| (false, k)));
    cols.extend(mu.index_set(q).unwrap().iter().map(|&k| (true, k)));
    let top = cols.iter().map(|&(_, k)| k + 1).max().unwrap_or(0);
    let pows: Vec<Vec<T>> = xs.iter().map(|x| powers(x, top)).collect();
    Ok(RingMatrix::from_fn(n, n, |i, j| {
        let (scaled, k) = cols[j];
        if scaled {
            a[i].mul(&pows[i][k])
        } else {
            pows[i][k].clone()
        }
    }))
}

fn powers<T: Ring>(x: &T, count: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(count);
    let mut cur = T::one();
    for _ in 0..count {
        out.push(cur.clone());
        cur = cur.mul(x);
    }
    out
}

/// Frobenius-shape families indexing the partition sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `(α | α+1)` with `α_1 + 2 ≤ n`.
    P,
    /// `(α+1 | α)` with length at most `n`.
    Q,
    /// `(α | α)` with length at most `n`.
    R,
}

/// Members of the family, generated from every strictly decreasing arm list
/// allowed by the bound. Ordered by size, then by parts.
pub fn partition_family(fam: Family, n: usize) -> Vec<Partition> {
    // largest allowed arm entry plus one
    let arm_bound = match fam {
        Family::P => n.saturating_sub(1),
        Family::Q | Family::R => n,
    };
    let mut out = Vec::new();
    for mask in 0u32..(1 << arm_bound) {
        let alpha: Vec<usize> = (0..arm_bound).rev().filter(|&i| mask & (1 << i) != 0).collect();
        let (arms, legs): (Vec<usize>, Vec<usize>) = match fam {
            Family::P => (alpha.clone(), alpha.iter().map(|a| a + 1).collect()),
            Family::Q => (alpha.iter().map(|a| a + 1).collect(), alpha.clone()),
            Family::R => (alpha.clone(), alpha.clone()),
        };
        out.push(Partition::from_frobenius(&arms, &legs).expect("strict arm list"));
    }
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumTag {
    F,
    G,
    H,
}

/// Sign exponent attached to a family member in the partition sums.
fn weight(tag: SumTag, lam: &Partition) -> usize {
    match tag {
        SumTag::F | SumTag::G => lam.size() / 2,
        SumTag::H => {
            let t = lam.size() + lam.diagonal();
            assert!(t.is_multiple_of(2), "|λ| + p(λ) is odd for {lam}");
            t / 2
        }
    }
}

/// `F^{p,q}`, `G^{p,q}` or `H^{p,q}`: the signed sum of `det V^{p,q}_{λ,μ}`
/// over the `P`, `Q` or `R` family respectively.
pub fn fgh_sum<T: Ring>(tag: SumTag, p: usize, q: usize, xs: &[T], a: &[T]) -> Result<T, VandermondeError> {
    check_len("x", xs, p + q)?;
    check_len("a", a, p + q)?;
    let fam = match tag {
        SumTag::F => Family::P,
        SumTag::G => Family::Q,
        SumTag::H => Family::R,
    };
    let mut acc = T::zero();
    for lam in partition_family(fam, p) {
        for mu in partition_family(fam, q) {
            let e = weight(tag, &lam) + weight(tag, &mu);
            let d = det(&build_v_shifted(p, q, &lam, &mu, xs, a)?).expect("square");
            acc = acc.add(&d.mul(&sign::<T>(e as i64)));
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandTag {
    D,
    B,
    C,
}

/// The 0/±1 band matrices whose maximal minors pick out the families.
///
/// `D_r` is `r x (2r-1)` with ones at columns `r-i` and `r-2+i` of row `i`
/// (1-based), `B_r` is `r x 2r` with `-1` at `r-i` and `1` at `r-1+i`, and
/// `C_r` is `r x (2r+1)` with `-1` at `r-i` and `1` at `r+i`.
pub fn build_dbc<T: Ring>(tag: BandTag, r: usize) -> RingMatrix<T> {
    let (cols, neg, pos): (usize, fn(usize, usize) -> usize, fn(usize, usize) -> usize) = match tag {
        BandTag::D => (2 * r - 1, |r, i| r - i, |r, i| r + i - 2),
        BandTag::B => (2 * r, |r, i| r - i, |r, i| r - 1 + i),
        BandTag::C => (2 * r + 1, |r, i| r - i, |r, i| r + i),
    };
    let mut m = RingMatrix::zeros(r, cols);
    for i in 1..=r {
        let (lo, hi) = (neg(r, i), pos(r, i));
        let low = if tag == BandTag::D { T::one() } else { T::one().neg() };
        m.set(i - 1, lo, low);
        m.set(i - 1, hi, T::one());
    }
    m
}

/// Minor of `m` on all rows and the columns `I(λ)`, where columns past the
/// right edge of `m` count as zero columns.
pub fn index_minor<T: Ring>(m: &RingMatrix<T>, lam: &Partition) -> T {
    let r = m.rows();
    let Ok(idx) = lam.index_set(r) else { return T::zero() };
    if idx.iter().any(|&k| k >= m.cols()) {
        return T::zero();
    }
    m.minor_det(&(0..r).collect::<Vec<_>>(), &idx).expect("in range")
}
