//! Littlewood–Richardson coefficients: the tableau rule, and the Pfaffian
//! route through the skew matrix `B = (b_kl)` for rectangle products.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{Polynomial, Rational, VarId, VariableTable};
use crate::linalg::{sub_pfaffian, SkewMatrix};
use crate::symfunc::{h_complete, schur_expand, Partition, SkewShape, SymfuncError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LrError {
    #[error("{shape} does not fit in the {rows}x{cols} box")]
    NotInBox { shape: Partition, rows: usize, cols: usize },
    #[error("{shape} has more than {max} parts")]
    TooLong { shape: Partition, max: usize },
    #[error("λ does not satisfy λ_n ≥ f and λ_(n+1) ≤ min(e, f)")]
    ConditionViolated,
    #[error("n must be positive")]
    ZeroN,
    #[error("Schur expansion produced the non-integral coefficient {0}")]
    NotIntegral(Rational),
    #[error(transparent)]
    Symfunc(#[from] SymfuncError),
}

/// `c^λ_{μν}` by counting LR tableaux of shape `λ/μ` and content `ν`:
/// semistandard fillings whose right-to-left, top-to-bottom reading word is
/// a lattice word.
pub fn lr_bruteforce(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() != mu.size() + nu.size() || !lam.contains(mu) {
        return 0;
    }
    // cells in reading order
    let mut cells = Vec::new();
    for r in 1..=lam.len() {
        for c in (mu.part(r) + 1..=lam.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut grid: Vec<Vec<usize>> = (0..=lam.len()).map(|r| vec![0; lam.part(r.max(1)) + 2]).collect();
    let mut used = vec![0usize; nu.len() + 1];
    count_fillings(0, &cells, lam, mu, nu, &mut grid, &mut used)
}

fn count_fillings(
    k: usize,
    cells: &[(usize, usize)],
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    grid: &mut Vec<Vec<usize>>,
    used: &mut Vec<usize>,
) -> u64 {
    if k == cells.len() {
        return 1;
    }
    let (r, c) = cells[k];
    // right neighbour is already filled (reading right to left)
    let hi = if c < lam.part(r) { grid[r][c + 1] } else { nu.len() };
    // cell above must be strictly smaller; cells of μ count as 0
    let lo = if r > 1 && c > mu.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
    let mut total = 0;
    for v in lo..=hi.min(nu.len()) {
        if used[v] >= nu.part(v) || (v > 1 && used[v] + 1 > used[v - 1]) {
            continue;
        }
        used[v] += 1;
        grid[r][c] = v;
        total += count_fillings(k + 1, cells, lam, mu, nu, grid, used);
        grid[r][c] = 0;
        used[v] -= 1;
    }
    total
}

/// Indicator of `c^{□(n,e)}_{μν} = 1`, i.e. `ν = μ†(n, e)`.
pub fn lr_complement(mu: &Partition, nu: &Partition, n: usize, e: usize) -> u8 {
    match mu.complement(n, e) {
        Ok(c) if nu.fits_in(n, e) && &c == nu => 1,
        _ => 0,
    }
}

/// Indicator of `c^λ_{□(n,e),□(n,f)} = 1`: `λ_{n+1} ≤ min(e,f)` and
/// `λ_i + λ_{2n+1-i} = e + f` for `i ≤ n`.
pub fn lr_rect_rect(lam: &Partition, n: usize, e: usize, f: usize) -> Result<u8, LrError> {
    if lam.len() > 2 * n {
        return Err(LrError::TooLong { shape: lam.clone(), max: 2 * n });
    }
    let ok = lam.part(n + 1) <= e.min(f) && (1..=n).all(|i| lam.part(i) + lam.part(2 * n + 1 - i) == e + f);
    Ok(ok as u8)
}

/// `b_kl` as the closed-form sum of `h_i(z) h_j(w)` over
/// `i + j = E + F + 1 - k - l`, `0 ≤ i ≤ E - k`, `0 ≤ j ≤ F - k`, where
/// `E = e+n-1`, `F = f+n-1`; antisymmetric, with zero diagonal.
pub fn b_coeff(k: usize, l: usize, n: usize, e: usize, f: usize, z: &[VarId], w: &[VarId]) -> Polynomial {
    use std::cmp::Ordering::*;
    match k.cmp(&l) {
        Equal => Polynomial::zero(),
        Greater => -b_coeff(l, k, n, e, f, z, w),
        Less => {
            let (big_e, big_f) = ((e + n - 1) as i64, (f + n - 1) as i64);
            let (k, l) = (k as i64, l as i64);
            let total = big_e + big_f + 1 - k - l;
            let mut acc = Polynomial::zero();
            for i in 0..=(big_e - k).min(total) {
                let j = total - i;
                if j < 0 || j > big_f - k {
                    continue;
                }
                acc = &acc + &(&h_complete(i, z) * &h_complete(j, w));
            }
            acc
        }
    }
}

/// The skew matrix `(b_kl)` truncated to indices `0..e+f+2n`.
pub fn build_b(n: usize, e: usize, f: usize, z: &[VarId], w: &[VarId]) -> SkewMatrix<Polynomial> {
    SkewMatrix::from_fn(e + f + 2 * n, |k, l| b_coeff(k, l, n, e, f, z, w))
}

/// `Pf Δ^{I(λ)}_{I(λ)}(B)`, which vanishes when `I(λ)` leaves the truncated
/// index range (λ not inside `□(2n, e+f)`).
pub fn b_subpfaffian(b: &SkewMatrix<Polynomial>, lam: &Partition, n: usize) -> Result<Polynomial, LrError> {
    let idx = lam.index_set(2 * n).map_err(|_| LrError::TooLong { shape: lam.clone(), max: 2 * n })?;
    if idx.iter().any(|&i| i >= b.dim()) {
        return Ok(Polynomial::zero());
    }
    Ok(sub_pfaffian(b, &idx).expect("even in-range index set"))
}

fn check_rect_inputs(lam: &Partition, n: usize, e: usize, mu: &Partition) -> Result<(), LrError> {
    if n == 0 {
        return Err(LrError::ZeroN);
    }
    if lam.len() > 2 * n {
        return Err(LrError::TooLong { shape: lam.clone(), max: 2 * n });
    }
    if !mu.fits_in(n, e) {
        return Err(LrError::NotInBox { shape: mu.clone(), rows: n, cols: e });
    }
    Ok(())
}

/// `c^λ_{μ,□(n,f)}` read off as the coefficient of `s_{μ†(n,e)}(z)` in the
/// Schur expansion of `Pf Δ^{I(λ)}(B)`, with `n` variables `z` and no `w`.
pub fn lr_via_pfaffian(lam: &Partition, n: usize, e: usize, f: usize, mu: &Partition) -> Result<u64, LrError> {
    check_rect_inputs(lam, n, e, mu)?;
    let mut table = VariableTable::new();
    let z = table.vector("z", n);
    let b = build_b(n, e, f, &z, &[]);
    let pf = b_subpfaffian(&b, lam, n)?;
    let target = mu.complement(n, e)?;
    let coeff = schur_expand(&pf, &z)?
        .into_iter()
        .find(|(shape, _)| *shape == target)
        .map(|(_, c)| c)
        .unwrap_or_else(Rational::zero);
    to_count(coeff)
}

fn to_count(c: Rational) -> Result<u64, LrError> {
    if !c.is_integer() || c.is_negative() {
        return Err(LrError::NotIntegral(c));
    }
    let n: BigInt = c.to_integer();
    n.to_u64().ok_or(LrError::NotIntegral(c))
}

/// The partitions `α_i = λ_i - f`, `β_i = e - λ_{2n+1-i}` (`i ≤ n`), or
/// `None` when `λ_n ≥ f` and `λ_{n+1} ≤ min(e,f)` do not both hold.
pub fn alpha_beta(lam: &Partition, n: usize, e: usize, f: usize) -> Option<(Partition, Partition)> {
    if lam.part(n) < f || lam.part(n + 1) > e.min(f) {
        return None;
    }
    let alpha = Partition::new((1..=n).map(|i| lam.part(i) - f).collect()).ok()?;
    let beta = Partition::new((1..=n).map(|i| e - lam.part(2 * n + 1 - i)).collect()).ok()?;
    Some((alpha, beta))
}

/// `c^λ_{μ,□(n,f)}` through the rectangle reduction `c^β_{α,μ†(n,e)}`.
pub fn lr_rectangle_theorem(lam: &Partition, n: usize, e: usize, f: usize, mu: &Partition) -> Result<u64, LrError> {
    check_rect_inputs(lam, n, e, mu)?;
    let Some((alpha, beta)) = alpha_beta(lam, n, e, f) else {
        return Ok(0);
    };
    if !beta.contains(&alpha) {
        return Ok(0);
    }
    Ok(lr_bruteforce(&beta, &alpha, &mu.complement(n, e)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strip {
    /// `μ = (e^{n-1}, e-k)`.
    Horizontal,
    /// `μ = (e^{n-k}, (e-1)^k)`.
    Vertical,
}

/// The near-rectangle `μ` that the Pieri shortcut applies to.
pub fn near_rectangle(kind: Strip, n: usize, e: usize, k: usize) -> Option<Partition> {
    let parts = match kind {
        Strip::Horizontal if k <= e => {
            let mut v = vec![e; n - 1];
            v.push(e - k);
            v
        }
        Strip::Vertical if k <= n && (k == 0 || e >= 1) => {
            let mut v = vec![e; n - k];
            v.extend(std::iter::repeat_n(e.saturating_sub(1), k));
            v
        }
        _ => return None,
    };
    Partition::new(parts).ok()
}

/// Strip indicator for `c^λ_{μ,□(n,f)}` with `μ` a near rectangle: 1 exactly
/// when `β/α` is a horizontal (or vertical) strip with `k` cells.
pub fn pieri_near_rectangle(lam: &Partition, n: usize, e: usize, f: usize, k: usize, kind: Strip) -> Result<u8, LrError> {
    if n == 0 {
        return Err(LrError::ZeroN);
    }
    if !lam.fits_in(2 * n, e + f) {
        return Err(LrError::NotInBox { shape: lam.clone(), rows: 2 * n, cols: e + f });
    }
    let (alpha, beta) = alpha_beta(lam, n, e, f).ok_or(LrError::ConditionViolated)?;
    let Ok(shape) = SkewShape::new(beta, alpha) else {
        return Ok(0);
    };
    let strip = match kind {
        Strip::Horizontal => shape.is_horizontal_strip(),
        Strip::Vertical => shape.is_vertical_strip(),
    };
    Ok((strip && shape.size() == k) as u8)
}
