use crate::algebra::{Polynomial, Rational, Ring, VarId};
use crate::linalg::{det, RingMatrix};

use super::{Partition, SkewShape, SymfuncError};

fn poly_vars(vars: &[VarId]) -> Vec<Polynomial> {
    vars.iter().map(|&v| Polynomial::var(v)).collect()
}

/// `[h_0, ..., h_max]` of the given values, by adding one variable at a time:
/// `h_r(x_1..x_t) = h_r(x_1..x_{t-1}) + x_t h_{r-1}(x_1..x_t)`.
pub fn complete_table<T: Ring>(vals: &[T], max: usize) -> Vec<T> {
    let mut h = vec![T::zero(); max + 1];
    h[0] = T::one();
    for x in vals {
        for r in 1..=max {
            let step = x.mul(&h[r - 1]);
            h[r] = h[r].add(&step);
        }
    }
    h
}

/// `h_r` of the given values; 0 for negative `r`.
pub fn h_complete_of<T: Ring>(r: i64, vals: &[T]) -> T {
    if r < 0 {
        return T::zero();
    }
    complete_table(vals, r as usize).pop().unwrap()
}

/// `h_r(vars)`, the sum of all degree-`r` monomials.
pub fn h_complete(r: i64, vars: &[VarId]) -> Polynomial {
    h_complete_of(r, &poly_vars(vars))
}

/// Jacobi–Trudi: `s_{λ/μ} = det(h_{λ_i - μ_j - i + j})`.
pub fn skew_schur_of<T: Ring>(shape: &SkewShape, vals: &[T]) -> T {
    let (lam, mu) = (shape.outer(), shape.inner());
    let l = lam.len();
    if l == 0 {
        return T::one();
    }
    let max = lam.part(1) + l;
    let h = complete_table(vals, max);
    let m = RingMatrix::from_fn(l, l, |i, j| {
        let k = lam.part(i + 1) as i64 - mu.part(j + 1) as i64 - i as i64 + j as i64;
        if k < 0 {
            T::zero()
        } else {
            h[k as usize].clone()
        }
    });
    det(&m).expect("square")
}

pub fn schur_of<T: Ring>(lam: &Partition, vals: &[T]) -> T {
    skew_schur_of(&SkewShape::new(lam.clone(), Partition::empty()).unwrap(), vals)
}

pub fn schur(lam: &Partition, vars: &[VarId]) -> Polynomial {
    schur_of(lam, &poly_vars(vars))
}

pub fn skew_schur(shape: &SkewShape, vars: &[VarId]) -> Polynomial {
    skew_schur_of(shape, &poly_vars(vars))
}

/// `det(x_i^{λ_j + m - j}) / det(x_i^{m - j})` with `m = vars.len()`.
pub fn schur_bialternant(lam: &Partition, vars: &[VarId]) -> Polynomial {
    let m = vars.len();
    if lam.len() > m {
        return Polynomial::zero();
    }
    let x = poly_vars(vars);
    let alt = |shift: &dyn Fn(usize) -> usize| {
        let mat = RingMatrix::from_fn(m, m, |i, j| x[i].pow((shift(j) + m - 1 - j) as u32));
        det(&mat).expect("square")
    };
    let num = alt(&|j| lam.part(j + 1));
    let den = alt(&|_| 0);
    num.div_exact(&den).expect("alternant divides by the Vandermonde")
}

/// Writes a symmetric polynomial in `vars` as `Σ c_λ s_λ(vars)`, peeling off
/// the lexicographically leading monomial each round.
pub fn schur_expand(p: &Polynomial, vars: &[VarId]) -> Result<Vec<(Partition, Rational)>, SymfuncError> {
    let mut sorted = vars.to_vec();
    sorted.sort_unstable();
    let mut rest = p.clone();
    let mut out = Vec::new();
    while let Some((m, c)) = rest.leading() {
        if m.pairs().iter().any(|(v, _)| sorted.binary_search(v).is_err()) {
            return Err(SymfuncError::NotSymmetric);
        }
        let exps: Vec<usize> = sorted.iter().map(|&v| m.exponent(v) as usize).collect();
        let lam = Partition::new(exps).map_err(|_| SymfuncError::NotSymmetric)?;
        let c = c.clone();
        rest = &rest - &schur(&lam, &sorted).scale(&c);
        out.push((lam, c));
    }
    Ok(out)
}
