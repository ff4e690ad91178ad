//! One builder per registry key. Each names its variables through the
//! context, composes both sides from the matrix builders and the linear
//! algebra, and returns the equations of the instance.

use crate::algebra::{rat, sign, Rational, Ring};
use crate::linalg::{
    blocked_tensor, combinations, det, hyperpfaffian, pfaffian, sub_pfaffian, AlternatingTensor, RingMatrix,
    SkewMatrix,
};
use crate::lr::{b_subpfaffian, build_b, lr_bruteforce};
use crate::symfunc::{h_complete_of, schur_of, Partition};
use crate::vandermonde::{
    build_dbc, det_u, det_v, det_w, fgh_sum, index_minor, partition_family, BandTag, Family, SumTag,
};

use super::{BuildError, Ctx, Equation, Params, Scalar};

pub(crate) type Built<T> = Result<Vec<Equation<T>>, BuildError>;

fn single<T>(label: &str, lhs: T, rhs: T) -> Built<T> {
    Ok(vec![Equation::new(label, lhs, rhs)])
}

fn need(cond: bool, msg: &str) -> Result<(), BuildError> {
    if cond {
        Ok(())
    } else {
        Err(BuildError::Invalid(msg.to_string()))
    }
}

fn cat<T: Clone>(parts: &[&[T]]) -> Vec<T> {
    parts.concat()
}

/// `(u, v, rest...)`, the argument list of the two-row entries.
fn pair<T: Clone>(u: &T, v: &T, rest: &[T]) -> Vec<T> {
    let mut out = vec![u.clone(), v.clone()];
    out.extend_from_slice(rest);
    out
}

fn prod<T: Ring>(items: impl IntoIterator<Item = T>) -> T {
    items.into_iter().fold(T::one(), |acc, x| acc.mul(&x))
}

fn total<T: Ring>(items: impl IntoIterator<Item = T>) -> T {
    items.into_iter().fold(T::zero(), |acc, x| acc.add(&x))
}

fn upper_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

/// `∏_{i<j} (x_j - x_i)`.
fn delta<T: Ring>(x: &[T]) -> T {
    prod(upper_pairs(x.len()).map(|(i, j)| x[j].sub(&x[i])))
}

/// The factors `x_j - x_i`, `i < j`.
fn differences<T: Ring>(x: &[T]) -> Vec<T> {
    upper_pairs(x.len()).map(|(i, j)| x[j].sub(&x[i])).collect()
}

fn factors<T>(items: impl IntoIterator<Item = T>) -> Vec<T> {
    items.into_iter().collect()
}

/// `num / ∏ den`, one factor at a time so rational functions keep the
/// denominator factored.
fn over<T: Scalar>(cx: &Ctx<T>, num: T, den: &[T]) -> Result<T, BuildError> {
    den.iter().try_fold(num, |acc, d| cx.div(&acc, d))
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn sgn<T: Ring>(e: usize) -> T {
    sign(e as i64)
}

fn ones<T: Ring>(n: usize) -> Vec<T> {
    vec![T::one(); n]
}

fn square<T: Ring>(
    n: usize,
    mut f: impl FnMut(usize, usize) -> Result<T, BuildError>,
) -> Result<RingMatrix<T>, BuildError> {
    let mut entries = Vec::with_capacity(n * n);
    for (i, j) in all_pairs(n) {
        entries.push(f(i, j)?);
    }
    Ok(RingMatrix::new(n, n, entries)?)
}

fn skew<T: Ring>(
    dim: usize,
    mut f: impl FnMut(usize, usize) -> Result<T, BuildError>,
) -> Result<SkewMatrix<T>, BuildError> {
    let mut m = SkewMatrix::zeros(dim);
    for (i, j) in upper_pairs(dim) {
        m.set(i, j, f(i, j)?);
    }
    Ok(m)
}

fn det_of<T: Ring>(m: &RingMatrix<T>) -> Result<T, BuildError> {
    Ok(det(m)?)
}

/// Matrix of fresh variables `prefix{i}_{j}` (1-based).
fn var_matrix<T: Scalar>(cx: &mut Ctx<T>, prefix: &str, rows: usize, cols: usize) -> RingMatrix<T> {
    RingMatrix::from_fn(rows, cols, |i, j| cx.var(&format!("{prefix}{}_{}", i + 1, j + 1)))
}

fn var_skew<T: Scalar>(cx: &mut Ctx<T>, prefix: &str, dim: usize) -> SkewMatrix<T> {
    SkewMatrix::from_fn(dim, |i, j| cx.var(&format!("{prefix}{}_{}", i + 1, j + 1)))
}

/// `x^e` for a possibly negative exponent.
fn powi<T: Scalar>(cx: &Ctx<T>, x: &T, e: i64) -> Result<T, BuildError> {
    if e >= 0 {
        Ok(x.pow(e as u32))
    } else {
        cx.inv(&x.pow(e.unsigned_abs() as u32))
    }
}

pub(crate) fn cauchy<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    let (x, y) = (cx.vec("x", n), cx.vec("y", n));
    let m = square(n, |i, j| cx.inv(&x[i].add(&y[j])))?;
    let den = factors(all_pairs(n).map(|(i, j)| x[i].add(&y[j])));
    let rhs = over(cx, delta(&x).mul(&delta(&y)), &den)?;
    single("det", det_of(&m)?, rhs)
}

pub(crate) fn schur<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let dim = 2 * p.get("n");
    let x = cx.vec("x", dim);
    let m = skew(dim, |i, j| cx.div(&x[j].sub(&x[i]), &x[j].add(&x[i])))?;
    let den = factors(upper_pairs(dim).map(|(i, j)| x[j].add(&x[i])));
    single("pf", pfaffian(&m), over(cx, delta(&x), &den)?)
}

pub(crate) fn special1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    let (x, y, a, b) = (cx.vec("x", n), cx.vec("y", n), cx.vec("a", n), cx.vec("b", n));
    let m = square(n, |i, j| cx.div(&b[j].sub(&a[i]), &y[j].sub(&x[i])))?;
    let den = factors(all_pairs(n).map(|(i, j)| y[j].sub(&x[i])));
    let v = det_v(n, n, &cat(&[&x, &y]), &cat(&[&a, &b]))?;
    single("det", det_of(&m)?, over(cx, sgn::<T>(binom2(n)).mul(&v), &den)?)
}

pub(crate) fn special2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    let (x, a, b) = (cx.vec("x", 2 * n), cx.vec("a", 2 * n), cx.vec("b", 2 * n));
    let m = skew(2 * n, |i, j| cx.div(&a[j].sub(&a[i]).mul(&b[j].sub(&b[i])), &x[j].sub(&x[i])))?;
    let num = det_v(n, n, &x, &a)?.mul(&det_v(n, n, &x, &b)?);
    single("pf", pfaffian(&m), over(cx, num, &differences(&x))?)
}

pub(crate) fn main1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp, q) = (p.get("n"), p.get("p"), p.get("q"));
    let (x, y, a, b) = (cx.vec("x", n), cx.vec("y", n), cx.vec("a", n), cx.vec("b", n));
    let (z, c) = (cx.vec("z", pp + q), cx.vec("c", pp + q));
    let m = square(n, |i, j| {
        let f = det_v(pp + 1, q + 1, &pair(&x[i], &y[j], &z), &pair(&a[i], &b[j], &c))?;
        cx.div(&f, &y[j].sub(&x[i]))
    })?;
    let den = factors(all_pairs(n).map(|(i, j)| y[j].sub(&x[i])));
    let num = sgn::<T>(binom2(n))
        .mul(&det_v(pp, q, &z, &c)?.pow(n as u32 - 1))
        .mul(&det_v(n + pp, n + q, &cat(&[&x, &y, &z]), &cat(&[&a, &b, &c]))?);
    single("det", det_of(&m)?, over(cx, num, &den)?)
}

fn main2_sides<T: Scalar>(n: usize, p: usize, q: usize, r: usize, s: usize, cx: &mut Ctx<T>) -> Built<T> {
    let (x, a, b) = (cx.vec("x", 2 * n), cx.vec("a", 2 * n), cx.vec("b", 2 * n));
    let (z, c) = (cx.vec("z", p + q), cx.vec("c", p + q));
    let (w, d) = (cx.vec("w", r + s), cx.vec("d", r + s));
    let m = skew(2 * n, |i, j| {
        let f = det_v(p + 1, q + 1, &pair(&x[i], &x[j], &z), &pair(&a[i], &a[j], &c))?;
        let g = det_v(r + 1, s + 1, &pair(&x[i], &x[j], &w), &pair(&b[i], &b[j], &d))?;
        cx.div(&f.mul(&g), &x[j].sub(&x[i]))
    })?;
    let e = n as u32 - 1;
    let num = det_v(p, q, &z, &c)?
        .pow(e)
        .mul(&det_v(r, s, &w, &d)?.pow(e))
        .mul(&det_v(n + p, n + q, &cat(&[&x, &z]), &cat(&[&a, &c]))?)
        .mul(&det_v(n + r, n + s, &cat(&[&x, &w]), &cat(&[&b, &d]))?);
    single("pf", pfaffian(&m), over(cx, num, &differences(&x))?)
}

pub(crate) fn main2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    main2_sides(p.get("n"), p.get("p"), p.get("q"), p.get("r"), p.get("s"), cx)
}

pub(crate) fn prop_n2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    main2_sides(2, p.get("p"), p.get("q"), p.get("r"), p.get("s"), cx)
}

pub(crate) fn main3<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp) = (p.get("n"), p.get("p"));
    let (x, y, a, b) = (cx.vec("x", n), cx.vec("y", n), cx.vec("a", n), cx.vec("b", n));
    let (z, c) = (cx.vec("z", pp), cx.vec("c", pp));
    let one = T::one();
    let pole = |i: usize, j: usize| y[j].sub(&x[i]).mul(&one.sub(&x[i].mul(&y[j])));
    let m = square(n, |i, j| {
        let f = det_w(pp + 2, &pair(&x[i], &y[j], &z), &pair(&a[i], &b[j], &c))?;
        cx.div(&f, &pole(i, j))
    })?;
    let den = factors(all_pairs(n).map(|(i, j)| pole(i, j)));
    let num = det_w(pp, &z, &c)?
        .pow(n as u32 - 1)
        .mul(&det_w(2 * n + pp, &cat(&[&x, &y, &z]), &cat(&[&a, &b, &c]))?);
    single("det", det_of(&m)?, over(cx, num, &den)?)
}

pub(crate) fn main4<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp, q) = (p.get("n"), p.get("p"), p.get("q"));
    let (x, a, b) = (cx.vec("x", 2 * n), cx.vec("a", 2 * n), cx.vec("b", 2 * n));
    let (z, c) = (cx.vec("z", pp), cx.vec("c", pp));
    let (w, d) = (cx.vec("w", q), cx.vec("d", q));
    let one = T::one();
    let pole = |i: usize, j: usize| x[j].sub(&x[i]).mul(&one.sub(&x[i].mul(&x[j])));
    let m = skew(2 * n, |i, j| {
        let f = det_w(pp + 2, &pair(&x[i], &x[j], &z), &pair(&a[i], &a[j], &c))?;
        let g = det_w(q + 2, &pair(&x[i], &x[j], &w), &pair(&b[i], &b[j], &d))?;
        cx.div(&f.mul(&g), &pole(i, j))
    })?;
    let den = factors(upper_pairs(2 * n).map(|(i, j)| pole(i, j)));
    let e = n as u32 - 1;
    let num = det_w(pp, &z, &c)?
        .pow(e)
        .mul(&det_w(q, &w, &d)?.pow(e))
        .mul(&det_w(2 * n + pp, &cat(&[&x, &z]), &cat(&[&a, &c]))?)
        .mul(&det_w(2 * n + q, &cat(&[&x, &w]), &cat(&[&b, &d]))?);
    single("pf", pfaffian(&m), over(cx, num, &den)?)
}

pub(crate) fn cauchy1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, k) = (p.get("n"), p.get("k"));
    let (x, y, z) = (cx.vec("x", n), cx.vec("y", n), cx.vec("z", k));
    let st = Partition::staircase(k);
    let m = square(n, |i, j| cx.div(&schur_of(&st, &pair(&x[i], &y[j], &z)), &x[i].add(&y[j])))?;
    let den = factors(all_pairs(n).map(|(i, j)| x[i].add(&y[j])));
    let num = delta(&x)
        .mul(&delta(&y))
        .mul(&schur_of(&st, &z).pow(n as u32 - 1))
        .mul(&schur_of(&st, &cat(&[&x, &y, &z])));
    single("det", det_of(&m)?, over(cx, num, &den)?)
}

pub(crate) fn schur1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, k, l) = (p.get("n"), p.get("k"), p.get("l"));
    let (x, z, w) = (cx.vec("x", 2 * n), cx.vec("z", k), cx.vec("w", l));
    let (sk, sl) = (Partition::staircase(k), Partition::staircase(l));
    let m = skew(2 * n, |i, j| {
        let ratio = cx.div(&x[j].sub(&x[i]), &x[j].add(&x[i]))?;
        Ok(ratio
            .mul(&schur_of(&sk, &pair(&x[i], &x[j], &z)))
            .mul(&schur_of(&sl, &pair(&x[i], &x[j], &w))))
    })?;
    let den = factors(upper_pairs(2 * n).map(|(i, j)| x[j].add(&x[i])));
    let e = n as u32 - 1;
    let num = delta(&x)
        .mul(&schur_of(&sk, &z).pow(e))
        .mul(&schur_of(&sl, &w).pow(e))
        .mul(&schur_of(&sk, &cat(&[&x, &z])))
        .mul(&schur_of(&sl, &cat(&[&x, &w])));
    single("pf", pfaffian(&m), over(cx, num, &den)?)
}

pub(crate) fn rel_v1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (pp, q) = (p.get("p"), p.get("q"));
    need(pp >= q && pp >= 1, "needs p >= q and p >= 1")?;
    let m = pp + q;
    let (x, a) = (cx.vec("x", m), cx.vec("a", m));
    let last = m - 1;
    let mut reduced = Vec::with_capacity(last);
    for i in 0..last {
        reduced.push(cx.div(&a[i].sub(&a[last]), &x[i].sub(&x[last]))?);
    }
    let factor = prod((0..last).map(|i| x[last].sub(&x[i])));
    let rhs = factor.mul(&det_v(pp - 1, q, &x[..last], &reduced)?);
    single("det", det_v(pp, q, &x, &a)?, rhs)
}

pub(crate) fn rel_v2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (pp, q) = (p.get("p"), p.get("q"));
    let m = pp + q;
    let (x, a) = (cx.vec("x", m), cx.vec("a", m));
    let mut inv = Vec::with_capacity(m);
    for ai in &a {
        inv.push(cx.inv(ai)?);
    }
    let rhs = sgn::<T>(pp * q).mul(&prod(a.iter().cloned())).mul(&det_v(q, pp, &x, &inv)?);
    single("det", det_v(pp, q, &x, &a)?, rhs)
}

pub(crate) fn det_dodgson<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    need(n >= 2, "needs n >= 2")?;
    let a = var_matrix(cx, "a", n, n);
    let keep = |drop: &[usize]| (0..n).filter(|i| !drop.contains(i)).collect::<Vec<_>>();
    let minor = |r: &[usize], c: &[usize]| a.minor_det(&keep(r), &keep(c));
    let lhs = minor(&[0], &[0])?
        .mul(&minor(&[1], &[1])?)
        .sub(&minor(&[0], &[1])?.mul(&minor(&[1], &[0])?));
    let rhs = det_of(&a)?.mul(&minor(&[0, 1], &[0, 1])?);
    single("dodgson", lhs, rhs)
}

pub(crate) fn pf_dodgson<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let dim = 2 * p.get("n");
    need(dim >= 4, "needs n >= 2")?;
    let a = var_skew(cx, "a", dim);
    let without = |drop: &[usize]| -> Result<T, BuildError> {
        let idx: Vec<usize> = (0..dim).filter(|i| !drop.contains(i)).collect();
        Ok(sub_pfaffian(&a, &idx)?)
    };
    let lhs = without(&[0, 1])?
        .mul(&without(&[2, 3])?)
        .sub(&without(&[0, 2])?.mul(&without(&[1, 3])?))
        .add(&without(&[0, 3])?.mul(&without(&[1, 2])?));
    let rhs = pfaffian(&a).mul(&without(&[0, 1, 2, 3])?);
    single("dodgson", lhs, rhs)
}

/// `det [[x_i, x_j], [y_i, y_j]]`.
fn bracket<T: Ring>(xi: &T, xj: &T, yi: &T, yj: &T) -> T {
    xi.mul(yj).sub(&xj.mul(yi))
}

pub(crate) fn homog1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp, q, r, s) = (p.get("n"), p.get("p"), p.get("q"), p.get("r"), p.get("s"));
    let dim = 2 * n;
    let [x, y, a, b, c, d] = ["x", "y", "a", "b", "c", "d"].map(|v| cx.vec(v, dim));
    let [xi, eta, alpha, beta] = ["xi", "eta", "alpha", "beta"].map(|v| cx.vec(v, pp + q));
    let [zeta, omega, gamma, dlt] = ["zeta", "omega", "gamma", "delta"].map(|v| cx.vec(v, r + s));
    let m = skew(dim, |i, j| {
        let f = det_u(
            pp + 1,
            q + 1,
            &pair(&x[i], &x[j], &xi),
            &pair(&y[i], &y[j], &eta),
            &pair(&a[i], &a[j], &alpha),
            &pair(&b[i], &b[j], &beta),
        )?;
        let g = det_u(
            r + 1,
            s + 1,
            &pair(&x[i], &x[j], &zeta),
            &pair(&y[i], &y[j], &omega),
            &pair(&c[i], &c[j], &gamma),
            &pair(&d[i], &d[j], &dlt),
        )?;
        cx.div(&f.mul(&g), &bracket(&x[i], &x[j], &y[i], &y[j]))
    })?;
    let den = factors(upper_pairs(dim).map(|(i, j)| bracket(&x[i], &x[j], &y[i], &y[j])));
    let e = n as u32 - 1;
    let num = det_u(pp, q, &xi, &eta, &alpha, &beta)?
        .pow(e)
        .mul(&det_u(r, s, &zeta, &omega, &gamma, &dlt)?.pow(e))
        .mul(&det_u(
            n + pp,
            n + q,
            &cat(&[&x, &xi]),
            &cat(&[&y, &eta]),
            &cat(&[&a, &alpha]),
            &cat(&[&b, &beta]),
        )?)
        .mul(&det_u(
            n + r,
            n + s,
            &cat(&[&x, &zeta]),
            &cat(&[&y, &omega]),
            &cat(&[&c, &gamma]),
            &cat(&[&d, &dlt]),
        )?);
    single("pf", pfaffian(&m), over(cx, num, &den)?)
}

pub(crate) fn homog2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp, q) = (p.get("n"), p.get("p"), p.get("q"));
    let [x, y, z, w, a, b, c, d] = ["x", "y", "z", "w", "a", "b", "c", "d"].map(|v| cx.vec(v, n));
    let [xi, eta, alpha, beta] = ["xi", "eta", "alpha", "beta"].map(|v| cx.vec(v, pp + q));
    let pole = |i: usize, j: usize| bracket(&x[i], &z[j], &y[i], &w[j]);
    let m = square(n, |i, j| {
        let f = det_u(
            pp + 1,
            q + 1,
            &pair(&x[i], &z[j], &xi),
            &pair(&y[i], &w[j], &eta),
            &pair(&a[i], &c[j], &alpha),
            &pair(&b[i], &d[j], &beta),
        )?;
        cx.div(&f, &pole(i, j))
    })?;
    let den = factors(all_pairs(n).map(|(i, j)| pole(i, j)));
    let num = sgn::<T>(binom2(n))
        .mul(&det_u(pp, q, &xi, &eta, &alpha, &beta)?.pow(n as u32 - 1))
        .mul(&det_u(
            n + pp,
            n + q,
            &cat(&[&x, &z, &xi]),
            &cat(&[&y, &w, &eta]),
            &cat(&[&a, &c, &alpha]),
            &cat(&[&b, &d, &beta]),
        )?);
    single("det", det_of(&m)?, over(cx, num, &den)?)
}

pub(crate) fn pf_det<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (m, n) = (p.get("m"), p.get("n"));
    need(m <= 2 * n, "needs m <= 2n")?;
    let a = var_matrix(cx, "a", m, 2 * n - m);
    let block = SkewMatrix::from_fn(2 * n, |i, j| if i < m && j >= m { a.get(i, j - m).clone() } else { T::zero() });
    let rhs = if m == n { sgn::<T>(binom2(n)).mul(&det_of(&a)?) } else { T::zero() };
    single("pf", pfaffian(&block), rhs)
}

pub(crate) fn rel_uv1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (pp, q) = (p.get("p"), p.get("q"));
    let m = pp + q;
    let [x, y, a, b] = ["x", "y", "a", "b"].map(|v| cx.vec(v, m));
    let mut prefactor = T::one();
    let (mut ratio, mut coef) = (Vec::with_capacity(m), Vec::with_capacity(m));
    for k in 0..m {
        prefactor = prefactor.mul(&a[k]).mul(&powi(cx, &x[k], pp as i64 - 1)?);
        ratio.push(cx.div(&y[k], &x[k])?);
        coef.push(cx.div(&b[k], &a[k])?.mul(&powi(cx, &x[k], q as i64 - pp as i64)?));
    }
    let rhs = prefactor.mul(&det_v(pp, q, &ratio, &coef)?);
    single("det", det_u(pp, q, &x, &y, &a, &b)?, rhs)
}

pub(crate) fn rel_uv2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (pp, q) = (p.get("p"), p.get("q"));
    let m = pp + q;
    let (x, a) = (cx.vec("x", m), cx.vec("a", m));
    let rhs = det_u(pp, q, &ones(m), &x, &ones(m), &a)?;
    single("det", det_v(pp, q, &x, &a)?, rhs)
}

fn one_plus_square<T: Ring>(x: &[T]) -> Vec<T> {
    x.iter().map(|v| T::one().add(&v.mul(v))).collect()
}

pub(crate) fn rel_uw1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    let (x, a) = (cx.vec("x", 2 * n), cx.vec("a", 2 * n));
    let c: Vec<T> = a.iter().zip(&x).map(|(ai, xi)| T::one().add(&ai.mul(xi))).collect();
    let d: Vec<T> = a.iter().zip(&x).map(|(ai, xi)| xi.add(ai)).collect();
    let lhs = det_u(n, n, &x, &one_plus_square(&x), &c, &d)?;
    single("det", lhs, sgn::<T>(binom2(n)).mul(&det_w(2 * n, &x, &a)?))
}

pub(crate) fn rel_uw2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    let (x, a) = (cx.vec("x", 2 * n + 1), cx.vec("a", 2 * n + 1));
    let c: Vec<T> = a.iter().zip(&x).map(|(ai, xi)| T::one().add(&ai.mul(&xi.mul(xi)))).collect();
    let d: Vec<T> = a.iter().map(|ai| T::one().add(ai)).collect();
    let lhs = det_u(n, n + 1, &x, &one_plus_square(&x), &c, &d)?;
    single("det", lhs, sgn::<T>(binom2(n)).mul(&det_w(2 * n + 1, &x, &a)?))
}

fn f_sum<T: Ring>(p: usize, q: usize, x: &[T], a: &[T]) -> Result<T, BuildError> {
    Ok(fgh_sum(SumTag::F, p, q, x, a)?)
}

pub(crate) fn variation1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp, q) = (p.get("n"), p.get("p"), p.get("q"));
    let (x, y, a, b) = (cx.vec("x", n), cx.vec("y", n), cx.vec("a", n), cx.vec("b", n));
    let (z, c) = (cx.vec("z", pp + q), cx.vec("c", pp + q));
    let one = T::one();
    let pole = |i: usize, j: usize| y[j].sub(&x[i]).mul(&one.sub(&x[i].mul(&y[j])));
    let m = square(n, |i, j| {
        let f = f_sum(pp + 1, q + 1, &pair(&x[i], &y[j], &z), &pair(&a[i], &b[j], &c))?;
        cx.div(&f, &pole(i, j))
    })?;
    let den = factors(all_pairs(n).map(|(i, j)| pole(i, j)));
    let num = sgn::<T>(binom2(n))
        .mul(&f_sum(pp, q, &z, &c)?.pow(n as u32 - 1))
        .mul(&f_sum(n + pp, n + q, &cat(&[&x, &y, &z]), &cat(&[&a, &b, &c]))?);
    single("det", det_of(&m)?, over(cx, num, &den)?)
}

pub(crate) fn variation2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp, q, r, s) = (p.get("n"), p.get("p"), p.get("q"), p.get("r"), p.get("s"));
    let (x, a, b) = (cx.vec("x", 2 * n), cx.vec("a", 2 * n), cx.vec("b", 2 * n));
    let (z, c) = (cx.vec("z", pp + q), cx.vec("c", pp + q));
    let (w, d) = (cx.vec("w", r + s), cx.vec("d", r + s));
    let one = T::one();
    let pole = |i: usize, j: usize| x[j].sub(&x[i]).mul(&one.sub(&x[i].mul(&x[j])));
    let m = skew(2 * n, |i, j| {
        let f = f_sum(pp + 1, q + 1, &pair(&x[i], &x[j], &z), &pair(&a[i], &a[j], &c))?;
        let g = f_sum(r + 1, s + 1, &pair(&x[i], &x[j], &w), &pair(&b[i], &b[j], &d))?;
        cx.div(&f.mul(&g), &pole(i, j))
    })?;
    let den = factors(upper_pairs(2 * n).map(|(i, j)| pole(i, j)));
    let e = n as u32 - 1;
    let num = f_sum(pp, q, &z, &c)?
        .pow(e)
        .mul(&f_sum(r, s, &w, &d)?.pow(e))
        .mul(&f_sum(n + pp, n + q, &cat(&[&x, &z]), &cat(&[&a, &c]))?)
        .mul(&f_sum(n + r, n + s, &cat(&[&x, &w]), &cat(&[&b, &d]))?);
    single("pf", pfaffian(&m), over(cx, num, &den)?)
}

pub(crate) fn sundquist<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    let (x, a) = (cx.vec("x", 2 * n), cx.vec("a", 2 * n));
    let one = T::one();
    let pole = |i: usize, j: usize| one.sub(&x[i].mul(&x[j]));
    let m = skew(2 * n, |i, j| cx.div(&a[j].sub(&a[i]), &pole(i, j)))?;
    let den = factors(upper_pairs(2 * n).map(|(i, j)| pole(i, j)));
    let num = sgn::<T>(binom2(n)).mul(&f_sum(n, n, &x, &a)?);
    single("pf", pfaffian(&m), over(cx, num, &den)?)
}

pub(crate) fn rel_fv<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (pp, q) = (p.get("p"), p.get("q"));
    let m = pp + q;
    let (x, a) = (cx.vec("x", m), cx.vec("a", m));
    let f = f_sum(pp, q, &x, &a)?;
    let s = sgn::<T>(binom2(pp) + binom2(q));
    let mut prefactor = T::one();
    let (mut shifted, mut coef) = (Vec::with_capacity(m), Vec::with_capacity(m));
    for k in 0..m {
        prefactor = prefactor.mul(&powi(cx, &x[k], pp as i64 - 1)?);
        shifted.push(x[k].add(&cx.inv(&x[k])?));
        coef.push(a[k].mul(&powi(cx, &x[k], q as i64 - pp as i64)?));
    }
    let via_v = s.mul(&prefactor).mul(&det_v(pp, q, &shifted, &coef)?);
    let via_u = s.mul(&det_u(pp, q, &x, &one_plus_square(&x), &ones(m), &a)?);
    Ok(vec![Equation::new("F = V", f.clone(), via_v), Equation::new("F = U", f, via_u)])
}

pub(crate) fn rel_gh<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (pp, q) = (p.get("p"), p.get("q"));
    let m = pp + q;
    let (x, a) = (cx.vec("x", m), cx.vec("a", m));
    let f = f_sum(pp, q, &x, &a)?;
    let g = fgh_sum(SumTag::G, pp, q, &x, &a)?;
    let h = fgh_sum(SumTag::H, pp, q, &x, &a)?;
    let one = T::one();
    let g_factor = prod(x.iter().map(|v| one.sub(&v.mul(v))));
    let h_factor = prod(x.iter().map(|v| one.sub(v)));
    let u = sgn::<T>(binom2(pp) + binom2(q)).mul(&det_u(pp, q, &x, &one_plus_square(&x), &ones(m), &a)?);
    Ok(vec![
        Equation::new("G = F", g.clone(), g_factor.mul(&f)),
        Equation::new("H = F", h.clone(), h_factor.mul(&f)),
        Equation::new("G = U", g, g_factor.mul(&u)),
        Equation::new("H = U", h, h_factor.mul(&u)),
    ])
}

pub(crate) fn littlewood<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    let x = cx.vec("x", n);
    let lhs = total(
        partition_family(Family::P, n)
            .iter()
            .map(|lam| sgn::<T>(lam.size() / 2).mul(&schur_of(lam, &x))),
    );
    let one = T::one();
    let rhs = prod(upper_pairs(n).map(|(i, j)| one.sub(&x[i].mul(&x[j]))));
    single("sum", lhs, rhs)
}

pub(crate) fn cauchy_binet<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, big) = (p.get("n"), p.get("N"));
    let x = var_matrix(cx, "x", n, big);
    let y = var_matrix(cx, "y", n, big);
    let a = var_matrix(cx, "a", big, big);
    let lhs = det_of(&x.mul(&a)?.mul(&y.transpose())?)?;
    let rows: Vec<usize> = (0..n).collect();
    let subsets = combinations(big, n);
    let mut rhs = T::zero();
    for i in &subsets {
        let xi = x.minor_det(&rows, i)?;
        for j in &subsets {
            let term = a.minor_det(i, j)?.mul(&xi).mul(&y.minor_det(&rows, j)?);
            rhs = rhs.add(&term);
        }
    }
    single("det", lhs, rhs)
}

/// Compares `Δ_{I(λ)}` of a band matrix against the closed form over every
/// shape with at most `r` rows and `2r+2` columns.
fn band_scan<T: Scalar>(tag: BandTag, r: usize, family: Family, expect: impl Fn(&Partition) -> usize) -> Built<T> {
    let m = build_dbc::<T>(tag, r);
    let members = partition_family(family, r);
    Ok(Partition::all_in_box(r, 2 * r + 2)
        .into_iter()
        .map(|lam| {
            let rhs = if members.contains(&lam) { sgn::<T>(expect(&lam)) } else { T::zero() };
            Equation::new(format!("{tag:?}{r} {lam}"), index_minor(&m, &lam), rhs)
        })
        .collect())
}

pub(crate) fn minor_dr<T: Scalar>(p: &Params, _: &mut Ctx<T>) -> Built<T> {
    let r = p.get("r");
    need(r >= 1, "needs r >= 1")?;
    band_scan(BandTag::D, r, Family::P, |lam| binom2(r) + lam.size() / 2)
}

pub(crate) fn minor_bc<T: Scalar>(p: &Params, _: &mut Ctx<T>) -> Built<T> {
    let r = p.get("r");
    need(r >= 1, "needs r >= 1")?;
    let mut out = band_scan(BandTag::B, r, Family::R, |lam| binom2(r + 1) + (lam.size() + lam.diagonal()) / 2)?;
    out.extend(band_scan(BandTag::C, r, Family::Q, |lam| binom2(r + 1) + lam.size() / 2)?);
    Ok(out)
}

/// Shared shape of the two Cauchy-type identities in `1 / f(x_i, y_j)`.
fn another<T: Scalar>(
    n: usize,
    cx: &mut Ctx<T>,
    f: &dyn Fn(&T, &T, &T, &T) -> Result<T, BuildError>,
    x: &[T],
    y: &[T],
    a: &[T],
    b: &[T],
) -> Built<T> {
    let m = square(n, |i, j| cx.inv(&f(&x[i], &y[j], &a[i], &b[j])?))?;
    let mut num = sgn::<T>(binom2(n));
    for (i, j) in upper_pairs(n) {
        num = num.mul(&f(&x[i], &x[j], &a[i], &a[j])?).mul(&f(&y[i], &y[j], &b[i], &b[j])?);
    }
    let mut den = Vec::with_capacity(n * n);
    for (i, j) in all_pairs(n) {
        den.push(f(&x[i], &y[j], &a[i], &b[j])?);
    }
    single("det", det_of(&m)?, over(cx, num, &den)?)
}

pub(crate) fn another1<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp, q) = (p.get("n"), p.get("p"), p.get("q"));
    let (x, y, a, b) = (cx.vec("x", n), cx.vec("y", n), cx.vec("a", n), cx.vec("b", n));
    let (z, c) = (cx.vec("z", pp + q), cx.vec("c", pp + q));
    let f = |u: &T, v: &T, s: &T, t: &T| Ok(det_v(pp + 1, q + 1, &pair(u, v, &z), &pair(s, t, &c))?);
    another(n, cx, &f, &x, &y, &a, &b)
}

pub(crate) fn another2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp) = (p.get("n"), p.get("p"));
    let (x, y, a, b) = (cx.vec("x", n), cx.vec("y", n), cx.vec("a", n), cx.vec("b", n));
    let (z, c) = (cx.vec("z", pp), cx.vec("c", pp));
    let f = |u: &T, v: &T, s: &T, t: &T| Ok(det_w(pp + 2, &pair(u, v, &z), &pair(s, t, &c))?);
    another(n, cx, &f, &x, &y, &a, &b)
}

pub(crate) fn plucker<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let m = p.get("m");
    let mat = var_matrix(cx, "a", m + 2, m + 4);
    let rows: Vec<usize> = (0..m + 2).collect();
    let d = |i: usize, j: usize| -> Result<T, BuildError> {
        let mut cols = vec![i, j];
        cols.extend(4..m + 4);
        Ok(mat.minor_det(&rows, &cols)?)
    };
    let lhs = d(0, 1)?
        .mul(&d(2, 3)?)
        .sub(&d(0, 2)?.mul(&d(1, 3)?))
        .add(&d(0, 3)?.mul(&d(1, 2)?));
    single("plucker", lhs, T::zero())
}

fn quadratic_relation<T: Ring>(
    f: &dyn Fn(&T, &T, &T, &T) -> Result<T, BuildError>,
    x: &[T],
    y: &[T],
    a: &[T],
    b: &[T],
) -> Result<T, BuildError> {
    Ok(f(&x[0], &x[1], &a[0], &a[1])?
        .mul(&f(&y[0], &y[1], &b[0], &b[1])?)
        .sub(&f(&x[0], &y[0], &a[0], &b[0])?.mul(&f(&x[1], &y[1], &a[1], &b[1])?))
        .add(&f(&x[0], &y[1], &a[0], &b[1])?.mul(&f(&x[1], &y[0], &a[1], &b[0])?)))
}

pub(crate) fn plucker_vw<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (pp, q) = (p.get("p"), p.get("q"));
    let (x, y, a, b) = (cx.vec("x", 2), cx.vec("y", 2), cx.vec("a", 2), cx.vec("b", 2));
    let (z, c) = (cx.vec("z", pp + q), cx.vec("c", pp + q));
    let fv = |u: &T, v: &T, s: &T, t: &T| Ok(det_v(pp + 1, q + 1, &pair(u, v, &z), &pair(s, t, &c))?);
    let fw = |u: &T, v: &T, s: &T, t: &T| Ok(det_w(pp + 2, &pair(u, v, &z[..pp]), &pair(s, t, &c[..pp]))?);
    Ok(vec![
        Equation::new("V", quadratic_relation(&fv, &x, &y, &a, &b)?, T::zero()),
        Equation::new("W", quadratic_relation(&fw, &x, &y, &a, &b)?, T::zero()),
    ])
}

/// `Δ(x)` on the first `n` variables when `r = 1`, and zero otherwise.
fn special_rhs<T: Ring>(x: &[T], n: usize, r: usize) -> T {
    if r == 1 {
        delta(&x[..n])
    } else {
        T::zero()
    }
}

pub(crate) fn special_pf<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (m, r) = (p.get("m"), p.get("r"));
    need(m >= 1 && r >= 1, "needs m, r >= 1")?;
    let n = 2 * m;
    let x = cx.vec("x", n * r);
    let e = m as u32;
    let a = skew(n * r, |i, j| {
        let diff = x[j].pow(e).sub(&x[i].pow(e));
        cx.div(&diff.mul(&diff), &x[j].sub(&x[i]))
    })?;
    single("pf", pfaffian(&a), special_rhs(&x, n, r))
}

pub(crate) fn special_hyppf<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (m, r) = (p.get("m"), p.get("r"));
    need(m >= 1 && r >= 1, "needs m, r >= 1")?;
    let n = 2 * m;
    let x = cx.vec("x", n * r);
    let t = AlternatingTensor::from_fn(n, n * r, |idx| {
        delta(&idx.iter().map(|&i| x[i].clone()).collect::<Vec<_>>())
    });
    single("hyperpf", hyperpfaffian(&t)?, special_rhs(&x, n, r))
}

pub(crate) fn hyper_v<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    need(n >= 2 && n.is_multiple_of(2), "needs even n >= 2")?;
    let (x, a) = (cx.vec("x", 2 * n), cx.vec("a", 2 * n));
    let t = AlternatingTensor::from_fn(n, 2 * n, |idx| {
        let weight = T::one().add(&prod(idx.iter().map(|&i| a[i].clone())));
        weight.mul(&delta(&idx.iter().map(|&i| x[i].clone()).collect::<Vec<_>>()))
    });
    single("det", det_v(n, n, &x, &a)?, hyperpfaffian(&t)?)
}

pub(crate) fn hyper_u<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let n = p.get("n");
    need(n >= 2 && n.is_multiple_of(2), "needs even n >= 2")?;
    let [x, y, a, b] = ["x", "y", "a", "b"].map(|v| cx.vec(v, 2 * n));
    let t = AlternatingTensor::from_fn(n, 2 * n, |idx| {
        let weight = prod(idx.iter().map(|&i| a[i].clone())).add(&prod(idx.iter().map(|&i| b[i].clone())));
        let brackets = prod(upper_pairs(n).map(|(s, t)| {
            let (is, it) = (idx[s], idx[t]);
            bracket(&y[is], &y[it], &x[is], &x[it])
        }));
        weight.mul(&brackets)
    });
    single("det", det_u(n, n, &x, &y, &a, &b)?, hyperpfaffian(&t)?)
}

fn factorial(k: usize) -> Rational {
    (1..=k).fold(rat(1), |acc, i| acc * rat(i as i64))
}

pub(crate) fn compo<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, r) = (p.get("n"), p.get("r"));
    need(n >= 2 && n % 2 == 0 && r >= 1, "needs even n >= 2 and r >= 1")?;
    let m = n / 2;
    let a = var_skew(cx, "a", n * r);
    let lhs = hyperpfaffian(&blocked_tensor(&a, n)?)?;
    let coef = factorial(m * r) / (factorial(m).pow(r as i32) * factorial(r));
    single("hyperpf", lhs, pfaffian(&a).scale(&coef))
}

pub(crate) fn det_schur<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp, q, e) = (p.get("n"), p.get("p"), p.get("q"), p.get("e"));
    need(n >= 1, "needs n >= 1")?;
    let (x, y, z) = (cx.vec("x", n), cx.vec("y", n), cx.vec("z", pp + q));
    let entry = Partition::rectangle(q + 1, e + n - 1);
    let m = square(n, |i, j| Ok(schur_of(&entry, &pair(&x[i], &y[j], &z))))?;
    let lhs = over(cx, det_of(&m)?, &cat(&[&differences(&x), &differences(&y)]))?;
    let rhs = sgn::<T>(binom2(n))
        .mul(&schur_of(&Partition::rectangle(q, e + n), &z).pow(n as u32 - 1))
        .mul(&schur_of(&Partition::rectangle(q + n, e), &cat(&[&x, &y, &z])));
    single("det", lhs, rhs)
}

pub(crate) fn pf_schur<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, pp, q, r, s) = (p.get("n"), p.get("p"), p.get("q"), p.get("r"), p.get("s"));
    let (e, f) = (p.get("e"), p.get("f"));
    need(n >= 1, "needs n >= 1")?;
    let (x, z, w) = (cx.vec("x", 2 * n), cx.vec("z", pp + q), cx.vec("w", r + s));
    let (sz, sw) = (Partition::rectangle(q + 1, e + n - 1), Partition::rectangle(s + 1, f + n - 1));
    let m = skew(2 * n, |i, j| {
        Ok(x[j]
            .sub(&x[i])
            .mul(&schur_of(&sz, &pair(&x[i], &x[j], &z)))
            .mul(&schur_of(&sw, &pair(&x[i], &x[j], &w))))
    })?;
    let lhs = over(cx, pfaffian(&m), &differences(&x))?;
    let k = n as u32 - 1;
    let rhs = schur_of(&Partition::rectangle(q, e + n), &z)
        .pow(k)
        .mul(&schur_of(&Partition::rectangle(s, f + n), &w).pow(k))
        .mul(&schur_of(&Partition::rectangle(n + q, e), &cat(&[&x, &z])))
        .mul(&schur_of(&Partition::rectangle(n + s, f), &cat(&[&x, &w])));
    single("pf", lhs, rhs)
}

pub(crate) fn pf_schur2<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, e, f, zc, wc) = (p.get("n"), p.get("e"), p.get("f"), p.get("p"), p.get("r"));
    need(n >= 1, "needs n >= 1")?;
    let (x, z, w) = (cx.vec("x", 2 * n), cx.vec("z", zc), cx.vec("w", wc));
    let (dz, dw) = ((e + n - 1) as i64, (f + n - 1) as i64);
    let m = skew(2 * n, |i, j| {
        Ok(x[j]
            .sub(&x[i])
            .mul(&h_complete_of(dz, &pair(&x[i], &x[j], &z)))
            .mul(&h_complete_of(dw, &pair(&x[i], &x[j], &w))))
    })?;
    let lhs = over(cx, pfaffian(&m), &differences(&x))?;
    let rhs = schur_of(&Partition::rectangle(n, e), &cat(&[&x, &z]))
        .mul(&schur_of(&Partition::rectangle(n, f), &cat(&[&x, &w])));
    single("pf", lhs, rhs)
}

pub(crate) fn pf_schur3<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, e, f, zc, wc) = (p.get("n"), p.get("e"), p.get("f"), p.get("zc"), p.get("wc"));
    need(n >= 1, "needs n >= 1")?;
    let (zi, wi) = (cx.ids("z", zc), cx.ids("w", wc));
    let z: Vec<T> = cx.vec("z", zc);
    let w: Vec<T> = cx.vec("w", wc);
    let b = build_b(n, e, f, &zi, &wi);
    let mus = Partition::all_in_box(n, e);
    let nus = Partition::all_in_box(n, f);
    let mut smu = Vec::with_capacity(mus.len());
    for mu in &mus {
        smu.push(schur_of(&mu.complement(n, e)?, &z));
    }
    let mut snu = Vec::with_capacity(nus.len());
    for nu in &nus {
        snu.push(schur_of(&nu.complement(n, f)?, &w));
    }
    let mut out = Vec::new();
    for lam in Partition::all_in_box(2 * n, e + f) {
        let mut lhs = T::zero();
        for (mu, sm) in mus.iter().zip(&smu) {
            for (nu, sn) in nus.iter().zip(&snu) {
                let c = lr_bruteforce(&lam, mu, nu);
                if c > 0 {
                    lhs = lhs.add(&sm.mul(sn).mul(&T::from_int(c as i64)));
                }
            }
        }
        let rhs = cx.lift(&b_subpfaffian(&b, &lam, n)?);
        out.push(Equation::new(lam.to_string(), lhs, rhs));
    }
    Ok(out)
}

pub(crate) fn minor_sum<T: Scalar>(p: &Params, cx: &mut Ctx<T>) -> Built<T> {
    let (n, big) = (p.get("n"), p.get("N"));
    let x = var_matrix(cx, "x", 2 * n, big);
    let a = var_skew(cx, "a", big);
    let rows: Vec<usize> = (0..2 * n).collect();
    let mut lhs = T::zero();
    for idx in combinations(big, 2 * n) {
        lhs = lhs.add(&sub_pfaffian(&a, &idx)?.mul(&x.minor_det(&rows, &idx)?));
    }
    let congruent = x.mul(&a.to_matrix())?.mul(&x.transpose())?;
    single("minor sum", lhs, pfaffian(&SkewMatrix::from_upper(&congruent)?))
}
