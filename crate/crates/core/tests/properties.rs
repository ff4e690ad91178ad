use proptest::prelude::*;

use gvpf::algebra::{parse_rational, ratio, Assignment, Polynomial, RatFunc, Rational, Ring, VarId};
use gvpf::harness::{verify, Mode, VerifyRequest};
use gvpf::linalg::{det, pfaffian, RingMatrix, SkewMatrix};
use gvpf::lr::lr_bruteforce;
use gvpf::symfunc::{schur, schur_of, Partition};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
}

fn square(n: usize) -> impl Strategy<Value = RingMatrix<Rational>> {
    prop::collection::vec(small_rational(), n * n).prop_map(move |v| RingMatrix::new(n, n, v).unwrap())
}

fn skew() -> impl Strategy<Value = SkewMatrix<Rational>> {
    (0usize..=8).prop_flat_map(|dim| {
        prop::collection::vec(small_rational(), dim * dim).prop_map(move |v| SkewMatrix::from_fn(dim, |i, j| v[i * dim + j].clone()))
    })
}

/// Sparse polynomial in variables 0..3 with small exponents.
fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((small_rational(), 0u32..3, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        terms.into_iter().fold(Polynomial::zero(), |acc, (c, a, b, d)| {
            let m = &(&Ring::pow(&Polynomial::var(0), a) * &Ring::pow(&Polynomial::var(1), b))
                * &Ring::pow(&Polynomial::var(2), d);
            &acc + &m.scale(&c)
        })
    })
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), 3)
}

fn assignment(vals: &[Rational]) -> Assignment {
    let mut a = Assignment::new();
    for (i, v) in vals.iter().enumerate() {
        a.set(i as VarId, v.clone());
    }
    a
}

fn partition(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pfaffian_squares_to_determinant(a in skew()) {
        let pf = pfaffian(&a);
        prop_assert_eq!(pf.mul(&pf), det(&a.to_matrix()).unwrap());
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in (1usize..=5).prop_flat_map(|n| (square(n), square(n)))) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(det(&ab).unwrap(), det(&a).unwrap().mul(&det(&b).unwrap()));
        prop_assert_eq!(det(&a.transpose()).unwrap(), det(&a).unwrap());
    }

    #[test]
    fn congruence_scales_pfaffian_by_determinant(
        (x, a) in (1usize..=3).prop_flat_map(|m| (square(2 * m), prop::collection::vec(small_rational(), 4 * m * m)
            .prop_map(move |v| SkewMatrix::from_fn(2 * m, |i, j| v[i * 2 * m + j].clone()))))
    ) {
        let xa = x.mul(&a.to_matrix()).unwrap().mul(&x.transpose()).unwrap();
        let lhs = pfaffian(&SkewMatrix::from_upper(&xa).unwrap());
        prop_assert_eq!(lhs, det(&x).unwrap().mul(&pfaffian(&a)));
    }

    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        if !q.is_zero() {
            prop_assert_eq!((&p * &q).div_exact(&q), Some(p.clone()));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), v in point()) {
        let at = assignment(&v);
        let (pv, qv) = (p.eval(&at).unwrap(), q.eval(&at).unwrap());
        prop_assert_eq!((&p * &q).eval(&at).unwrap(), &pv * &qv);
        prop_assert_eq!((&p - &q).eval(&at).unwrap(), &pv - &qv);
        if let Some(f) = RatFunc::quotient(p.clone(), q.clone()) {
            if !qv.is_zero() {
                prop_assert_eq!(f.eval(&at).unwrap(), &pv / &qv);
            }
        }
    }

    #[test]
    fn rational_functions_form_a_field(p in poly(), q in poly(), r in poly(), s in poly()) {
        prop_assume!(!q.is_zero() && !s.is_zero());
        let a = RatFunc::quotient(p.clone(), q.clone()).unwrap();
        let b = RatFunc::quotient(r.clone(), s.clone()).unwrap();
        let sum = RatFunc::quotient(&(&p * &s) + &(&r * &q), &q * &s).unwrap();
        prop_assert_eq!(a.add(&b), sum);
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        if !r.is_zero() {
            prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn rational_text_round_trips(r in small_rational()) {
        prop_assert_eq!(parse_rational(&r.to_string()), Some(r));
    }

    #[test]
    fn partition_involutions(lam in partition(4, 5)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.complement(4, 5).unwrap().complement(4, 5).unwrap(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
        let (arms, legs) = lam.frobenius();
        prop_assert_eq!(Partition::from_frobenius(&arms, &legs).unwrap(), lam);
    }

    #[test]
    fn schur_values_match_the_polynomial(lam in partition(3, 3), v in point()) {
        let vars: Vec<VarId> = (0..3).collect();
        prop_assert_eq!(schur(&lam, &vars).eval(&assignment(&v)).unwrap(), schur_of(&lam, &v));
    }

    #[test]
    fn lr_coefficients_are_symmetric(lam in partition(3, 3), mu in partition(3, 2), nu in partition(2, 2)) {
        let c = lr_bruteforce(&lam, &mu, &nu);
        prop_assert_eq!(c, lr_bruteforce(&lam, &nu, &mu));
        prop_assert_eq!(c, lr_bruteforce(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()));
        if mu.size() + nu.size() != lam.size() {
            prop_assert_eq!(c, 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn identities_hold_for_any_seed(seed in any::<u64>(), name in prop::sample::select(vec!["cauchy", "schur", "main1", "main3", "sundquist", "hyper_v"])) {
        let req = VerifyRequest { trials: 3, seed, ..VerifyRequest::new(name, Mode::Numeric) };
        let report = verify(&req).unwrap();
        prop_assert!(report.passed, "{:?}", report.failures.first());
    }
}
