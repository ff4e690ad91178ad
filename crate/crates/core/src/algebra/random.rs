use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Rational;

/// Generator used for every random draw; reproducible across platforms.
pub type TrialRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for one trial, so the draws of trial `index` do not
/// depend on how trials are spread over workers.
pub fn trial_rng(seed: u64, index: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws `p/q` with `p` uniform in `[-bound, bound]` and `q` uniform in
/// `[1, bound]`.
pub fn random_rational(rng: &mut TrialRng, bound: u64) -> Rational {
    let bound = bound.max(1) as i64;
    let p = rng.gen_range(-bound..=bound);
    let q = rng.gen_range(1..=bound);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::is_canonical;

    #[test]
    fn same_seed_same_draws() {
        let a: Vec<_> = {
            let mut r = trial_rng(7, 3);
            (0..20).map(|_| random_rational(&mut r, 50)).collect()
        };
        let b: Vec<_> = {
            let mut r = trial_rng(7, 3);
            (0..20).map(|_| random_rational(&mut r, 50)).collect()
        };
        assert_eq!(a, b);
        let mut other = trial_rng(7, 4);
        let c: Vec<_> = (0..20).map(|_| random_rational(&mut other, 50)).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn draws_are_bounded_and_canonical() {
        let mut r = seeded_rng(1);
        for _ in 0..500 {
            let q = random_rational(&mut r, 9);
            assert!(is_canonical(&q));
            assert!(q.numer() <= &BigInt::from(9) && q.numer() >= &BigInt::from(-9));
            assert!(q.denom() <= &BigInt::from(9));
        }
    }
}
