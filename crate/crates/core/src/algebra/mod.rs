//! Exact scalars: big rationals, sparse multivariate polynomials over them,
//! and rational functions with factored denominators.
//!
//! Every algorithm in the crate is generic over [`Ring`], so the same
//! determinant or Pfaffian code runs on rational points (numeric checks) and
//! on indeterminates (symbolic checks).

mod poly;
mod random;
mod ratfunc;
mod vars;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use poly::{Monomial, Polynomial};
pub use random::{random_rational, seeded_rng, trial_rng, TrialRng};
pub use ratfunc::RatFunc;
pub use vars::{Assignment, VarId, VariableTable};

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("variable {0} has no value in the assignment")]
    MissingVariable(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// A commutative ring with exact arithmetic.
///
/// Methods take `&self` so generic code never has to reason about moves;
/// implementors are free to also provide the `std::ops` operators.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    /// True for scalars where division is cheap and always exact (the
    /// rationals). Linear algebra uses this to choose elimination over
    /// division-free expansion.
    const CHEAP_DIVISION: bool = false;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Exact quotient; `None` when `rhs` is zero or does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale(&self, c: &Rational) -> Self {
        self.mul(&Self::from_rational(c))
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible, so
/// [`Ring::exact_div`] only fails on a zero divisor.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self> {
        Self::one().exact_div(self)
    }
}

/// `(-1)^e` as a ring element.
pub fn sign<T: Ring>(e: i64) -> T {
    if e.rem_euclid(2) == 0 {
        T::one()
    } else {
        T::one().neg()
    }
}

/// Sum of a sequence of ring elements.
pub fn sum<'a, T: Ring>(items: impl IntoIterator<Item = &'a T>) -> T {
    items.into_iter().fold(T::zero(), |acc, x| acc.add(x))
}

/// Product of a sequence of ring elements.
pub fn product<'a, T: Ring>(items: impl IntoIterator<Item = &'a T>) -> T {
    items.into_iter().fold(T::one(), |acc, x| acc.mul(x))
}

impl Ring for Rational {
    const CHEAP_DIVISION: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Field for Rational {}

/// Shortcut for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shortcut for `num / den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q` or `p` into a canonical rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// True when `r` is stored with positive denominator and coprime parts.
pub fn is_canonical(r: &Rational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_by_squaring() {
        assert_eq!(rat(3).pow(0), rat(1));
        assert_eq!(rat(3).pow(5), rat(243));
        assert_eq!(ratio(-1, 2).pow(3), ratio(-1, 8));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("6/-4"), Some(ratio(-3, 2)));
        assert_eq!(parse_rational(" 7 "), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn sign_helper() {
        assert_eq!(sign::<Rational>(3), rat(-1));
        assert_eq!(sign::<Rational>(-2), rat(1));
    }
}
