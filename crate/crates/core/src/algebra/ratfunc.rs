use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{self as algebra, AlgebraError, Assignment, Field, Polynomial, Rational, VariableTable};

/// Quotient of polynomials with the denominator kept as a product of monic
/// factors.
///
/// Sums take the common multiple of the factor maps, so repeated factors such
/// as `x_j - x_i` never multiply up. Equality compares the cross-multiplied
/// numerators, i.e. it clears denominators before comparing.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: Polynomial,
    den: BTreeMap<Polynomial, u32>,
}

impl RatFunc {
    pub fn from_poly(p: Polynomial) -> Self {
        RatFunc { num: p, den: BTreeMap::new() }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    /// Denominator factors with multiplicities.
    pub fn denominator_factors(&self) -> impl Iterator<Item = (&Polynomial, u32)> {
        self.den.iter().map(|(f, &e)| (f, e))
    }

    pub fn denominator(&self) -> Polynomial {
        self.den
            .iter()
            .fold(Polynomial::one(), |acc, (f, &e)| &acc * &algebra::Ring::pow(f, e))
    }

    /// `p / q`; `None` if `q` is zero.
    pub fn quotient(p: Polynomial, q: Polynomial) -> Option<Self> {
        let mut r = RatFunc::from_poly(p);
        r.divide_by_factor(q, 1)?;
        r.cancel();
        Some(r)
    }

    /// Returns the polynomial if the denominator is trivial.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_empty().then_some(&self.num)
    }

    fn divide_by_factor(&mut self, f: Polynomial, e: u32) -> Option<()> {
        if let Some(c) = f.as_constant() {
            if c.is_zero() {
                return None;
            }
            self.num = self.num.scale(&algebra::Ring::pow(&c.recip(), e));
            return Some(());
        }
        let lead = f.leading()?.1.clone();
        let monic = f.scale(&lead.recip());
        self.num = self.num.scale(&algebra::Ring::pow(&lead.recip(), e));
        *self.den.entry(monic).or_insert(0) += e;
        Some(())
    }

    /// Strips denominator factors that divide the numerator.
    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<Polynomial> = self.den.keys().cloned().collect();
        for f in factors {
            let e = self.den.get_mut(&f).unwrap();
            while *e > 0 {
                match self.num.div_exact(&f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
            if *e == 0 {
                self.den.remove(&f);
            }
        }
    }

    /// Multiplier turning this denominator into `common`.
    fn cofactor(&self, common: &BTreeMap<Polynomial, u32>) -> Polynomial {
        let mut out = Polynomial::one();
        for (f, &e) in common {
            let have = self.den.get(f).copied().unwrap_or(0);
            if e > have {
                out = &out * &algebra::Ring::pow(f, e - have);
            }
        }
        out
    }

    fn common_den(&self, other: &Self) -> BTreeMap<Polynomial, u32> {
        let mut common = self.den.clone();
        for (f, &e) in &other.den {
            let slot = common.entry(f.clone()).or_insert(0);
            *slot = (*slot).max(e);
        }
        common
    }

    pub fn eval(&self, point: &Assignment) -> Result<Rational, AlgebraError> {
        let mut den = Rational::one();
        for (f, &e) in &self.den {
            den *= algebra::Ring::pow(&f.eval(point)?, e);
        }
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.num.eval(point)? / den)
    }

    pub fn display<'a>(&'a self, table: &'a VariableTable) -> impl fmt::Display + 'a {
        RatDisplay { r: self, table }
    }
}

struct RatDisplay<'a> {
    r: &'a RatFunc,
    table: &'a VariableTable,
}

impl fmt::Display for RatDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.den.is_empty() {
            return write!(f, "{}", self.r.num.display(self.table));
        }
        write!(f, "({})/(", self.r.num.display(self.table))?;
        for (i, (p, &e)) in self.r.den.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "({})", p.display(self.table))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        write!(f, ")")
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let common = self.common_den(other);
        &self.num * &self.cofactor(&common) == &other.num * &other.cofactor(&common)
    }
}

impl From<Polynomial> for RatFunc {
    fn from(p: Polynomial) -> Self {
        RatFunc::from_poly(p)
    }
}

impl RatFunc {
    fn combine(&self, rhs: &Self, subtract: bool) -> Self {
        if self.den == rhs.den {
            let num = if subtract { &self.num - &rhs.num } else { &self.num + &rhs.num };
            let mut r = RatFunc { num, den: self.den.clone() };
            if !r.den.is_empty() {
                r.cancel();
            }
            return r;
        }
        let common = self.common_den(rhs);
        let a = &self.num * &self.cofactor(&common);
        let b = &rhs.num * &rhs.cofactor(&common);
        let num = if subtract { &a - &b } else { &a + &b };
        let mut r = RatFunc { num, den: common };
        r.cancel();
        r
    }
}

impl algebra::Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Polynomial::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(Polynomial::one())
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::from_poly(Polynomial::constant(r.clone()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        self.combine(rhs, false)
    }
    fn sub(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        self.combine(rhs, true)
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return algebra::Ring::zero();
        }
        let mut den = self.den.clone();
        for (f, &e) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += e;
        }
        let mut r = RatFunc { num: &self.num * &rhs.num, den };
        if !(self.den.is_empty() && rhs.den.is_empty()) {
            r.cancel();
        }
        r
    }
    fn neg(&self) -> Self {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
    fn scale(&self, c: &Rational) -> Self {
        if Zero::is_zero(c) {
            return algebra::Ring::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.inv_mul(rhs)
    }
}

impl RatFunc {
    fn inv_mul(&self, rhs: &Self) -> Option<Self> {
        if rhs.num.is_zero() {
            return None;
        }
        if self.num.is_zero() {
            return Some(algebra::Ring::zero());
        }
        let mut r = self.clone();
        for (f, &e) in &rhs.den {
            r.num = &r.num * &algebra::Ring::pow(f, e);
        }
        // try plain polynomial division first so exact quotients stay flat
        match r.num.div_exact(&rhs.num) {
            Some(q) => r.num = q,
            None => r.divide_by_factor(rhs.num.clone(), 1)?,
        }
        r.cancel();
        Some(r)
    }
}

impl Field for RatFunc {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Ring};

    fn v(i: u32) -> RatFunc {
        RatFunc::from_poly(Polynomial::var(i))
    }

    #[test]
    fn partial_fractions() {
        // 1/(x-1) - 1/(x+1) = 2/(x^2-1)
        let x = v(0);
        let one = RatFunc::one();
        let a = one.exact_div(&x.sub(&one)).unwrap();
        let b = one.exact_div(&x.add(&one)).unwrap();
        let lhs = a.sub(&b);
        let rhs = RatFunc::from_rational(&rat(2)).exact_div(&x.mul(&x).sub(&one)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn antisymmetric_factors_share_a_key() {
        let (x, y) = (v(0), v(1));
        let a = RatFunc::one().exact_div(&x.sub(&y)).unwrap();
        let b = RatFunc::one().exact_div(&y.sub(&x)).unwrap();
        let s = a.add(&b);
        assert!(s.is_zero());
        assert_eq!(a.denominator_factors().count(), 1);
    }

    #[test]
    fn cancellation_to_polynomial() {
        let (x, y) = (v(0), v(1));
        let q = x.mul(&x).sub(&y.mul(&y)).exact_div(&x.sub(&y)).unwrap();
        assert_eq!(q.as_polynomial(), Some(&(&Polynomial::var(0) + &Polynomial::var(1))));
    }

    #[test]
    fn evaluation_and_poles() {
        let x = v(0);
        let r = RatFunc::one().exact_div(&x.sub(&RatFunc::one())).unwrap();
        let p: Assignment = [(0, rat(3))].into_iter().collect();
        assert_eq!(r.eval(&p).unwrap(), crate::algebra::ratio(1, 2));
        let pole: Assignment = [(0, rat(1))].into_iter().collect();
        assert_eq!(r.eval(&pole), Err(AlgebraError::DivisionByZero));
        assert!(RatFunc::one().exact_div(&RatFunc::zero()).is_none());
    }
}
