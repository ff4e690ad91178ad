use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{self as algebra, AlgebraError, Assignment, Rational, VarId, VariableTable};

/// A power product `v0^e0 * v1^e1 * ...`, stored sparsely as `(var, exp)`
/// pairs sorted by variable id with every exponent positive.
///
/// Ordering is graded lexicographic: total degree first, then the exponent
/// of the lowest-numbered variable, and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(var: VarId, exp: u32) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            Monomial(vec![(var, exp)])
        }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs; repeated
    /// variables are merged and zero exponents dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, var: VarId) -> u32 {
        self.0
            .binary_search_by_key(&var, |&(v, _)| v)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        for (&(va, ea), &(vb, eb)) in self.0.iter().zip(other.0.iter()) {
            if va != vb {
                // the side holding the lower variable has the larger exponent there
                return if va < vb { Ordering::Greater } else { Ordering::Less };
            }
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// The term map never holds a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(var: VarId) -> Self {
        Self::term(Monomial::var(var, 1), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Largest monomial in graded-lex order, with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `∏ vars[i]^exps[i]` viewed as a polynomial in the
    /// remaining variables.
    pub fn coefficient_in(&self, vars: &[VarId], exps: &[u32]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if vars.iter().zip(exps).all(|(&v, &e)| m.exponent(v) == e) {
                let rest = m.pairs().iter().copied().filter(|(v, _)| !vars.contains(v));
                out.add_term(Monomial(rest.collect()), c.clone());
            }
        }
        out
    }

    /// The value of the polynomial if it has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(n, k)| (n.mul(m), k * c)).collect(),
        }
    }

    /// Evaluates at a rational point; every variable must be assigned.
    pub fn eval(&self, point: &Assignment) -> Result<Rational, AlgebraError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m.pairs() {
                let x = point
                    .get(v)
                    .ok_or_else(|| AlgebraError::MissingVariable(format!("v{v}")))?;
                value *= algebra::Ring::pow(x, e);
            }
            total += value;
        }
        Ok(total)
    }

    /// Exact quotient by `divisor`, or `None` if the division leaves a
    /// remainder (or `divisor` is zero).
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = divisor.leading()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((m, c)) = rem.leading() {
            let t = m.div(dm)?;
            let k = c / dc;
            for (n, d) in &divisor.terms {
                rem.add_term(n.mul(&t), -(d * &k));
            }
            quot.add_term(t, k);
        }
        Some(quot)
    }

    /// Rational-coefficient formatter that resolves variable names.
    pub fn display<'a>(&'a self, table: &'a VariableTable) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, table: Some(table) }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    table: Option<&'a VariableTable>,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
                continue;
            }
            if c.is_one() {
            } else if (-c).is_one() {
                write!(f, "-")?;
            } else {
                write!(f, "{c}*")?;
            }
            for (i, &(v, e)) in m.pairs().iter().enumerate() {
                if i > 0 {
                    write!(f, "*")?;
                }
                match self.table.and_then(|t| t.name(v)) {
                    Some(name) => write!(f, "{name}")?,
                    None => write!(f, "v{v}")?,
                }
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay { poly: self, table: None }.fmt(f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let (outer, inner) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        if outer.len() == 1 {
            let (m, c) = outer.terms.iter().next().unwrap();
            return inner.mul_term(m, c);
        }
        let mut out = Polynomial::zero();
        for (ma, ca) in &outer.terms {
            for (mb, cb) in &inner.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl algebra::Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn from_rational(r: &Rational) -> Self {
        Polynomial::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
    fn scale(&self, c: &Rational) -> Self {
        Polynomial::scale(self, c)
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.div_exact(rhs)
    }
}
