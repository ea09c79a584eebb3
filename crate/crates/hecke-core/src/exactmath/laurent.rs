//! Sparse bivariate Laurent polynomials in `q1, q2` over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{rat, ExactError, Rat};

/// An element of Q[q1^{±1}, q2^{±1}], stored as a sparse map from
/// exponent pairs to nonzero rational coefficients. The map is ordered,
/// so equality and iteration order are canonical.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentQQ {
    terms: BTreeMap<(i64, i64), Rat>,
}

impl LaurentQQ {
    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(e1: i64, e2: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e1, e2), c);
        }
        Self { terms }
    }

    /// The variable q1.
    pub fn q1() -> Self {
        Self::monomial(1, 0, rat(1))
    }

    /// The variable q2.
    pub fn q2() -> Self {
        Self::monomial(0, 1, rat(1))
    }

    pub fn coeff(&self, e1: i64, e2: i64) -> Rat {
        self.terms.get(&(e1, e2)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Integer power, with negative exponents allowed only for unit
    /// monomials.
    pub fn pow(&self, k: i64) -> Option<Self> {
        if k == 0 {
            return Some(Self::one());
        }
        let base = if k > 0 {
            self.clone()
        } else {
            self.inv_monomial()?
        };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc * base.clone();
        }
        Some(acc)
    }

    /// Inverse when the polynomial is a single nonzero monomial
    /// (the units of the Laurent ring).
    pub fn inv_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((e1, e2), c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(-e1, -e2, c.recip()))
    }

    /// Exact evaluation at rational arguments. Fails when a negative
    /// exponent meets a zero argument.
    pub fn eval(&self, q1: &Rat, q2: &Rat) -> Result<Rat, ExactError> {
        let mut acc = Rat::zero();
        for (&(e1, e2), c) in &self.terms {
            acc += c * pow_rat(q1, e1)? * pow_rat(q2, e2)?;
        }
        Ok(acc)
    }

    fn insert_term(&mut self, key: (i64, i64), c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

fn pow_rat(base: &Rat, e: i64) -> Result<Rat, ExactError> {
    if e == 0 {
        return Ok(Rat::one());
    }
    if base.is_zero() {
        return if e > 0 {
            Ok(Rat::zero())
        } else {
            Err(ExactError::EvalAtZero)
        };
    }
    let b = if e > 0 { base.clone() } else { base.recip() };
    let mut acc = Rat::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &b;
    }
    Ok(acc)
}

impl Zero for LaurentQQ {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentQQ {
    fn one() -> Self {
        Self::constant(rat(1))
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }
}

impl Add for LaurentQQ {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.insert_term(k, c);
        }
        self
    }
}

impl AddAssign for LaurentQQ {
    fn add_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.insert_term(k, c);
        }
    }
}

impl Sub for LaurentQQ {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.insert_term(k, -c);
        }
        self
    }
}

impl SubAssign for LaurentQQ {
    fn sub_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.insert_term(k, -c);
        }
    }
}

impl Neg for LaurentQQ {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for LaurentQQ {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, a2), ca) in &self.terms {
            for (&(b1, b2), cb) in &rhs.terms {
                out.insert_term((a1 + b1, a2 + b2), ca * cb);
            }
        }
        out
    }
}

impl MulAssign for LaurentQQ {
    fn mul_assign(&mut self, rhs: Self) {
        *self = self.clone() * rhs;
    }
}

impl fmt::Display for LaurentQQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest exponents first, e.g. "q1^2*q2^-1 - 1".
        let mut first = true;
        for (&(e1, e2), c) in self.terms.iter().rev() {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut vars = Vec::new();
            if e1 != 0 {
                vars.push(if e1 == 1 { "q1".to_string() } else { format!("q1^{e1}") });
            }
            if e2 != 0 {
                vars.push(if e2 == 1 { "q2".to_string() } else { format!("q2^{e2}") });
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    #[test]
    fn eval_direct_substitution() {
        let p = LaurentQQ::q1() + LaurentQQ::q2();
        assert_eq!(p.eval(&rat(2), &rat(-1)).unwrap(), rat(1));

        let p = LaurentQQ::monomial(-1, -1, rat(1));
        assert_eq!(p.eval(&rat(2), &rat(-1)).unwrap(), ratio(-1, 2));

        let d = LaurentQQ::q1() - LaurentQQ::q2();
        let p = d.clone() * d;
        assert_eq!(p.eval(&rat(1), &rat(-1)).unwrap(), rat(4));
    }

    #[test]
    fn eval_at_zero_rejected() {
        let p = LaurentQQ::monomial(-1, 0, rat(1));
        assert_eq!(p.eval(&rat(0), &rat(1)), Err(ExactError::EvalAtZero));
        // Positive exponents at zero are fine.
        let p = LaurentQQ::q1() * LaurentQQ::q2();
        assert_eq!(p.eval(&rat(0), &rat(5)).unwrap(), rat(0));
    }

    #[test]
    fn display_format() {
        let p = LaurentQQ::monomial(2, -1, rat(1)) - LaurentQQ::one();
        assert_eq!(p.to_string(), "q1^2*q2^-1 - 1");
        assert_eq!(LaurentQQ::zero().to_string(), "0");
        assert_eq!(LaurentQQ::constant(ratio(3, 2)).to_string(), "3/2");
    }

    #[test]
    fn monomial_units() {
        let u = LaurentQQ::monomial(3, -2, ratio(2, 5));
        let inv = u.inv_monomial().unwrap();
        assert!((u * inv).is_one());
        let not_unit = LaurentQQ::q1() + LaurentQQ::one();
        assert!(not_unit.inv_monomial().is_none());
    }
}
