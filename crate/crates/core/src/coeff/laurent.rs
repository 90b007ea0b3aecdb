use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Result, SkeinError};

/// Exponent pair `(q, z)`.
pub type Exps = (i32, i32);

/// Laurent polynomial in `q` and `z` with rational coefficients.
///
/// Terms are kept in a sorted map without zero coefficients, so two values are
/// equal exactly when their maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Exps, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rat::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: Rat, qe: i32, ze: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((qe, ze), c);
        }
        LaurentPoly { terms }
    }

    /// `q^e`
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Rat::one(), e, 0)
    }

    /// `z^e`
    pub fn z_pow(e: i32) -> Self {
        Self::monomial(Rat::one(), 0, e)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn z() -> Self {
        Self::z_pow(1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, Rat)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: Exps) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    /// Single term `c q^a z^b`, if the polynomial is one.
    pub fn as_monomial(&self) -> Option<(Exps, &Rat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Returns the constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        match self.as_monomial() {
            Some(((0, 0), c)) => Some(c.clone()),
            _ => None,
        }
    }

    pub fn add_term(&mut self, e: Exps, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by `q^a z^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), v)| ((x + a, y + b), v.clone()))
                .collect(),
        }
    }

    /// Minimum `q` and `z` exponents over all terms; `(0, 0)` for zero.
    pub fn min_exps(&self) -> Exps {
        let mut it = self.terms.keys();
        let Some(&(mut a, mut b)) = it.next() else {
            return (0, 0);
        };
        for &(x, y) in it {
            a = a.min(x);
            b = b.min(y);
        }
        (a, b)
    }

    pub fn max_exps(&self) -> Exps {
        let mut it = self.terms.keys();
        let Some(&(mut a, mut b)) = it.next() else {
            return (0, 0);
        };
        for &(x, y) in it {
            a = a.max(x);
            b = b.max(y);
        }
        (a, b)
    }

    /// Width of the Newton box; a cheap size measure used for pivoting.
    pub fn degree_span(&self) -> i64 {
        if self.is_zero() {
            return 0;
        }
        let (a, b) = self.min_exps();
        let (c, d) = self.max_exps();
        (c - a) as i64 + (d - b) as i64
    }

    /// Leading term under the printing order (highest `z`, then highest `q`).
    pub fn leading(&self) -> Option<(Exps, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| (a.1, a.0).cmp(&(b.1, b.0)))
            .map(|(e, c)| (*e, c))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            let mut acc = Self::one();
            let mut base = self.clone();
            let mut k = e as u64;
            while k > 0 {
                if k & 1 == 1 {
                    acc = &acc * &base;
                }
                k >>= 1;
                if k > 0 {
                    base = &base * &base;
                }
            }
            Ok(acc)
        } else {
            self.inverse_unit()?.pow(-e)
        }
    }

    /// Inverse of a unit (a single monomial).
    pub fn inverse_unit(&self) -> Result<Self> {
        match self.as_monomial() {
            Some(((a, b), c)) => Ok(Self::monomial(c.recip(), -a, -b)),
            None if self.is_zero() => Err(SkeinError::DivisionByZero),
            None => Err(SkeinError::Invalid(format!("{self} is not a unit"))),
        }
    }

    /// Exact value at `q = q0`, `z = z0`.
    pub fn evaluate(&self, q0: &Rat, z0: &Rat) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * rat_pow(q0, a)? * rat_pow(z0, b)?;
        }
        Ok(acc)
    }
}

pub(crate) fn rat_pow(x: &Rat, e: i32) -> Result<Rat> {
    if e < 0 && x.is_zero() {
        return Err(SkeinError::Pole);
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = Rat::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    Ok(acc)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, a: i32, b: i32) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("q", a), ("z", b)] {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

fn write_rat(f: &mut fmt::Formatter<'_>, c: &Rat) -> fmt::Result {
    if c.denom().is_one() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Exps> = self.terms.keys().collect();
        keys.sort_by_key(|e| std::cmp::Reverse((e.1, e.0)));
        for (i, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let unit = *e == (0, 0);
            if unit {
                write_rat(f, &abs)?;
            } else {
                if !abs.is_one() {
                    write_rat(f, &abs)?;
                    write!(f, "*")?;
                }
                write_monomial(f, e.0, e.1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn cancellation() {
        let p = &(&LaurentPoly::q() - &LaurentPoly::one()) + &LaurentPoly::one();
        assert_eq!(p, LaurentPoly::q());
        let zero = &LaurentPoly::q() - &LaurentPoly::q();
        assert!(zero.is_zero());
        assert_eq!(zero.evaluate(&r(5), &r(7)).unwrap(), r(0));
    }

    #[test]
    fn evaluate_monomial() {
        let p = LaurentPoly::monomial(r(1), 1, -1);
        assert_eq!(p.evaluate(&r(2), &r(4)).unwrap(), Rat::new(1.into(), 2.into()));
        assert_eq!(p.evaluate(&r(2), &r(0)), Err(SkeinError::Pole));
    }

    #[test]
    fn display() {
        let q = LaurentPoly::q();
        let p = &(&q * &q - q.clone()) + &LaurentPoly::one();
        assert_eq!(p.to_string(), "q^2 - q + 1");
        let m = LaurentPoly::monomial(Rat::new((-3).into(), 2.into()), 1, -1);
        assert_eq!(m.to_string(), "-3/2*q*z^-1");
    }

    #[test]
    fn unit_powers() {
        let m = LaurentPoly::monomial(r(2), 1, -2);
        let inv = m.pow(-1).unwrap();
        assert!((&m * &inv).is_one());
        assert!((&LaurentPoly::q() + &LaurentPoly::one()).pow(-1).is_err());
    }
}
