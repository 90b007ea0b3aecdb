use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::{laurent_exact_div, laurent_gcd};
use super::laurent::LaurentPoly;
use super::Rat;
use crate::error::{Result, SkeinError};

/// Element of `Q(q, z)` kept as a reduced fraction of Laurent polynomials.
///
/// Canonical form: numerator and denominator are coprime, the denominator is
/// a polynomial with no monomial factor and its leading coefficient (highest
/// `z`, then highest `q`) is 1. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        RationalFn {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `lambda = (z + 1 - q) / (q z)`.
    pub fn lambda() -> Self {
        let num = &(&LaurentPoly::z() + &LaurentPoly::one()) - &LaurentPoly::q();
        Self::canonical(num, LaurentPoly::monomial(Rat::one(), 1, 1))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = if den.as_monomial().is_some() {
            LaurentPoly::one()
        } else {
            laurent_gcd(&num, &den)
        };
        let (mut num, mut den) = if g.as_constant().is_some() {
            (num, den)
        } else {
            (
                laurent_exact_div(&num, &g).expect("gcd divides numerator"),
                laurent_exact_div(&den, &g).expect("gcd divides denominator"),
            )
        };
        let (a, b) = den.min_exps();
        if (a, b) != (0, 0) {
            den = den.shift(-a, -b);
            num = num.shift(-a, -b);
        }
        let lc = den.leading().map(|(_, c)| c.clone()).expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.recip();
            den = den.scale(&inv);
            num = num.scale(&inv);
        }
        RationalFn { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, when the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(SkeinError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RationalFn) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        Ok(RationalFn {
            num: base.num.pow(e.abs())?,
            den: base.den.pow(e.abs())?,
        }
        .recanonical())
    }

    fn recanonical(self) -> Self {
        Self::canonical(self.num, self.den)
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        Self::canonical(&self.num * p, self.den.clone())
    }

    /// Size measure used to choose elimination pivots.
    pub fn complexity(&self) -> i64 {
        self.num.degree_span() + self.den.degree_span() + (self.num.len() + self.den.len()) as i64
    }

    pub fn evaluate(&self, q0: &Rat, z0: &Rat) -> Result<Rat> {
        let d = self.den.evaluate(q0, z0)?;
        if d.is_zero() {
            return Err(SkeinError::Pole);
        }
        Ok(self.num.evaluate(q0, z0)? / d)
    }
}

impl Default for RationalFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &'a RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFn::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFn::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Add for RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: RationalFn) -> RationalFn {
        &self + &rhs
    }
}

impl<'a> Sub<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &'a RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Sub for RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: RationalFn) -> RationalFn {
        &self - &rhs
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

impl<'a> Mul<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &'a RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn::from_poly(&self.num * &rhs.num);
        }
        RationalFn::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul for RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: RationalFn) -> RationalFn {
        &self * &rhs
    }
}

/// Panics on a zero divisor; use [`RationalFn::checked_div`] to get an error.
impl<'a> Div<&'a RationalFn> for &'a RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &'a RationalFn) -> RationalFn {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| {
            if p.len() > 1 || p.to_string().starts_with('-') {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_rational;

    fn rf(s: &str) -> RationalFn {
        parse_rational(s).unwrap()
    }

    #[test]
    fn one_minus_lambda_q() {
        let lambda = RationalFn::lambda();
        let q = RationalFn::from_poly(LaurentPoly::q());
        let v = &RationalFn::one() - &(&lambda * &q);
        assert_eq!(v, rf("(q - 1)/z"));
        // q = 2, z = 3: lambda = 1/3, 1 - 2/3 = 1/3 = (2 - 1)/3
        let (q0, z0) = (Rat::from_integer(2.into()), Rat::from_integer(3.into()));
        assert_eq!(v.evaluate(&q0, &z0).unwrap(), Rat::new(1.into(), 3.into()));
    }

    #[test]
    fn lambda_at_one() {
        let one = Rat::one();
        assert_eq!(RationalFn::lambda().evaluate(&one, &one).unwrap(), one);
    }

    #[test]
    fn canonical_equality() {
        assert_eq!(rf("(q^2 - 1)/(q - 1)"), rf("q + 1"));
        assert_eq!(rf("(2*q)/(4*z)"), rf("q/(2*z)"));
        assert_eq!(rf("1/(-z)"), rf("-1/z"));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            RationalFn::one().checked_div(&RationalFn::zero()),
            Err(SkeinError::DivisionByZero)
        );
        assert!(RationalFn::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn pole() {
        let v = rf("1/(q - z)");
        let two = Rat::from_integer(2.into());
        assert_eq!(v.evaluate(&two, &two), Err(SkeinError::Pole));
    }

    #[test]
    fn display_round_trip() {
        for s in [
            "(z + 1 - q)/(q*z)",
            "(q - 1)/z",
            "-q^2 + 1/2",
            "(q^2 - q + 1)/(z^2 + q)",
        ] {
            let v = rf(s);
            assert_eq!(rf(&v.to_string()), v, "{s} -> {v}");
        }
        // monomial denominators are units and fold into the numerator
        assert!(RationalFn::lambda().as_poly().is_some());
    }
}
