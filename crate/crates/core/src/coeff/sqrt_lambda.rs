use std::fmt;
use std::ops::Mul;

use super::laurent::LaurentPoly;
use super::ratfn::RationalFn;
use crate::error::Result;

/// Scalar of the form `(sqrt(lambda))^h * c` with `h` in `{0, 1}` and
/// `c` in `Q(q, z)`.
///
/// Even powers of `sqrt(lambda)` are folded into `c` through
/// `sqrt(lambda)^2 = lambda = (z + 1 - q)/(q z)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqrtLambdaScalar {
    half_power: u8,
    coeff: RationalFn,
}

impl SqrtLambdaScalar {
    pub fn new(half_power: i64, coeff: RationalFn) -> Result<Self> {
        let folded = RationalFn::lambda().pow(half_power.div_euclid(2))?;
        Ok(SqrtLambdaScalar {
            half_power: half_power.rem_euclid(2) as u8,
            coeff: &coeff * &folded,
        }
        .normalized())
    }

    pub fn from_rational(coeff: RationalFn) -> Self {
        SqrtLambdaScalar { half_power: 0, coeff }
    }

    pub fn one() -> Self {
        Self::from_rational(RationalFn::one())
    }

    pub fn sqrt_lambda() -> Self {
        SqrtLambdaScalar {
            half_power: 1,
            coeff: RationalFn::one(),
        }
    }

    /// `(sqrt(lambda))^e`
    pub fn sqrt_lambda_pow(e: i64) -> Result<Self> {
        Self::new(e, RationalFn::one())
    }

    fn normalized(mut self) -> Self {
        if self.coeff.is_zero() {
            self.half_power = 0;
        }
        self
    }

    pub fn half_power(&self) -> u8 {
        self.half_power
    }

    pub fn coeff(&self) -> &RationalFn {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The scalar as an element of `Q(q, z)`, when the grading is even.
    pub fn as_rational(&self) -> Option<&RationalFn> {
        (self.half_power == 0).then_some(&self.coeff)
    }

    pub fn inverse(&self) -> Result<Self> {
        let c = self.coeff.inverse()?;
        if self.half_power == 0 {
            Ok(Self::from_rational(c))
        } else {
            // 1/(c sqrt(l)) = sqrt(l) / (c l)
            Ok(SqrtLambdaScalar {
                half_power: 1,
                coeff: &c * &RationalFn::lambda().inverse()?,
            })
        }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &RationalFn) -> Self {
        SqrtLambdaScalar {
            half_power: self.half_power,
            coeff: &self.coeff * c,
        }
        .normalized()
    }

    /// `Delta = -(1 - lambda q) / (sqrt(lambda) (1 - q))`, evaluated from the
    /// definition.
    pub fn delta() -> Self {
        let lambda = RationalFn::lambda();
        let q = RationalFn::from_poly(LaurentPoly::q());
        let one = RationalFn::one();
        let top = -(&one - &(&lambda * &q));
        let bottom = SqrtLambdaScalar::sqrt_lambda().scale(&(&one - &q));
        let inv = bottom.inverse().expect("sqrt(lambda)(1 - q) is nonzero");
        inv.scale(&top)
    }
}

impl<'a> Mul<&'a SqrtLambdaScalar> for &'a SqrtLambdaScalar {
    type Output = SqrtLambdaScalar;
    fn mul(self, rhs: &'a SqrtLambdaScalar) -> SqrtLambdaScalar {
        let mut coeff = &self.coeff * &rhs.coeff;
        let h = self.half_power + rhs.half_power;
        if h == 2 {
            coeff = &coeff * &RationalFn::lambda();
        }
        SqrtLambdaScalar {
            half_power: h % 2,
            coeff,
        }
        .normalized()
    }
}

impl fmt::Display for SqrtLambdaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half_power == 0 {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "lambda^(1/2)")
        } else {
            write!(f, "lambda^(1/2) * ({})", self.coeff)
        }
    }
}

impl fmt::Debug for SqrtLambdaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SqrtLambdaScalar({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_rational;

    #[test]
    fn sqrt_lambda_squared_is_lambda() {
        let s = SqrtLambdaScalar::sqrt_lambda();
        let sq = &s * &s;
        assert_eq!(sq.as_rational(), Some(&RationalFn::lambda()));
    }

    #[test]
    fn delta_simplifies_to_inverse_of_z_sqrt_lambda() {
        let delta = SqrtLambdaScalar::delta();
        let z_sqrt = SqrtLambdaScalar::sqrt_lambda().scale(&parse_rational("z").unwrap());
        let expect = z_sqrt.inverse().unwrap();
        assert_eq!(delta, expect);
        // positive sign: Delta * sqrt(lambda) * z = 1
        let prod = &(&delta * &SqrtLambdaScalar::sqrt_lambda()).scale(&parse_rational("z").unwrap())
            * &SqrtLambdaScalar::one();
        assert!(prod.as_rational().unwrap().is_one());
    }

    #[test]
    fn powers_fold() {
        let s = SqrtLambdaScalar::sqrt_lambda_pow(5).unwrap();
        assert_eq!(s.half_power(), 1);
        assert_eq!(s.coeff(), &RationalFn::lambda().pow(2).unwrap());
        let inv = SqrtLambdaScalar::sqrt_lambda_pow(-3).unwrap();
        let prod = &s * &inv;
        assert_eq!(prod.as_rational(), Some(&RationalFn::lambda()));
    }
}
