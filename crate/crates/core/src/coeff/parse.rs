use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::ratfn::RationalFn;
use super::Rat;
use crate::error::{Result, SkeinError};

/// Recursive-descent parser for expressions in `q`, `z` and `lambda`.
///
/// ```text
/// expr  := term (('+' | '-') term)*
/// term  := unary (('*' | '/') unary)*
/// unary := '-' unary | power
/// power := atom ('^' '-'? digits)?
/// atom  := digits | 'q' | 'z' | 'lambda' | '(' expr ')'
/// ```
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(SkeinError::parse(self.pos, msg))
    }

    fn expr(&mut self) -> Result<RationalFn> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFn> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    acc = acc
                        .checked_div(&d)
                        .map_err(|_| SkeinError::parse(at, "division by zero"))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFn> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFn> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let at = self.pos;
            let digits = self.digits()?;
            let e: i64 = digits
                .parse()
                .map_err(|_| SkeinError::parse(at, "exponent too large"))?;
            let e = if neg { -e } else { e };
            return base.pow(e).map_err(|_| SkeinError::parse(at, "negative power of zero"));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<RationalFn> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits()?;
                let n: BigInt = d.parse().expect("digits parse");
                Ok(RationalFn::from_rat(Rat::from_integer(n)))
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(RationalFn::from_poly(LaurentPoly::q()))
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(RationalFn::from_poly(LaurentPoly::z()))
            }
            Some(b'l') if self.src[self.pos..].starts_with(b"lambda") => {
                self.pos += "lambda".len();
                Ok(RationalFn::lambda())
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a rational function in `q` and `z`.
pub fn parse_rational(text: &str) -> Result<RationalFn> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

/// Parses a Laurent polynomial; fails when the expression has a
/// non-monomial denominator.
pub fn parse_laurent(text: &str) -> Result<LaurentPoly> {
    let v = parse_rational(text)?;
    v.as_poly()
        .cloned()
        .ok_or_else(|| SkeinError::parse(0, "not a Laurent polynomial"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let a = parse_laurent("-q^2 + 3*q*z^-1 - 1/2").unwrap();
        let q = LaurentPoly::q();
        let expect = &(&(-&(&q * &q)) + &LaurentPoly::monomial(Rat::from_integer(3.into()), 1, -1))
            - &LaurentPoly::constant(Rat::new(1.into(), 2.into()));
        assert_eq!(a, expect);
    }

    #[test]
    fn errors_carry_position() {
        match parse_rational("q + * z") {
            Err(SkeinError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_rational("q^").is_err());
        assert!(parse_rational("(q").is_err());
        assert!(parse_rational("1/(q - q)").is_err());
        assert!(parse_laurent("1/(q + 1)").is_err());
    }

    #[test]
    fn lambda_keyword() {
        assert_eq!(parse_rational("lambda").unwrap(), RationalFn::lambda());
        assert_eq!(parse_rational("(z + 1 - q)/(q*z)").unwrap(), RationalFn::lambda());
    }
}
