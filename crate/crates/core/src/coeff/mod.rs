//! Coefficient rings: Laurent polynomials in `q, z`, their fraction field and
//! scalars graded by half powers of `lambda`.

mod gcd;
mod laurent;
mod parse;
mod ratfn;
mod sqrt_lambda;

pub use gcd::{laurent_exact_div, laurent_gcd};
pub use laurent::{Exps, LaurentPoly};
pub use parse::{parse_laurent, parse_rational};
pub use ratfn::RationalFn;
pub use sqrt_lambda::SqrtLambdaScalar;

pub type Rat = num_rational::BigRational;

/// Small integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Renders `Σ c_i · w_i` as `c1*w1 + (c2)*w2 - w3`, writing `1` for the
/// empty word. Terms with zero coefficients must already be removed.
pub fn format_combination<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, &'a LaurentPoly)>,
{
    let mut out = String::new();
    for (i, (word, c)) in terms.into_iter().enumerate() {
        let cs = c.to_string();
        let (neg, body) = match (c.len(), cs.strip_prefix('-')) {
            (1, Some(rest)) => (true, rest.to_string()),
            _ => (false, cs),
        };
        let coeff = if c.len() > 1 {
            let (a, b) = c.min_exps();
            if (a, b) == (0, 0) || a < 0 || b < 0 {
                format!("({body})")
            } else {
                let unit = LaurentPoly::monomial(rat(1), a, b);
                format!("({})*{unit}", c.shift(-a, -b))
            }
        } else {
            body
        };
        let term = match (coeff.as_str(), word.as_str()) {
            (c, "1") => c.to_string(),
            ("1", w) => w.to_string(),
            (c, w) => format!("{c}*{w}"),
        };
        let sep = match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sep);
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
