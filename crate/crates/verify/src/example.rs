use std::collections::BTreeMap;

use skein_core::bbm::{band_scalar, equation_for, span_membership, Form};
use skein_core::braid::parse_word;
use skein_core::coeff::{parse_laurent, parse_rational, RationalFn};
use skein_core::linalg::SpanResult;
use skein_core::skein::SkeinMonomial;
use skein_core::trace::{trace_word, SMonomial, TraceValue};
use skein_core::Sign;

use crate::Outcome;

fn tr(word: &str, strands: usize) -> TraceValue {
    trace_word(&parse_word(word, strands).expect("well-formed word"))
}

fn mono(s: &str) -> SkeinMonomial {
    s.parse().expect("well-formed monomial")
}

fn form(t: &TraceValue) -> Form {
    t.terms()
        .iter()
        .map(|(k, v)| (k.clone(), RationalFn::from_poly(v.clone())))
        .collect()
}

fn combine(parts: &[(&Form, RationalFn)]) -> Form {
    let mut acc: BTreeMap<SMonomial, RationalFn> = BTreeMap::new();
    for (f, c) in parts {
        for (k, v) in f.iter() {
            let next = acc.get(k).cloned().unwrap_or_default() + v * c;
            if next.is_zero() {
                acc.remove(k);
            } else {
                acc.insert(k.clone(), next);
            }
        }
    }
    acc
}

pub fn worked_example() -> Outcome {
    let mut out = Outcome::new();
    let a = parse_laurent("q^2 - q + 1").expect("literal");
    let b = parse_laurent("q*(q - 1)*z").expect("literal");

    let mut rhs = tr("t^2 t1", 2).scale(&a);
    rhs.add_scaled(&tr("t^3", 1), &b);
    let lhs = tr("t t1^2", 2);
    out.check(
        lhs == rhs,
        format!("tr(t t1^2) = (q^2 - q + 1) tr(t^2 t1) + q(q - 1)z tr(t^3); tr(t t1^2) = {lhs}"),
    );

    let mut literal = tr("t1^2 t2", 3).scale(&a);
    literal.add_scaled(&tr("t1^3", 2), &b);
    out.note(format!(
        "same line with t1^2 t2 and t1^3 in place of t^2 t1 and t^3 holds: {}",
        lhs == literal
    ));

    for p in -2..=2 {
        let tp = if p == 0 { String::new() } else { format!("t^{p} ") };
        let moved = tr(&format!("{tp}t1 t2^2 g2 g1 g2^-1"), 3);
        let mut expansion = tr(&format!("{tp}t1^2 t2 g1"), 3).scale(&a);
        expansion.add_scaled(&tr(&format!("{tp}t1^3 g1"), 2), &b);
        out.check(
            moved == expansion,
            format!(
                "p = {p}: tr(t^p t1 t2^2 g2 g1 g2^-1) = (q^2 - q + 1) tr(t^p t1^2 t2 g1) + q(q - 1)z tr(t^p t1^3 g1)"
            ),
        );
    }

    let (ra, rb) = (RationalFn::from_poly(a.clone()), RationalFn::from_poly(b.clone()));
    for p in [1, 2] {
        let w = |s: &str| tr(&s.replace("{p}", &p.to_string()), 3);
        for sigma in [1i64, -1] {
            let c = &band_scalar(3, Sign::Plus) * &RationalFn::from_int(-sigma);
            let moved_eq = combine(&[
                (&form(&tr("t t1^2", 2)), RationalFn::one()),
                (&form(&w("t^{p} t1 t2^2 g2 g1 g2^-1")), c.clone()),
            ]);
            let first_cube = combine(&[
                (&form(&tr("t^3", 1)), RationalFn::one()),
                (&form(&w("t^{p} t1^3 g1")), c.clone()),
            ]);
            let first_mixed = combine(&[
                (&form(&tr("t^2 t1", 2)), RationalFn::one()),
                (&form(&w("t^{p} t1^2 t2 g1")), c),
            ]);
            let residual = combine(&[
                (&moved_eq, RationalFn::one()),
                (&first_mixed, -&ra),
                (&first_cube, -&rb),
            ]);
            out.check(
                residual.is_empty(),
                format!("p = {p}, scalar sign {sigma:+}: the m = 2 equation minus (q^2 - q + 1) E(t^2 t1) and q(q - 1)z E(t^3) vanishes"),
            );
        }

        let target = equation_for(&mono("t t1^2"), 2, Sign::Plus, p).expect("valid equation");
        let gens = [
            equation_for(&mono("t^3"), 1, Sign::Plus, p).expect("valid equation"),
            equation_for(&mono("t^2 t1"), 1, Sign::Plus, p).expect("valid equation"),
        ];
        let expect = [
            parse_rational("q*(q - 1)*z").expect("literal"),
            parse_rational("q^2 - q + 1").expect("literal"),
        ];
        match span_membership(&target, &gens) {
            SpanResult::InSpan(c) => {
                let same = c[..] == expect[..];
                let flipped = c.iter().zip(&expect).all(|(x, y)| *x == -y);
                out.check(
                    same || flipped,
                    format!("p = {p}: span coefficients t^3 -> {}, t^2 t1 -> {}", c[0], c[1]),
                );
            }
            SpanResult::NotInSpan { .. } => out.check(false, format!("p = {p}: target not in the span")),
        }
    }
    out
}
