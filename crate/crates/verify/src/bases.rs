use std::cmp::Ordering;
use std::collections::BTreeMap;

use skein_core::bbm::{generate_system, StrandPolicy, SystemConfig};
use skein_core::coeff::{LaurentPoly, RationalFn};
use skein_core::skein::{
    convert_to_lambda_prime, decompose_to_lower, enumerate_level, Bounds, Convention, SetKind, SkeinMonomial,
};
use skein_core::{Sign, Variant};

use crate::Outcome;

const POSITIVE: Bounds = Bounds {
    max_index: 2,
    exp_bound: 4,
    positive_only: true,
};

fn names(ms: &[SkeinMonomial]) -> Vec<String> {
    ms.iter().map(ToString::to_string).collect()
}

pub fn ordering_and_counts() -> Outcome {
    let mut out = Outcome::new();
    let lambda = enumerate_level(SetKind::Lambda, 3, POSITIVE, Convention::Decreasing);
    out.check(
        names(&lambda) == ["t^3", "t^2 t1", "t t1 t2"],
        format!(
            "level 3, positive, index <= 2, decreasing exponents: {:?}",
            names(&lambda)
        ),
    );
    let aug = enumerate_level(SetKind::LambdaAug, 3, POSITIVE, Convention::Decreasing);
    let extra: Vec<SkeinMonomial> = aug.iter().filter(|m| !lambda.contains(m)).cloned().collect();
    out.check(
        names(&extra) == ["t t1^2"],
        format!("augmented set adds {:?}; full list {:?}", names(&extra), names(&aug)),
    );
    out.note(format!(
        "with increasing exponents the same level lists {:?}",
        names(&enumerate_level(SetKind::Lambda, 3, POSITIVE, Convention::Increasing))
    ));

    for convention in [Convention::Decreasing, Convention::Increasing] {
        let cfg = |set, strands| SystemConfig {
            set,
            level: 3,
            bounds: POSITIVE,
            p: 1,
            signs: vec![Sign::Plus, Sign::Minus],
            strands,
            convention,
        };
        let all = generate_system(&cfg(SetKind::Lambda, StrandPolicy::AllStrands), None).expect("system builds");
        let first = generate_system(&cfg(SetKind::LambdaAug, StrandPolicy::FirstOnly), None).expect("system builds");
        out.check(
            all.rows.len() == 12 && first.rows.len() == 8,
            format!(
                "{convention:?}: all-strand system has {} equations, first-strand augmented system has {}",
                all.rows.len(),
                first.rows.len()
            ),
        );
    }
    out
}

fn qp(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e as i32)
}

fn add(map: &mut BTreeMap<Vec<i64>, LaurentPoly>, key: Vec<i64>, c: LaurentPoly) {
    let v = &map.remove(&key).unwrap_or_default() + &c;
    if !v.is_zero() {
        map.insert(key, v);
    }
}

/// Closed formula for `t^{k0} t_1^{k1}`, transcribed term by term.
fn index_one_formula(k0: i64, k1: i64) -> BTreeMap<Vec<i64>, LaurentPoly> {
    let qm1 = &LaurentPoly::q() - &LaurentPoly::one();
    let qm1sq = &qm1 * &qm1;
    let mut out = BTreeMap::new();
    add(&mut out, vec![k1, k0], qp(k1 - k0));
    let z = &(&qp(k1 - 1) * &qm1) * &LaurentPoly::z();
    add(&mut out, vec![k0 + k1], &z * &LaurentPoly::from_int(k1 - k0));
    for j in 0..=k1 - 2 {
        for phi in 0..=k1 - 2 - j {
            add(
                &mut out,
                vec![k0 + j + 1 + phi, k1 - 1 - j - phi],
                &qm1sq * &qp(j + phi),
            );
        }
    }
    for j in 0..=k0 - 2 {
        for phi in 0..=j {
            add(
                &mut out,
                vec![k0 + k1 - j - 1 + phi, j + 1 - phi],
                -(&qm1sq * &qp(k1 - j - 2 + phi)),
            );
        }
    }
    out
}

pub fn decomposition() -> Outcome {
    let mut out = Outcome::new();
    let (mut total, mut not_lower, mut bad_trace) = (0, Vec::new(), Vec::new());
    for level in 1..=4 {
        for m in enumerate_level(SetKind::LambdaAug, level, POSITIVE, Convention::Increasing) {
            if m.index() == 0 {
                continue;
            }
            total += 1;
            let d = decompose_to_lower(&m).expect("positive monomials decompose");
            if !d.trace_identity_holds() {
                bad_trace.push(m.to_string());
            }
            if !d.all_lower() {
                let v: Vec<String> = d.violations().iter().map(|x| x.to_string()).collect();
                not_lower.push(format!("{m} -> {}", v.join(", ")));
            }
        }
    }
    out.check(
        bad_trace.is_empty(),
        format!("trace identity exact for all {total} monomials of index 1..2, level 1..4; failures {bad_trace:?}"),
    );
    out.check(
        not_lower.is_empty(),
        format!(
            "all output monomials strictly lower: {} of {total} monomials keep a term that is not lower",
            not_lower.len()
        ),
    );
    for line in not_lower {
        out.note(format!("not strictly lower: {line}"));
    }

    let mut mismatches = Vec::new();
    for k0 in 1..=4 {
        for k1 in 1..=4 {
            let m = SkeinMonomial::new(Variant::T, vec![k0, k1]).expect("nonzero exponents");
            let got: BTreeMap<Vec<i64>, LaurentPoly> = decompose_to_lower(&m)
                .expect("positive monomials decompose")
                .terms
                .into_iter()
                .map(|(t, c)| (t.exponents().to_vec(), c))
                .collect();
            if got != index_one_formula(k0, k1) {
                mismatches.push((k0, k1));
            }
        }
    }
    out.check(
        mismatches.is_empty(),
        format!("index-1 outputs match the closed formula for 1 <= k0, k1 <= 4; mismatches {mismatches:?}"),
    );
    out
}

fn is_unit(c: &RationalFn) -> bool {
    c.as_poly().and_then(|p| p.as_monomial()).is_some()
}

struct Matrix {
    rows: usize,
    above_diagonal: Vec<String>,
    non_unit: Vec<String>,
    sorted: bool,
}

fn conversion_matrix(levels: std::ops::RangeInclusive<i64>, bounds: Bounds, convention: Convention) -> Matrix {
    let mut m = Matrix {
        rows: 0,
        above_diagonal: Vec::new(),
        non_unit: Vec::new(),
        sorted: true,
    };
    for level in levels {
        let rows = enumerate_level(SetKind::Lambda, level, bounds, convention);
        m.sorted &= rows.windows(2).all(|w| w[0].compare(&w[1]) == Ordering::Less);
        for row in rows {
            m.rows += 1;
            let diag = row.with_variant(Variant::TPrime);
            let entries = convert_to_lambda_prime(&row, convention);
            let higher: Vec<String> = entries
                .keys()
                .filter(|c| c.compare(&diag) == Ordering::Greater)
                .map(ToString::to_string)
                .collect();
            if !higher.is_empty() {
                m.above_diagonal.push(format!("{row} -> {}", higher.join(", ")));
            }
            let d = entries.get(&diag).cloned().unwrap_or_default();
            if !is_unit(&d) {
                m.non_unit.push(format!("{row}: {d}"));
            }
        }
    }
    m
}

pub fn conversion() -> Outcome {
    let mut out = Outcome::new();
    let bounds = Bounds {
        max_index: 2,
        exp_bound: 3,
        positive_only: true,
    };
    let m = conversion_matrix(1..=3, bounds, Convention::Decreasing);
    out.check(m.sorted, "rows listed in strictly increasing order");
    out.check(
        m.above_diagonal.is_empty(),
        format!(
            "levels 1..3, positive, decreasing exponents: {} rows, entries above the diagonal {:?}",
            m.rows, m.above_diagonal
        ),
    );
    out.check(
        m.non_unit.is_empty(),
        format!("diagonal entries are signed monomials; exceptions {:?}", m.non_unit),
    );

    let inc = conversion_matrix(1..=3, bounds, Convention::Increasing);
    out.note(format!(
        "increasing exponents, same range: above diagonal {:?}, non-unit diagonal {:?}",
        inc.above_diagonal, inc.non_unit
    ));
    let signed = Bounds {
        positive_only: false,
        ..bounds
    };
    for convention in [Convention::Decreasing, Convention::Increasing] {
        let s = conversion_matrix(-3..=3, signed, convention);
        out.note(format!(
            "{convention:?}, signed exponents |k_i| <= 3, levels -3..3: {} rows, {} with entries above the diagonal, {} with non-unit diagonal",
            s.rows,
            s.above_diagonal.len(),
            s.non_unit.len()
        ));
    }
    out
}
