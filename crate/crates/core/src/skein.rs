//! Gap-free loop monomials `t^{k_0} t_1^{k_1} … t_m^{k_m}` and the sets
//! `Λ`, `Λ'`, `Λ^aug` built from them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::braid::{expand_loop, MixedBraidWord};
use crate::coeff::{LaurentPoly, RationalFn};
use crate::error::{Result, SkeinError};
use crate::hecke::add_term;
use crate::linalg::{span_solve, SpanResult};
use crate::trace::{trace_of_prime_loops, trace_word, SMonomial, TraceValue};
use crate::Variant;

/// Which way the exponents of `Λ` and `Λ'` are ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    /// `k_i ≤ k_{i+1}`
    #[default]
    Increasing,
    /// `k_i ≥ k_{i+1}`
    Decreasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetKind {
    Lambda,
    LambdaPrime,
    LambdaAug,
}

impl SetKind {
    pub fn variant(self) -> Variant {
        match self {
            SetKind::LambdaPrime => Variant::TPrime,
            _ => Variant::T,
        }
    }
}

/// Finite window used when enumerating level sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_index: usize,
    pub exp_bound: i64,
    pub positive_only: bool,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkeinMonomial {
    variant: Variant,
    exps: Vec<i64>,
}

impl SkeinMonomial {
    pub fn new(variant: Variant, exps: Vec<i64>) -> Result<Self> {
        if let Some(i) = exps.iter().position(|&k| k == 0) {
            return Err(SkeinError::Invalid(format!("exponent of index {i} is zero")));
        }
        Ok(SkeinMonomial { variant, exps })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exps
    }

    /// Highest loop index, `0` for the empty monomial.
    pub fn index(&self) -> usize {
        self.exps.len().saturating_sub(1)
    }

    pub fn level(&self) -> i64 {
        self.exps.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_ordered(&self, convention: Convention) -> bool {
        self.exps.windows(2).all(|w| match convention {
            Convention::Increasing => w[0] <= w[1],
            Convention::Decreasing => w[0] >= w[1],
        })
    }

    pub fn belongs_to(&self, set: SetKind, convention: Convention) -> bool {
        !self.exps.is_empty()
            && self.variant == set.variant()
            && (set == SetKind::LambdaAug || self.is_ordered(convention))
    }

    /// Number of strands of the expanded braid word.
    pub fn strands(&self) -> usize {
        self.exps.len().max(1)
    }

    pub fn to_braid_word(&self) -> MixedBraidWord {
        let n = self.strands();
        let mut w = MixedBraidWord::identity(n);
        for (i, &k) in self.exps.iter().enumerate() {
            w = w.concat(&expand_loop(i, self.variant, k, n).expect("index below strands"));
        }
        w
    }

    pub fn with_variant(&self, variant: Variant) -> Self {
        SkeinMonomial {
            variant,
            exps: self.exps.clone(),
        }
    }

    pub fn trace(&self) -> TraceValue {
        match self.variant {
            Variant::TPrime => trace_of_prime_loops(&self.exps),
            Variant::T => trace_word(&self.to_braid_word()),
        }
    }
}

/// Order comparison of loop words given as `(index, exponent)` lists.
pub fn compare_loop_words(w: &[(usize, i64)], u: &[(usize, i64)]) -> Ordering {
    let level = |x: &[(usize, i64)]| x.iter().map(|p| p.1).sum::<i64>();
    let ind = |x: &[(usize, i64)]| x.last().map_or(0, |p| p.0);
    level(w)
        .cmp(&level(u))
        .then_with(|| ind(w).cmp(&ind(u)))
        .then_with(|| {
            for (a, b) in w.iter().zip(u) {
                if a.0 != b.0 {
                    return b.0.cmp(&a.0);
                }
            }
            w.len().cmp(&u.len())
        })
        .then_with(|| {
            for (a, b) in w.iter().rev().zip(u.iter().rev()) {
                if a.1 != b.1 {
                    return a.1.abs().cmp(&b.1.abs()).then(b.1.cmp(&a.1));
                }
            }
            Ordering::Equal
        })
}

impl SkeinMonomial {
    pub fn compare(&self, other: &SkeinMonomial) -> Ordering {
        let a: Vec<(usize, i64)> = self.exps.iter().copied().enumerate().collect();
        let b: Vec<(usize, i64)> = other.exps.iter().copied().enumerate().collect();
        compare_loop_words(&a, &b)
    }
}

impl Ord for SkeinMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.variant.cmp(&other.variant).then_with(|| self.compare(other))
    }
}

impl PartialOrd for SkeinMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SkeinMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let letter = match self.variant {
            Variant::T => "t",
            Variant::TPrime => "u",
        };
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                let base = if i == 0 {
                    "t".to_string()
                } else {
                    format!("{letter}{i}")
                };
                if k == 1 {
                    base
                } else {
                    format!("{base}^{k}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for SkeinMonomial {
    type Err = SkeinError;

    /// Parses `t^2 t1 t2^3` or `t^2 u1 u2^3`; `1` is the empty monomial.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if text == "1" || text.is_empty() {
            return Ok(SkeinMonomial {
                variant: Variant::T,
                exps: Vec::new(),
            });
        }
        let mut variant = None;
        let mut exps = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let pos = text[offset..].find(token).map_or(offset, |p| p + offset);
            offset = pos + token.len();
            let err = |msg: String| SkeinError::parse(pos, msg);
            let (head, power) = match token.split_once('^') {
                Some((h, e)) => (
                    h,
                    e.parse::<i64>()
                        .map_err(|_| err(format!("bad exponent in '{token}'")))?,
                ),
                None => (token, 1),
            };
            let mut chars = head.chars();
            let letter = chars.next().ok_or_else(|| err("empty factor".into()))?;
            let digits = chars.as_str();
            let index: usize = if digits.is_empty() {
                0
            } else {
                digits.parse().map_err(|_| err(format!("bad index in '{token}'")))?
            };
            let v = match (letter, index) {
                ('t', 0) => None,
                ('t', _) => Some(Variant::T),
                ('u', i) if i > 0 => Some(Variant::TPrime),
                _ => return Err(err(format!("unknown factor '{token}'"))),
            };
            if let Some(v) = v {
                if variant.is_some_and(|x| x != v) {
                    return Err(err("mixed t_i and t'_i factors".into()));
                }
                variant = Some(v);
            }
            if index != exps.len() {
                return Err(err(format!("expected index {}, found {index}", exps.len())));
            }
            if power == 0 {
                return Err(err(format!("zero exponent in '{token}'")));
            }
            exps.push(power);
        }
        SkeinMonomial::new(variant.unwrap_or(Variant::T), exps)
    }
}

fn compositions(total: i64, parts: usize, bound: i64, positive: bool, out: &mut Vec<Vec<i64>>, cur: &mut Vec<i64>) {
    if cur.len() == parts {
        if total == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let left = (parts - cur.len() - 1) as i64;
    let low = if positive { 1 } else { -bound };
    for k in low..=bound {
        if k == 0 {
            continue;
        }
        let rest = total - k;
        let reach_lo = if positive { left } else { -bound * left };
        if rest < reach_lo || rest > bound * left {
            continue;
        }
        cur.push(k);
        compositions(rest, parts, bound, positive, out, cur);
        cur.pop();
    }
}

/// All monomials of the set at level `k` within the bounds, in increasing order.
pub fn enumerate_level(set: SetKind, k: i64, bounds: Bounds, convention: Convention) -> Vec<SkeinMonomial> {
    let mut seqs = Vec::new();
    for parts in 1..=bounds.max_index + 1 {
        compositions(
            k,
            parts,
            bounds.exp_bound,
            bounds.positive_only,
            &mut seqs,
            &mut Vec::new(),
        );
    }
    let mut out: Vec<SkeinMonomial> = seqs
        .into_iter()
        .map(|exps| SkeinMonomial {
            variant: set.variant(),
            exps,
        })
        .filter(|m| m.belongs_to(set, convention))
        .collect();
    out.sort();
    out
}

/// `tr(m) = Σ c_j tr(m'_j)` with the `m'_j` in `Λ'`.
pub fn convert_to_lambda_prime(m: &SkeinMonomial, convention: Convention) -> BTreeMap<SkeinMonomial, RationalFn> {
    let mut out = BTreeMap::new();
    for (s, c) in m.trace().terms() {
        let mut exps = s.factors().to_vec();
        if convention == Convention::Decreasing {
            exps.reverse();
        }
        let key = SkeinMonomial {
            variant: Variant::TPrime,
            exps,
        };
        out.insert(key, RationalFn::from_poly(c.clone()));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Closed formula for positive top exponents.
    Closed,
    /// Linear solve against traces of lower monomials.
    Mechanical,
}

/// `tr(source) = Σ a_i tr(τ_i)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub source: SkeinMonomial,
    pub terms: BTreeMap<SkeinMonomial, LaurentPoly>,
    pub method: Method,
}

impl Decomposition {
    /// Output monomials that are not strictly below the source.
    pub fn violations(&self) -> Vec<&SkeinMonomial> {
        self.terms
            .keys()
            .filter(|t| t.compare(&self.source) != Ordering::Less)
            .collect()
    }

    pub fn all_lower(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn trace_identity_holds(&self) -> bool {
        let mut rhs = TraceValue::zero();
        for (t, c) in &self.terms {
            rhs.add_scaled(&t.trace(), c);
        }
        rhs == self.source.trace()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rhs = crate::coeff::format_combination(self.terms.iter().map(|(m, c)| (format!("tr({m})"), c)));
        write!(f, "tr({}) = {rhs}", self.source)
    }
}

fn qp(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e as i32)
}

/// Closed formula for `P t_{m-1}^a t_m^b` with `a, b ≥ 1`.
pub fn closed_formula(prefix: &[i64], a: i64, b: i64) -> BTreeMap<Vec<i64>, LaurentPoly> {
    assert!(a >= 1 && b >= 1, "closed formula needs positive top exponents");
    let qm1 = &LaurentPoly::q() - &LaurentPoly::one();
    let qm1sq = &qm1 * &qm1;
    let mut out = BTreeMap::new();
    let mono = |tail: &[i64]| -> Vec<i64> { prefix.iter().chain(tail).copied().collect() };
    add_term(&mut out, mono(&[b, a]), qp(b - a));
    let z_coeff = &(&qp(b - 1) * &qm1) * &LaurentPoly::z();
    add_term(&mut out, mono(&[a + b]), z_coeff.scale(&crate::coeff::rat(b - a)));
    for j in 0..=b - 2 {
        for phi in 0..=b - 2 - j {
            add_term(
                &mut out,
                mono(&[a + 1 + j + phi, b - 1 - j - phi]),
                &qm1sq * &qp(j + phi),
            );
        }
    }
    for j in 0..=a - 2 {
        for phi in 0..=j {
            add_term(
                &mut out,
                mono(&[a + b - j - 1 + phi, j + 1 - phi]),
                -(&qm1sq * &qp(b - j - 2 + phi)),
            );
        }
    }
    out
}

/// Rewrites `tr(m)` through monomials of lower order (see [`Decomposition`]).
///
/// Positive top exponents use the closed formula. When that leaves a term
/// that is not strictly lower, or the top exponents are not both positive,
/// [`decompose_mechanical`] searches with an exponent window of `Σ|k_i|`.
/// If the search finds nothing, the closed formula result is returned as is,
/// so [`Decomposition::violations`] shows the offending terms.
pub fn decompose_to_lower(m: &SkeinMonomial) -> Result<Decomposition> {
    if m.variant != Variant::T {
        return Err(SkeinError::Invalid("decomposition works on t_i monomials".into()));
    }
    if m.exps.len() < 2 {
        return Err(SkeinError::Invalid(format!("{m} has index 0; nothing to decompose")));
    }
    let n = m.exps.len();
    let (a, b) = (m.exps[n - 2], m.exps[n - 1]);
    let window = m.exps.iter().map(|k| k.abs()).sum();
    if a >= 1 && b >= 1 {
        let terms = closed_formula(&m.exps[..n - 2], a, b)
            .into_iter()
            .map(|(exps, c)| {
                (
                    SkeinMonomial {
                        variant: Variant::T,
                        exps,
                    },
                    c,
                )
            })
            .collect();
        let closed = Decomposition {
            source: m.clone(),
            terms,
            method: Method::Closed,
        };
        if closed.all_lower() {
            return Ok(closed);
        }
        return Ok(decompose_mechanical(m, window).unwrap_or(closed));
    }
    decompose_mechanical(m, window)
}

/// Solves `tr(m) = Σ a_i tr(τ_i)` over the strictly lower `τ_i ∈ Λ^aug`
/// of the same level with index at most `ind(m)` and `|k_i| ≤ exp_bound`.
pub fn decompose_mechanical(m: &SkeinMonomial, exp_bound: i64) -> Result<Decomposition> {
    let bounds = Bounds {
        max_index: m.index(),
        exp_bound,
        positive_only: false,
    };
    let candidates: Vec<SkeinMonomial> = enumerate_level(SetKind::LambdaAug, m.level(), bounds, Convention::Increasing)
        .into_iter()
        .filter(|t| t.compare(m) == Ordering::Less)
        .collect();
    let to_col = |t: &TraceValue| -> BTreeMap<SMonomial, RationalFn> {
        t.terms()
            .iter()
            .map(|(k, v)| (k.clone(), RationalFn::from_poly(v.clone())))
            .collect()
    };
    let cols: Vec<_> = candidates.iter().map(|t| to_col(&t.trace())).collect();
    let target = to_col(&m.trace());
    let SpanResult::InSpan(x) = span_solve(&cols, &target) else {
        return Err(SkeinError::NotDecomposable);
    };
    let mut terms = BTreeMap::new();
    for (t, c) in candidates.into_iter().zip(x) {
        if c.is_zero() {
            continue;
        }
        let poly = c.as_poly().cloned().ok_or(SkeinError::NotDecomposable)?;
        terms.insert(t, poly);
    }
    Ok(Decomposition {
        source: m.clone(),
        terms,
        method: Method::Mechanical,
    })
}
