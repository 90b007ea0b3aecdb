//! The Markov trace `tr` on `⋃_n H_{1,n}(q)`, valued in `Z[q^±, z^±][s_k]`.
//!
//! The trace of a `Σ` basis word on `n = m + 1` strands is computed by
//! peeling off the top strand. The word factors as `A · t_m^k · c` with
//! `A ∈ H_{1,m}` and `c = g_m … g_j`. The pieces `t_m^k` and `t_m^k g_m` are
//! rewritten as sums `a · X · b` with `a, b ∈ H_{1,m}` and
//! `X ∈ {1, g_m, t'_m^i}`, after which cycling and the rules
//! `tr(h g_m) = z tr(h)`, `tr(h t'_m^i) = s_i tr(h)` lower the strand count.
//!
//! A second evaluation path works directly in `Σ'` and is used to test
//! that the value does not depend on the route.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::rc::Rc;
use std::str::FromStr;
use std::thread::LocalKey;

use crate::braid::{expand_loop, Gen, MixedBraidWord};
use crate::coeff::{format_combination, LaurentPoly};
use crate::error::{Result, SkeinError};
use crate::hecke::{add_term, normal_form, AlgebraElement, BasisWord, Perm};
use crate::Variant;

/// A product `s_{k_1} ⋯ s_{k_r}` of the trace unknowns, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SMonomial(Vec<i64>);

impl SMonomial {
    pub fn one() -> Self {
        SMonomial(Vec::new())
    }

    /// Zero indices are dropped since `s_0 = 1`.
    pub fn new<I: IntoIterator<Item = i64>>(factors: I) -> Self {
        let mut v: Vec<i64> = factors.into_iter().filter(|&k| k != 0).collect();
        v.sort_unstable();
        SMonomial(v)
    }

    pub fn factors(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn times(&self, k: i64) -> Self {
        SMonomial::new(self.0.iter().copied().chain([k]))
    }

    pub fn mul(&self, other: &SMonomial) -> Self {
        SMonomial::new(self.0.iter().chain(&other.0).copied())
    }

    /// Sum of the indices.
    pub fn weight(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for SMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|k| format!("s[{k}]")).collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for SMonomial {
    type Err = SkeinError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(SMonomial::one());
        }
        let mut out = Vec::new();
        let mut pos = 0;
        for part in s.split('*') {
            let p = part.trim();
            let inner = p
                .strip_prefix("s[")
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| SkeinError::parse(pos, format!("expected s[k], found '{p}'")))?;
            let k: i64 = inner
                .trim()
                .parse()
                .map_err(|_| SkeinError::parse(pos, format!("bad index '{inner}'")))?;
            if k == 0 {
                return Err(SkeinError::parse(pos, "s[0] is not an unknown"));
            }
            out.push(k);
            pos += part.len() + 1;
        }
        Ok(SMonomial::new(out))
    }
}

/// A trace value: a polynomial in the `s_k` with Laurent coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TraceValue {
    terms: BTreeMap<SMonomial, LaurentPoly>,
}

impl TraceValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(SMonomial::one(), LaurentPoly::one())
    }

    /// The unknown `s_k` (`1` when `k = 0`).
    pub fn s(k: i64) -> Self {
        Self::monomial(SMonomial::new([k]), LaurentPoly::one())
    }

    pub fn monomial(m: SMonomial, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        add_term(&mut out.terms, m, c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<SMonomial, LaurentPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SMonomial) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_scaled(&mut self, other: &TraceValue, c: &LaurentPoly) {
        for (m, v) in &other.terms {
            add_term(&mut self.terms, m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &TraceValue) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        out
    }

    pub fn sub(&self, other: &TraceValue) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-LaurentPoly::one());
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Multiplication by `s_k`.
    pub fn mul_s(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            add_term(&mut out.terms, m.times(k), v.clone());
        }
        out
    }

    pub fn mul(&self, other: &TraceValue) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                add_term(&mut out.terms, a.mul(b), x * y);
            }
        }
        out
    }
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(self.terms.iter().map(|(m, c)| (m.to_string(), c))))
    }
}

/// Trace of an element (either basis).
pub fn markov_trace(a: &AlgebraElement) -> TraceValue {
    let a = a.to_variant(Variant::T);
    let mut out = TraceValue::zero();
    for (w, c) in a.terms() {
        out.add_scaled(&trace_basis(w), c);
    }
    out
}

/// Trace of the element represented by a braid word.
pub fn trace_word(w: &MixedBraidWord) -> TraceValue {
    markov_trace(&normal_form(w, Variant::T))
}

/// Trace computed along the `Σ'` route.
pub fn trace_via_prime(a: &AlgebraElement) -> TraceValue {
    let a = a.to_variant(Variant::TPrime);
    let mut out = TraceValue::zero();
    for (w, c) in a.terms() {
        out.add_scaled(&trace_prime_basis(w), c);
    }
    out
}

/// Closed form on loop-only `Σ'` words `t'_0^{k_0} ⋯ t'_m^{k_m}`.
pub fn trace_of_prime_loops(exponents: &[i64]) -> TraceValue {
    TraceValue::monomial(SMonomial::new(exponents.iter().copied()), LaurentPoly::one())
}

type Cache<K, V> = RefCell<HashMap<K, Rc<V>>>;

fn cached<K, V, F>(cache: &'static LocalKey<Cache<K, V>>, key: K, f: F) -> Rc<V>
where
    K: Eq + Hash + Clone,
    F: FnOnce() -> V,
{
    if let Some(v) = cache.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let v = Rc::new(f());
    cache.with(|c| c.borrow_mut().insert(key, v.clone()));
    v
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
enum Top {
    One,
    G,
    Loop(i64),
}

/// `Σ c · a X b`, keyed by `(X, a, b)`.
type DForm = BTreeMap<(Top, BasisWord, BasisWord), LaurentPoly>;

thread_local! {
    static D: Cache<(usize, i64), DForm> = RefCell::new(HashMap::new());
    static DG: Cache<(usize, i64), DForm> = RefCell::new(HashMap::new());
    static DGP: Cache<(usize, i64), DForm> = RefCell::new(HashMap::new());
    static PRIME_LOOP: Cache<(usize, i64), AlgebraElement> = RefCell::new(HashMap::new());
    static FOLDED: Cache<(bool, usize, i64), BTreeMap<Top, AlgebraElement>> = RefCell::new(HashMap::new());
    static TRACE: Cache<BasisWord, TraceValue> = RefCell::new(HashMap::new());
    static TRACE_PRIME: Cache<BasisWord, TraceValue> = RefCell::new(HashMap::new());
}

fn elem(w: &BasisWord) -> AlgebraElement {
    AlgebraElement::basis(w.clone(), Variant::T)
}

fn mul(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    a.multiply(b).expect("operands share a strand count")
}

fn qp(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e as i32)
}

fn qm1(e: i64) -> LaurentPoly {
    &qp(e) - &LaurentPoly::one()
}

/// `t_{m-1}^e` on `m` strands.
fn x_pow(m: usize, e: i64) -> AlgebraElement {
    AlgebraElement::loop_letter(m, Variant::T, m - 1, e)
}

/// `t'_{m-1}^i` on `m` strands, in `Σ`.
fn prime_loop(m: usize, i: i64) -> Rc<AlgebraElement> {
    cached(&PRIME_LOOP, (m, i), || {
        normal_form(
            &expand_loop(m - 1, Variant::TPrime, i, m).expect("index below strands"),
            Variant::T,
        )
    })
}

fn push(out: &mut DForm, top: Top, a: &AlgebraElement, b: &AlgebraElement, c: &LaurentPoly) {
    if top == Top::One {
        let ab = mul(a, b);
        let id = BasisWord::identity(ab.strands());
        for (w, v) in ab.terms() {
            add_term(out, (Top::One, w.clone(), id.clone()), v * c);
        }
        return;
    }
    for (wa, va) in a.terms() {
        for (wb, vb) in b.terms() {
            add_term(out, (top, wa.clone(), wb.clone()), &(va * vb) * c);
        }
    }
}

fn combine(out: &mut DForm, f: &DForm, c: &LaurentPoly) {
    for (key, v) in f {
        add_term(out, key.clone(), v * c);
    }
}

fn left_mul_form(y: &AlgebraElement, f: &DForm) -> DForm {
    let mut out = DForm::new();
    for ((top, a, b), v) in f {
        push(&mut out, *top, &mul(y, &elem(a)), &elem(b), v);
    }
    out
}

fn right_mul_form(f: &DForm, y: &AlgebraElement) -> DForm {
    let mut out = DForm::new();
    for ((top, a, b), v) in f {
        push(&mut out, *top, &elem(a), &mul(&elem(b), y), v);
    }
    out
}

/// `t_m^k` over `H_{1,m}`.
fn d_form(m: usize, k: i64) -> Rc<DForm> {
    cached(&D, (m, k), || {
        let mut out = DForm::new();
        if m == 0 {
            out.insert(
                (Top::Loop(k), BasisWord::identity(0), BasisWord::identity(0)),
                LaurentPoly::one(),
            );
            return out;
        }
        let (sigma, kk) = (k.signum(), k.abs());
        combine(&mut out, &sandwich(m, sigma, k), &qp(sigma * (kk - 1)));
        for j in 0..kk - 1 {
            let f = left_mul_form(&x_pow(m, sigma * (j + 1)), &dg_form(m, sigma * (kk - 1 - j)));
            combine(&mut out, &f, &(&qm1(sigma) * &qp(sigma * j)));
        }
        out
    })
}

/// `t_m^k g_m^{sign k}` over `H_{1,m}`.
fn dg_form(m: usize, k: i64) -> Rc<DForm> {
    cached(&DG, (m, k), || {
        let (sigma, kk) = (k.signum(), k.abs());
        let one = AlgebraElement::one(m, Variant::T);
        let xk = x_pow(m, k);
        let mut out = DForm::new();
        if sigma > 0 {
            push(&mut out, Top::G, &one, &xk, &qp(kk));
        } else {
            push(&mut out, Top::G, &one, &xk, &qp(-kk - 1));
            push(&mut out, Top::One, &xk, &one, &(&qp(-kk) * &qm1(-1)));
        }
        for j in 0..kk {
            let d = d_form(m, sigma * (kk - j));
            let f = if j == 0 {
                (*d).clone()
            } else {
                right_mul_form(&d, &x_pow(m, sigma * j))
            };
            combine(&mut out, &f, &(&qm1(sigma) * &qp(sigma * j)));
        }
        out
    })
}

/// `t_m^k g_m` over `H_{1,m}`.
fn dgp_form(m: usize, k: i64) -> Rc<DForm> {
    if k > 0 {
        return dg_form(m, k);
    }
    cached(&DGP, (m, k), || {
        let mut out = DForm::new();
        combine(&mut out, &dg_form(m, k), &LaurentPoly::q());
        combine(&mut out, &d_form(m, k), &qm1(1));
        out
    })
}

/// `G t_{m-1}^e G` over `H_{1,m}` with `G = g_m^sigma`.
fn sandwich(m: usize, sigma: i64, e: i64) -> DForm {
    let inner = d_form(m - 1, e);
    let q = LaurentPoly::q();
    let gl = || AlgebraElement::g(m, Variant::T, m - 1);
    let mut gyg = DForm::new();
    let mut gy = DForm::new();
    let mut yg = DForm::new();
    for ((top, a, b), c) in inner.iter() {
        let a = elem(&a.embed(m));
        let b = elem(&b.embed(m));
        match *top {
            Top::One => {
                push(&mut gyg, Top::G, &a, &b, &(c * &qm1(1)));
                push(&mut gyg, Top::One, &a, &b, &(c * &q));
                push(&mut gy, Top::G, &a, &b, c);
                push(&mut yg, Top::G, &a, &b, c);
            }
            Top::G => {
                let g = gl();
                push(&mut gyg, Top::G, &mul(&a, &g), &mul(&g, &b), c);
                push(&mut gy, Top::G, &a, &mul(&g, &b), c);
                push(&mut yg, Top::G, &mul(&a, &g), &b, c);
            }
            Top::Loop(i) => {
                let t = prime_loop(m, i);
                push(&mut gyg, Top::G, &a, &mul(&t, &b), &(c * &qm1(1)));
                push(&mut gyg, Top::Loop(i), &a, &b, &(c * &q));
                push(&mut gy, Top::G, &a, &mul(&t, &b), c);
                push(&mut yg, Top::G, &mul(&a, &t), &b, c);
            }
        }
    }
    if sigma > 0 {
        return gyg;
    }
    let mut out = DForm::new();
    combine(&mut out, &gyg, &qp(-2));
    let cross = &qp(-1) * &qm1(-1);
    combine(&mut out, &gy, &cross);
    combine(&mut out, &yg, &cross);
    let one = AlgebraElement::one(m, Variant::T);
    push(&mut out, Top::One, &x_pow(m, e), &one, &(&qm1(-1) * &qm1(-1)));
    out
}

fn scal(top: Top, t: &TraceValue) -> TraceValue {
    match top {
        Top::One => t.clone(),
        Top::G => t.scale(&LaurentPoly::z()),
        Top::Loop(i) => t.mul_s(i),
    }
}

/// `g_{m-1} … g_j` on `m` strands, or `None` when `j = m + 1`.
fn lower_tail(m: usize, j: usize) -> Option<AlgebraElement> {
    (j <= m).then(|| {
        let word: Vec<usize> = (j..m).rev().collect();
        elem(&BasisWord::new(vec![0; m], Perm::from_word(m, &word)))
    })
}

/// `Σ c · a b` per top letter, so that `tr(P · a X b) = scal(X, tr(P · Σ c a b))`.
fn folded_form(with_g: bool, m: usize, k: i64) -> Rc<BTreeMap<Top, AlgebraElement>> {
    cached(&FOLDED, (with_g, m, k), || {
        let form = if with_g { dgp_form(m, k) } else { d_form(m, k) };
        let mut out: BTreeMap<Top, AlgebraElement> = BTreeMap::new();
        for ((top, wa, wb), c) in form.iter() {
            let ab = mul(&elem(wa), &elem(wb)).scale(c);
            let slot = out.entry(*top).or_insert_with(|| AlgebraElement::zero(m, Variant::T));
            *slot = slot.add(&ab).expect("same shape");
        }
        out.retain(|_, e| !e.is_zero());
        out
    })
}

fn trace_element(a: &AlgebraElement) -> TraceValue {
    let mut out = TraceValue::zero();
    for (w, c) in a.terms() {
        out.add_scaled(&trace_basis(w), c);
    }
    out
}

fn trace_basis(w: &BasisWord) -> Rc<TraceValue> {
    cached(&TRACE, w.clone(), || {
        let n = w.strands();
        if n <= 1 {
            return TraceValue::s(w.loops.first().copied().unwrap_or(0));
        }
        let m = n - 1;
        let k = w.loops[m];
        let (u, j) = w.perm.split_top();
        let a = elem(&BasisWord::new(w.loops[..m].to_vec(), u.restrict()));
        let tail = lower_tail(m, j);
        let pre = match &tail {
            Some(c) => mul(c, &a),
            None => a,
        };
        if k == 0 {
            let t = trace_element(&pre);
            return if tail.is_some() { t.scale(&LaurentPoly::z()) } else { t };
        }
        let mut out = TraceValue::zero();
        for (top, y) in folded_form(tail.is_some(), m, k).iter() {
            out = out.add(&scal(*top, &trace_element(&mul(&pre, y))));
        }
        out
    })
}

fn trace_prime_basis(w: &BasisWord) -> Rc<TraceValue> {
    cached(&TRACE_PRIME, w.clone(), || {
        let n = w.strands();
        if n <= 1 {
            return TraceValue::s(w.loops.first().copied().unwrap_or(0));
        }
        let m = n - 1;
        let k = w.loops[m];
        let (u, j) = w.perm.split_top();
        let a = BasisWord::new(w.loops[..m].to_vec(), u.restrict());
        if j == n {
            return trace_prime_basis(&a).mul_s(k);
        }
        let mut word = if k != 0 {
            expand_loop(m - 1, Variant::TPrime, k, m).expect("index below strands")
        } else {
            MixedBraidWord::identity(m)
        };
        for s in (j..m).rev() {
            word.push(Gen::Sigma(s), 1).expect("index below strands");
        }
        let e = normal_form(&word.concat(&a.to_word(Variant::TPrime)), Variant::TPrime);
        let mut out = TraceValue::zero();
        for (v, c) in e.terms() {
            out.add_scaled(&trace_prime_basis(v), c);
        }
        out.scale(&LaurentPoly::z())
    })
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::braid::parse_word;
    use crate::coeff::parse_laurent;

    fn tr(s: &str, n: usize) -> TraceValue {
        trace_word(&parse_word(s, n).unwrap())
    }

    fn lp(s: &str) -> LaurentPoly {
        parse_laurent(s).unwrap()
    }

    fn top_element(m: usize, top: Top) -> AlgebraElement {
        let n = m + 1;
        match top {
            Top::One => AlgebraElement::one(n, Variant::T),
            Top::G => AlgebraElement::g(n, Variant::T, m),
            Top::Loop(i) => normal_form(&expand_loop(m, Variant::TPrime, i, n).unwrap(), Variant::T),
        }
    }

    fn rebuild(m: usize, f: &DForm) -> AlgebraElement {
        let n = m + 1;
        let mut acc = AlgebraElement::zero(n, Variant::T);
        for ((top, a, b), c) in f {
            let x = mul(&mul(&elem(&a.embed(n)), &top_element(m, *top)), &elem(&b.embed(n)));
            acc = acc.add(&x.scale(c)).unwrap();
        }
        acc
    }

    #[test]
    fn decompositions_rebuild_their_source() {
        for m in 1..=2 {
            for k in [-3, -2, -1, 1, 2, 3] {
                let n = m + 1;
                let y = AlgebraElement::loop_letter(n, Variant::T, m, k);
                assert_eq!(rebuild(m, &d_form(m, k)), y, "t_{m}^{k}");
                let yg = mul(&y, &AlgebraElement::g(n, Variant::T, m));
                assert_eq!(rebuild(m, &dgp_form(m, k)), yg, "t_{m}^{k} g_{m}");
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(tr("1", 1), TraceValue::one());
        assert_eq!(tr("t^3", 1), TraceValue::s(3));
        assert_eq!(tr("g1", 2).to_string(), "z");
        assert_eq!(tr("g1^-1", 2), TraceValue::one().scale(&lp("q^-1*z + q^-1 - 1")));
        assert_eq!(tr("t^2 t1", 2).to_string(), "q*s[1]*s[2] + (q - 1)*z*s[3]");
        assert_eq!(tr("t t1", 2).to_string(), "q*s[1]*s[1] + (q - 1)*z*s[2]");
    }

    #[test]
    fn prime_loop_words() {
        for exps in [vec![1], vec![1, 1], vec![2, -1], vec![-1, 2, 1]] {
            let n = exps.len();
            let mut w = BasisWord::identity(n);
            w.loops.clone_from(&exps);
            let e = AlgebraElement::basis(w, Variant::TPrime);
            assert_eq!(markov_trace(&e), trace_of_prime_loops(&exps), "{exps:?}");
        }
    }

    #[test]
    fn rules_on_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..25 {
            let n = rng.gen_range(1..=3);
            let u = MixedBraidWord::random(&mut rng, n, 4, 2);
            let v = MixedBraidWord::random(&mut rng, n, 4, 2);
            assert_eq!(trace_word(&u.concat(&v)), trace_word(&v.concat(&u)), "{u} | {v}");
            let mut g = u.embed(n + 1);
            g.push(Gen::Sigma(n), 1).unwrap();
            assert_eq!(trace_word(&g), trace_word(&u).scale(&LaurentPoly::z()));
            let k = rng.gen_range(-2..=2);
            let lp = u
                .embed(n + 1)
                .concat(&expand_loop(n, Variant::TPrime, k, n + 1).unwrap());
            assert_eq!(trace_word(&lp), trace_word(&u).mul_s(k));
            let e = normal_form(&u, Variant::T);
            assert_eq!(markov_trace(&e), trace_via_prime(&e), "{u}");
        }
    }

    #[test]
    fn monomial_text_round_trip() {
        let m = SMonomial::new([2, -1, 2]);
        assert_eq!(m.to_string(), "s[-1]*s[2]*s[2]");
        assert_eq!(m.to_string().parse::<SMonomial>().unwrap(), m);
        assert!("s[0]".parse::<SMonomial>().is_err());
    }
}
