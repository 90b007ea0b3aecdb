//! Conversion from `Σ` to `Σ'`.
//!
//! `H_{1,m+1}` is a free left `H_{1,m}`-module on `{t_m^k c}` and also on
//! `{t'_m^k c}`, where `c` runs over `1, g_m, g_m g_{m-1}, …, g_m … g_1`.
//! Writing `t'_m^k = t_m^k U_k + R_k` with `U_k` in the type-A algebra and
//! `R_k` of smaller top exponent, `t_m^k c = t'_m^k U_k⁻¹ c - R_k U_k⁻¹ c`,
//! and the remainder is converted by induction on `|k|`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::perm::Perm;
use super::rules::{add_term, tail_product, Terms};
use super::{normal_form, AlgebraElement, BasisWord};
use crate::braid::expand_loop;
use crate::coeff::{LaurentPoly, RationalFn};
use crate::linalg::{span_solve, SpanResult};
use crate::Variant;

type TypeA = BTreeMap<Perm, LaurentPoly>;
/// `(k, j) ↦ B` meaning `Σ B · t'_m^k · (g_m … g_j)`, with `B` on `m` strands.
type TopForm = BTreeMap<(i64, usize), AlgebraElement>;

thread_local! {
    static INV: RefCell<HashMap<(usize, i64), Rc<TypeA>>> = RefCell::new(HashMap::new());
    static CONV: RefCell<HashMap<(usize, i64, usize), Rc<TopForm>>> = RefCell::new(HashMap::new());
}

fn coset(n: usize, j: usize) -> Perm {
    let word: Vec<usize> = (j..n).rev().collect();
    Perm::from_word(n, &word)
}

/// Splits an element on `m + 1` strands into left coefficients of `t_m^k c_j`.
fn split_top(x: &AlgebraElement) -> BTreeMap<(i64, usize), AlgebraElement> {
    let n = x.strands();
    let m = n - 1;
    let mut out: BTreeMap<(i64, usize), Terms> = BTreeMap::new();
    for (w, c) in x.terms() {
        let (u, j) = w.perm.split_top();
        let low = BasisWord::new(w.loops[..m].to_vec(), u.restrict());
        add_term(out.entry((w.loops[m], j)).or_default(), low, c.clone());
    }
    out.into_iter()
        .map(|(k, t)| (k, AlgebraElement::from_terms(m, Variant::T, t)))
        .collect()
}

fn type_a_element(n: usize, a: &TypeA) -> AlgebraElement {
    let terms = a
        .iter()
        .map(|(p, c)| (BasisWord::new(vec![0; n], p.clone()), c.clone()))
        .collect();
    AlgebraElement::from_terms(n, Variant::T, terms)
}

/// `U_k⁻¹` for `t'_m^k = t_m^k U_k + R_k`.
fn inverse_top(m: usize, k: i64) -> Rc<TypeA> {
    if let Some(r) = INV.with(|c| c.borrow().get(&(m, k)).cloned()) {
        return r;
    }
    let n = m + 1;
    let p = normal_form(&expand_loop(m, Variant::TPrime, k, n).expect("m < n"), Variant::T);
    let mut u = TypeA::new();
    for (w, c) in p.terms() {
        let top = w.loops[m];
        if top == k {
            assert!(
                w.loops[..m].iter().all(|&x| x == 0),
                "leading block of t'_{m}^{k} carries lower loops"
            );
            u.insert(w.perm.clone(), c.clone());
        } else {
            assert!(top.abs() < k.abs(), "t'_{m}^{k} is not triangular over t_{m}");
        }
    }
    let perms = Perm::all(n);
    let cols: Vec<BTreeMap<Perm, RationalFn>> = perms
        .iter()
        .map(|v| {
            let mut col: BTreeMap<Perm, LaurentPoly> = BTreeMap::new();
            for (w, c) in &u {
                for (r, d) in tail_product(w, v).iter() {
                    add_term(&mut col, r.clone(), c * d);
                }
            }
            col.into_iter().map(|(k, c)| (k, RationalFn::from_poly(c))).collect()
        })
        .collect();
    let one: BTreeMap<Perm, RationalFn> = [(Perm::identity(n), RationalFn::one())].into_iter().collect();
    let SpanResult::InSpan(x) = span_solve(&cols, &one) else {
        panic!("leading block of t'_{m}^{k} is not invertible");
    };
    let inv: TypeA = perms
        .into_iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| {
            let poly = c.as_poly().cloned().expect("inverse has Laurent coefficients");
            (p, poly)
        })
        .collect();
    let inv = Rc::new(inv);
    INV.with(|c| c.borrow_mut().insert((m, k), inv.clone()));
    inv
}

/// `t_m^k (g_m … g_j)` in the form `Σ B t'_m^{k'} c'`.
fn convert_top(m: usize, k: i64, j: usize) -> Rc<TopForm> {
    if let Some(r) = CONV.with(|c| c.borrow().get(&(m, k, j)).cloned()) {
        return r;
    }
    let n = m + 1;
    let mut out = TopForm::new();
    if k == 0 {
        out.insert((0, j), AlgebraElement::one(m, Variant::T));
    } else {
        let inv = inverse_top(m, k);
        let mut v = TypeA::new();
        for (w, c) in inv.iter() {
            for (r, d) in tail_product(w, &coset(n, j)).iter() {
                add_term(&mut v, r.clone(), c * d);
            }
        }
        for (p, c) in &v {
            let (low, jj) = p.split_top();
            let b = AlgebraElement::basis(BasisWord::new(vec![0; m], low.restrict()), Variant::T).scale(c);
            accumulate(&mut out, (k, jj), b);
        }
        let pk = normal_form(&expand_loop(m, Variant::TPrime, k, n).expect("m < n"), Variant::T);
        let mut ytop = BasisWord::new(vec![0; n], coset(n, j));
        ytop.loops[m] = k;
        let rem = pk
            .multiply(&type_a_element(n, &v))
            .and_then(|x| x.sub(&AlgebraElement::basis(ytop, Variant::T)))
            .expect("same shape");
        for ((kk, jj), a) in split_top(&rem) {
            assert!(kk.abs() < k.abs(), "remainder is not of lower top exponent");
            for (key, b) in convert_top(m, kk, jj).iter() {
                let prod = a.multiply(b).expect("same shape");
                accumulate(&mut out, *key, prod.scale(&-LaurentPoly::one()));
            }
        }
    }
    let out = Rc::new(out);
    CONV.with(|c| c.borrow_mut().insert((m, k, j), out.clone()));
    out
}

fn accumulate(out: &mut TopForm, key: (i64, usize), b: AlgebraElement) {
    let merged = match out.remove(&key) {
        Some(prev) => prev.add(&b).expect("same shape"),
        None => b,
    };
    if !merged.is_zero() {
        out.insert(key, merged);
    }
}

/// Rewrites a `Σ` element in the `Σ'` basis.
pub(super) fn to_prime(x: &AlgebraElement) -> AlgebraElement {
    let n = x.strands();
    if n == 1 {
        return AlgebraElement::from_terms(1, Variant::TPrime, x.terms().clone());
    }
    let m = n - 1;
    let mut collected = TopForm::new();
    for ((k, j), a) in split_top(x) {
        for (key, b) in convert_top(m, k, j).iter() {
            accumulate(&mut collected, *key, a.multiply(b).expect("same shape"));
        }
    }
    let mut terms = Terms::new();
    for ((k, j), b) in collected {
        let low = to_prime(&b);
        let c = coset(n, j);
        for (w, coeff) in low.terms() {
            let mut loops = w.loops.clone();
            loops.push(k);
            let mut word = w.perm.reduced_word();
            word.extend((j..n).rev());
            let perm = Perm::from_word(n, &word);
            debug_assert_eq!(perm.length(), w.perm.length() + c.length());
            add_term(&mut terms, BasisWord::new(loops, perm), coeff.clone());
        }
    }
    AlgebraElement::from_terms(n, Variant::TPrime, terms)
}
