//! Multiplication of `Σ`-basis words `t_0^{L_0} … t_{n-1}^{L_{n-1}} T_w`.
//!
//! The `t_i` commute with each other, and `g_i` commutes with every `t_j`
//! except `t_{i-1}` and `t_i`. For `X = t_{i-1}`, `Y = t_i`, `g = g_i`:
//!
//! ```text
//! g X      = q⁻¹ Y g + (q⁻¹ - 1) Y
//! g X⁻¹    = q Y⁻¹ g + (q - 1) X⁻¹
//! g Y      = q X g + (q - 1) Y
//! g Y⁻¹    = q⁻¹ X⁻¹ g + (q⁻¹ - 1) X⁻¹
//! ```
//!
//! Results are memoized per thread; the caches only ever store values that
//! are pure functions of their keys.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::perm::Perm;
use super::BasisWord;
use crate::coeff::LaurentPoly;

pub(crate) type Terms = BTreeMap<BasisWord, LaurentPoly>;

type PushKey = (i64, i64);
type PushTerms = BTreeMap<(i64, i64, bool), LaurentPoly>;
type Memo<K, V> = RefCell<HashMap<K, Rc<V>>>;

thread_local! {
    static PUSH: Memo<PushKey, PushTerms> = RefCell::new(HashMap::new());
    static THROUGH: Memo<(Perm, Vec<i64>), Terms> = RefCell::new(HashMap::new());
    static TAILS: Memo<(Perm, Perm), BTreeMap<Perm, LaurentPoly>> = RefCell::new(HashMap::new());
}

pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, LaurentPoly>, k: K, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn qp(e: i32) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

/// `q^e - 1`
fn qm1(e: i32) -> LaurentPoly {
    &qp(e) - &LaurentPoly::one()
}

/// `g X^a Y^b` as terms `X^{a'} Y^{b'} g^{0|1}`.
fn push_gen(a: i64, b: i64) -> Rc<PushTerms> {
    if let Some(r) = PUSH.with(|c| c.borrow().get(&(a, b)).cloned()) {
        return r;
    }
    let mut out = PushTerms::new();
    let lift = |out: &mut PushTerms, inner: &PushTerms, dx: i64, dy: i64, c: &LaurentPoly| {
        for (&(x, y, g), v) in inner {
            add_term(out, (x + dx, y + dy, g), v * c);
        }
    };
    if a > 0 {
        lift(&mut out, &push_gen(a - 1, b), 0, 1, &qp(-1));
        add_term(&mut out, (a - 1, b + 1, false), qm1(-1));
    } else if a < 0 {
        lift(&mut out, &push_gen(a + 1, b), 0, -1, &qp(1));
        add_term(&mut out, (a, b, false), qm1(1));
    } else if b > 0 {
        lift(&mut out, &push_gen(0, b - 1), 1, 0, &qp(1));
        add_term(&mut out, (0, b, false), qm1(1));
    } else if b < 0 {
        lift(&mut out, &push_gen(0, b + 1), -1, 0, &qp(-1));
        add_term(&mut out, (-1, b + 1, false), qm1(-1));
    } else {
        add_term(&mut out, (0, 0, true), LaurentPoly::one());
    }
    let out = Rc::new(out);
    PUSH.with(|c| c.borrow_mut().insert((a, b), out.clone()));
    out
}

/// `g_s · X^L T_w`
fn left_mul_gen(s: usize, w: &BasisWord, c: &LaurentPoly, out: &mut Terms) {
    let pushed = push_gen(w.loops[s - 1], w.loops[s]);
    for (&(x, y, g), v) in pushed.iter() {
        let mut loops = w.loops.clone();
        loops[s - 1] = x;
        loops[s] = y;
        let coeff = v * c;
        if !g {
            add_term(out, BasisWord::new(loops, w.perm.clone()), coeff);
            continue;
        }
        let (p, up) = w.perm.left_mul(s);
        if up {
            add_term(out, BasisWord::new(loops, p), coeff);
        } else {
            add_term(out, BasisWord::new(loops.clone(), w.perm.clone()), &coeff * &qm1(1));
            add_term(out, BasisWord::new(loops, p), &coeff * &qp(1));
        }
    }
}

/// `T_u X^L` in the `Σ` basis.
fn push_through(u: &Perm, loops: &[i64]) -> Rc<Terms> {
    let key = (u.clone(), loops.to_vec());
    if let Some(r) = THROUGH.with(|c| c.borrow().get(&key).cloned()) {
        return r;
    }
    let n = loops.len();
    let mut state = Terms::new();
    state.insert(BasisWord::new(loops.to_vec(), Perm::identity(n)), LaurentPoly::one());
    for s in u.reduced_word().into_iter().rev() {
        let mut next = Terms::new();
        for (w, c) in &state {
            left_mul_gen(s, w, c, &mut next);
        }
        state = next;
    }
    let out = Rc::new(state);
    THROUGH.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// `T_a T_b` in the type-A Hecke algebra.
pub(crate) fn tail_product(a: &Perm, b: &Perm) -> Rc<BTreeMap<Perm, LaurentPoly>> {
    let key = (a.clone(), b.clone());
    if let Some(r) = TAILS.with(|c| c.borrow().get(&key).cloned()) {
        return r;
    }
    let mut state = BTreeMap::new();
    state.insert(a.clone(), LaurentPoly::one());
    for s in b.reduced_word() {
        state = right_mul_tail(&state, s);
    }
    let out = Rc::new(state);
    TAILS.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

pub(crate) fn right_mul_tail(state: &BTreeMap<Perm, LaurentPoly>, s: usize) -> BTreeMap<Perm, LaurentPoly> {
    let mut next = BTreeMap::new();
    for (w, c) in state {
        let (p, up) = w.right_mul(s);
        if up {
            add_term(&mut next, p, c.clone());
        } else {
            add_term(&mut next, w.clone(), c * &qm1(1));
            add_term(&mut next, p, c * &qp(1));
        }
    }
    next
}

/// `(X^{L1} T_u)(X^{L2} T_v)`, accumulated into `out` with factor `c`.
pub(crate) fn mul_basis(a: &BasisWord, b: &BasisWord, c: &LaurentPoly, out: &mut Terms) {
    let pushed = push_through(&a.perm, &b.loops);
    for (w, v) in pushed.iter() {
        let loops: Vec<i64> = w.loops.iter().zip(&a.loops).map(|(x, y)| x + y).collect();
        let cv = v * c;
        if b.perm.is_identity() {
            add_term(out, BasisWord::new(loops, w.perm.clone()), cv);
            continue;
        }
        for (p, t) in tail_product(&w.perm, &b.perm).iter() {
            add_term(out, BasisWord::new(loops.clone(), p.clone()), &cv * t);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_laurent;

    #[test]
    fn single_letter_rules() {
        let g = push_gen(1, 0);
        assert_eq!(g.get(&(0, 1, true)), Some(&parse_laurent("q^-1").unwrap()));
        assert_eq!(g.get(&(0, 1, false)), Some(&parse_laurent("q^-1 - 1").unwrap()));
        let g = push_gen(0, -1);
        assert_eq!(g.get(&(-1, 0, true)), Some(&parse_laurent("q^-1").unwrap()));
        assert_eq!(g.get(&(-1, 0, false)), Some(&parse_laurent("q^-1 - 1").unwrap()));
    }

    #[test]
    fn g_commutes_with_xy() {
        let g = push_gen(1, 1);
        assert_eq!(g.len(), 1);
        assert_eq!(g.get(&(1, 1, true)), Some(&LaurentPoly::one()));
        let g = push_gen(-2, -2);
        assert_eq!(g.len(), 1);
    }
}
