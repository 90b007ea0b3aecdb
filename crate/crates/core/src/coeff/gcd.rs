//! Polynomial GCD over `Q[q, z]`.
//!
//! Polynomials are handled recursively as polynomials in `z` whose
//! coefficients are dense univariate polynomials in `q`. The GCD uses a
//! primitive pseudo-remainder sequence in `z` and Euclid's algorithm in `q`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::laurent::{Exps, LaurentPoly};
use super::Rat;

/// Dense polynomial in `q`, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(Vec<Rat>);

impl UPoly {
    fn zero() -> Self {
        UPoly(Vec::new())
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &Rat {
        self.0.last().expect("lc of zero polynomial")
    }

    fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(Rat::zero);
            let b = o.0.get(i).cloned().unwrap_or_else(Rat::zero);
            v.push(a + b);
        }
        let mut p = UPoly(v);
        p.trim();
        p
    }

    fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c.clone()).collect())
    }

    fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.neg())
    }

    fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut p = UPoly(v);
        p.trim();
        p
    }

    fn scale(&self, c: &Rat) -> UPoly {
        let mut p = UPoly(self.0.iter().map(|x| x * c).collect());
        p.trim();
        p
    }

    fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        if r.0.len() < d.0.len() {
            return (UPoly::zero(), r);
        }
        let dd = d.degree();
        let inv = d.lc().recip();
        let mut quot = vec![Rat::zero(); r.0.len() - dd];
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let c = r.lc() * &inv;
            for (i, b) in d.0.iter().enumerate() {
                r.0[i + shift] -= &c * b;
            }
            quot[shift] = c;
            r.trim();
        }
        let mut q = UPoly(quot);
        q.trim();
        (q, r)
    }

    fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Polynomial in `z` with `UPoly` coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BPoly(Vec<UPoly>);

impl BPoly {
    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &UPoly {
        self.0.last().expect("lc of zero polynomial")
    }

    /// Converts a Laurent polynomial with non-negative exponents.
    pub(crate) fn from_laurent(p: &LaurentPoly) -> BPoly {
        let (_, maxz) = p.max_exps();
        let mut rows: Vec<Vec<Rat>> = vec![Vec::new(); if p.is_zero() { 0 } else { maxz as usize + 1 }];
        for (&(a, b), c) in p.terms() {
            debug_assert!(a >= 0 && b >= 0);
            let row = &mut rows[b as usize];
            if row.len() <= a as usize {
                row.resize(a as usize + 1, Rat::zero());
            }
            row[a as usize] = c.clone();
        }
        let mut out = BPoly(
            rows.into_iter()
                .map(|r| {
                    let mut u = UPoly(r);
                    u.trim();
                    u
                })
                .collect(),
        );
        out.trim();
        out
    }

    pub(crate) fn to_laurent(&self) -> LaurentPoly {
        let mut terms = Vec::new();
        for (b, row) in self.0.iter().enumerate() {
            for (a, c) in row.0.iter().enumerate() {
                if !c.is_zero() {
                    terms.push(((a as i32, b as i32), c.clone()));
                }
            }
        }
        LaurentPoly::from_terms(terms)
    }

    fn content(&self) -> UPoly {
        let mut g = UPoly::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.degree() == 0 && !g.is_zero() {
                break;
            }
        }
        g
    }

    fn div_upoly(&self, d: &UPoly) -> BPoly {
        BPoly(
            self.0
                .iter()
                .map(|c| {
                    let (q, r) = c.divrem(d);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    fn mul_upoly(&self, d: &UPoly) -> BPoly {
        let mut out = BPoly(self.0.iter().map(|c| c.mul(d)).collect());
        out.trim();
        out
    }

    fn primitive(&self) -> BPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.div_upoly(&c)
    }

    /// Pseudo-remainder of `self` by `d` in `z`.
    fn prem(&self, d: &BPoly) -> BPoly {
        let mut r = self.clone();
        let dd = d.degree();
        let lcd = d.lc().clone();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let lcr = r.lc().clone();
            let mut next = r.mul_upoly(&lcd);
            for (i, c) in d.0.iter().enumerate() {
                next.0[i + shift] = next.0[i + shift].sub(&c.mul(&lcr));
            }
            next.trim();
            r = next;
        }
        r
    }

    fn gcd(&self, o: &BPoly) -> BPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let cont = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().mul_upoly(&cont)
    }
}

/// GCD of two Laurent polynomials, up to a unit `c q^a z^b`.
///
/// The result is a polynomial with no monomial factor.
pub fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let strip = |p: &LaurentPoly| {
        let (x, y) = p.min_exps();
        p.shift(-x, -y)
    };
    if a.is_zero() {
        return strip(b);
    }
    if b.is_zero() {
        return strip(a);
    }
    let pa = BPoly::from_laurent(&strip(a));
    let pb = BPoly::from_laurent(&strip(b));
    let g = pa.gcd(&pb).to_laurent();
    strip(&g)
}

/// Exact quotient `a / d` of Laurent polynomials, if it exists.
///
/// Sparse division on leading terms (highest `z`, then highest `q`). Every
/// quotient exponent must lie in the box spanned by `min(a) - min(d)` and
/// `max(a) - max(d)`, which bounds the loop.
pub fn laurent_exact_div(a: &LaurentPoly, d: &LaurentPoly) -> Option<LaurentPoly> {
    if d.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    if d.is_one() {
        return Some(a.clone());
    }
    let (alo, ahi) = (a.min_exps(), a.max_exps());
    let (dlo, dhi) = (d.min_exps(), d.max_exps());
    let (qlo, qhi) = ((alo.0 - dlo.0, alo.1 - dlo.1), (ahi.0 - dhi.0, ahi.1 - dhi.1));
    if qlo.0 > qhi.0 || qlo.1 > qhi.1 {
        return None;
    }
    let key = |e: Exps| (e.1, e.0);
    let mut rem: BTreeMap<(i32, i32), Rat> = a.terms().map(|(e, c)| (key(*e), c.clone())).collect();
    let divisor: Vec<(Exps, Rat)> = d.terms().map(|(e, c)| (*e, c.clone())).collect();
    let (dlead, dlc) = d.leading().map(|(e, c)| (e, c.clone()))?;
    let mut quot = Vec::new();
    while let Some(((z, q), c)) = rem.pop_last() {
        let e = (q - dlead.0, z - dlead.1);
        if e.0 < qlo.0 || e.0 > qhi.0 || e.1 < qlo.1 || e.1 > qhi.1 {
            return None;
        }
        let f = &c / &dlc;
        for (de, dc) in &divisor {
            if *de == dlead {
                continue;
            }
            let k = key((de.0 + e.0, de.1 + e.1));
            let v = rem.remove(&k).unwrap_or_default() - &f * dc;
            if !v.is_zero() {
                rem.insert(k, v);
            }
        }
        quot.push((e, f));
    }
    Some(LaurentPoly::from_terms(quot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_laurent;

    fn p(s: &str) -> LaurentPoly {
        parse_laurent(s).unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let a = p("(q + z)*(q - 1)*(z^2 + q)");
        let b = p("(q + z)*(z - q^2)*(q - 1)");
        let g = laurent_gcd(&a, &b);
        let expect = p("(q + z)*(q - 1)");
        assert!(laurent_exact_div(&g, &expect).unwrap().as_constant().is_some());
    }

    #[test]
    fn gcd_coprime() {
        let g = laurent_gcd(&p("q + z + 1"), &p("q*z - 1"));
        assert!(g.as_constant().is_some());
    }

    #[test]
    fn gcd_ignores_monomials() {
        let g = laurent_gcd(&p("q^-2*(z + 1)"), &p("z^3*(z + 1)*(q + 2)"));
        assert_eq!(g, p("z + 1"));
    }

    #[test]
    fn exact_division() {
        let a = p("(q^2 - q + 1)*(z + 1 - q)*q^-1");
        let d = p("z + 1 - q");
        assert_eq!(laurent_exact_div(&a, &d).unwrap(), p("q - 1 + q^-1"));
        assert!(laurent_exact_div(&p("q + 1"), &p("q - 1")).is_none());
    }
}
