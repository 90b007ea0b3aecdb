//! Elements of `H_{1,n}(q)` in the bases
//!
//! * `Σ_n  = { t_0^{k_0} t_1^{k_1} … t_{n-1}^{k_{n-1}} T_w }` and
//! * `Σ'_n = { t'_0^{k_0} t'_1^{k_1} … t'_{n-1}^{k_{n-1}} T_w }`,
//!
//! where zero exponents are gaps and `T_w` runs over the canonical reduced
//! words of `S_n`. The looping elements `t_i` commute, the `t'_i` do not, so
//! a `Σ'` word is the ordered product with increasing indices.
//!
//! Arithmetic happens in `Σ`; `Σ'` values are produced on request.

mod identities;
mod perm;
mod prime;
mod rules;

use std::collections::BTreeMap;
use std::fmt;

pub use identities::{verify_identity, Identity, IdentityCheck};
pub use perm::Perm;

use crate::braid::{expand_loop, Gen, MixedBraidWord};
use crate::coeff::{format_combination, LaurentPoly};
use crate::error::{Result, SkeinError};
use crate::Variant;
pub(crate) use rules::add_term;
use rules::Terms;

/// A basis word: loop exponents (zeros are gaps) and a type-A tail.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BasisWord {
    pub loops: Vec<i64>,
    pub perm: Perm,
}

impl BasisWord {
    pub fn new(loops: Vec<i64>, perm: Perm) -> Self {
        debug_assert_eq!(loops.len(), perm.len());
        BasisWord { loops, perm }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(vec![0; n], Perm::identity(n))
    }

    pub fn strands(&self) -> usize {
        self.loops.len()
    }

    pub fn embed(&self, n: usize) -> Self {
        let mut loops = self.loops.clone();
        loops.resize(n, 0);
        Self::new(loops, self.perm.embed(n))
    }

    /// The braid word `t_{i_1}^{k_1} … T_w` with loop letters expanded.
    pub fn to_word(&self, variant: Variant) -> MixedBraidWord {
        let n = self.strands();
        let mut w = MixedBraidWord::identity(n);
        for (i, &k) in self.loops.iter().enumerate() {
            if k != 0 {
                w = w.concat(&expand_loop(i, variant, k, n).expect("index below strands"));
            }
        }
        for s in self.perm.reduced_word() {
            w.push(Gen::Sigma(s), 1).expect("index below strands");
        }
        w
    }

    /// Text form, e.g. `t^2·u1·g1` for a `Σ'` word.
    pub fn label(&self, variant: Variant) -> String {
        let mut parts = Vec::new();
        let letter = match variant {
            Variant::T => "t",
            Variant::TPrime => "u",
        };
        for (i, &k) in self.loops.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let base = if i == 0 {
                "t".to_string()
            } else {
                format!("{letter}{i}")
            };
            parts.push(if k == 1 { base } else { format!("{base}^{k}") });
        }
        for s in self.perm.reduced_word() {
            parts.push(format!("g{s}"));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("·")
        }
    }
}

/// A finite linear combination of basis words with Laurent coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    strands: usize,
    variant: Variant,
    terms: Terms,
}

impl AlgebraElement {
    pub fn zero(strands: usize, variant: Variant) -> Self {
        AlgebraElement {
            strands,
            variant,
            terms: Terms::new(),
        }
    }

    pub fn one(strands: usize, variant: Variant) -> Self {
        Self::basis(BasisWord::identity(strands), variant)
    }

    pub fn basis(word: BasisWord, variant: Variant) -> Self {
        let mut e = Self::zero(word.strands(), variant);
        e.terms.insert(word, LaurentPoly::one());
        e
    }

    pub fn scalar(strands: usize, variant: Variant, c: LaurentPoly) -> Self {
        Self::one(strands, variant).scale(&c)
    }

    /// `t_i^k` (or `t'_i^k`) as a single basis word.
    pub fn loop_letter(strands: usize, variant: Variant, i: usize, k: i64) -> Self {
        let mut w = BasisWord::identity(strands);
        w.loops[i] = k;
        Self::basis(w, variant)
    }

    /// `g_i`
    pub fn g(strands: usize, variant: Variant, i: usize) -> Self {
        Self::basis(
            BasisWord::new(vec![0; strands], Perm::from_word(strands, &[i])),
            variant,
        )
    }

    pub(crate) fn from_terms(strands: usize, variant: Variant, terms: Terms) -> Self {
        AlgebraElement {
            strands,
            variant,
            terms,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn terms(&self) -> &BTreeMap<BasisWord, LaurentPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &BasisWord) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.strands, self.variant);
        for (w, v) in &self.terms {
            add_term(&mut out.terms, w.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, v) in &other.terms {
            add_term(&mut out.terms, w.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-LaurentPoly::one()))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(SkeinError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        if self.variant != other.variant {
            return Err(SkeinError::Invalid("elements in different bases".into()));
        }
        Ok(())
    }

    /// The product, in the variant of `self`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        match self.variant {
            Variant::T => Ok(self.mul_t(other)),
            Variant::TPrime => {
                let a = self.to_variant(Variant::T);
                let b = other.to_variant(Variant::T);
                Ok(a.mul_t(&b).to_variant(Variant::TPrime))
            }
        }
    }

    fn mul_t(&self, other: &Self) -> Self {
        let mut terms = Terms::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                rules::mul_basis(a, b, &(ca * cb), &mut terms);
            }
        }
        Self::from_terms(self.strands, Variant::T, terms)
    }

    /// Right multiplication by `g_s^e`, staying in `Σ`.
    fn mul_g_pow(&self, s: usize, e: i64) -> Self {
        let mut state = self.terms.clone();
        let qinv = LaurentPoly::q_pow(-1);
        let qinv_m1 = &qinv - &LaurentPoly::one();
        for _ in 0..e.unsigned_abs() {
            let mut next = Terms::new();
            for (w, c) in &state {
                let single: BTreeMap<Perm, LaurentPoly> = [(w.perm.clone(), LaurentPoly::one())].into_iter().collect();
                for (p, v) in rules::right_mul_tail(&single, s) {
                    let coeff = if e > 0 { &v * c } else { &(&v * &qinv) * c };
                    add_term(&mut next, BasisWord::new(w.loops.clone(), p), coeff);
                }
                if e < 0 {
                    add_term(&mut next, w.clone(), c * &qinv_m1);
                }
            }
            state = next;
        }
        Self::from_terms(self.strands, Variant::T, state)
    }

    /// The same element on `n ≥ strands` strands.
    pub fn embed(&self, n: usize) -> Self {
        assert!(n >= self.strands);
        let terms = self.terms.iter().map(|(w, c)| (w.embed(n), c.clone())).collect();
        Self::from_terms(n, self.variant, terms)
    }

    /// Rewrites the element in the requested basis.
    pub fn to_variant(&self, variant: Variant) -> Self {
        match (self.variant, variant) {
            (a, b) if a == b => self.clone(),
            (Variant::TPrime, Variant::T) => {
                let mut out = Self::zero(self.strands, Variant::T);
                for (w, c) in &self.terms {
                    let e = normal_form(&w.to_word(Variant::TPrime), Variant::T).scale(c);
                    out = out.add(&e).expect("same shape");
                }
                out
            }
            _ => prime::to_prime(self),
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(w, c)| (w.label(self.variant), c));
        f.write_str(&format_combination(terms))
    }
}

/// The element of `H_{1,n}(q)` represented by a braid word, in the given basis.
pub fn normal_form(word: &MixedBraidWord, variant: Variant) -> AlgebraElement {
    let n = word.strands();
    let mut acc = AlgebraElement::one(n, Variant::T);
    for &(g, e) in word.letters() {
        acc = match g {
            Gen::Sigma(s) => acc.mul_g_pow(s, e),
            Gen::T => acc.mul_t(&AlgebraElement::loop_letter(n, Variant::T, 0, e)),
        };
    }
    acc.to_variant(variant)
}

#[cfg(test)]
mod tests;
