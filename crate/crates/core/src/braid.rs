//! Mixed braid words in `B_{1,n}`.
//!
//! A word lives on `n` moving strands plus the fixed strand. Letters are the
//! loop generator `t` and the crossings `σ_1 … σ_{n-1}` with nonzero integer
//! exponents. Words are kept freely reduced: adjacent letters with the same
//! generator are merged and cancelled.

use std::fmt;

use rand::Rng;

use crate::error::{Result, SkeinError};
use crate::{Sign, Variant};

/// A generator of `B_{1,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    T,
    /// `σ_i`, 1-based.
    Sigma(usize),
}

/// A freely reduced word in `t, σ_1, …, σ_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedBraidWord {
    strands: usize,
    letters: Vec<(Gen, i64)>,
}

/// An equivalence move on mixed braids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// `α ↦ v⁻¹ α v`
    Conjugate(MixedBraidWord),
    /// `α ↦ α σ_n^{±1}` on `n + 1` strands.
    Stabilize(Sign),
    /// `α ↦ t^{±1} α t^{∓1}`
    LoopConjugate(Sign),
    /// `α ↦ t^p α_+ σ_m … σ_2 σ_1^ε σ_2⁻¹ … σ_m⁻¹`
    Bbm { strand: usize, sign: Sign, p: i64 },
}

impl MixedBraidWord {
    /// The identity braid on `strands` moving strands.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a mixed braid has at least one moving strand");
        MixedBraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn from_letters<I>(strands: usize, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Gen, i64)>,
    {
        let mut w = Self::identity(strands);
        for (g, e) in letters {
            w.push(g, e)?;
        }
        Ok(w)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends `g^e`, merging with the last letter.
    pub fn push(&mut self, g: Gen, e: i64) -> Result<()> {
        if let Gen::Sigma(i) = g {
            if i == 0 || i >= self.strands {
                return Err(SkeinError::IndexOutOfRange {
                    index: i,
                    strands: self.strands,
                });
            }
        }
        if e == 0 {
            return Ok(());
        }
        match self.letters.last_mut() {
            Some((last, k)) if *last == g => {
                *k += e;
                if *k == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
        Ok(())
    }

    /// Concatenation `self · other`; the shorter word is embedded first.
    pub fn concat(&self, other: &MixedBraidWord) -> MixedBraidWord {
        let n = self.strands.max(other.strands);
        let mut w = self.embed(n);
        for &(g, e) in &other.letters {
            w.push(g, e).expect("indices valid after embedding");
        }
        w
    }

    pub fn inverse(&self) -> MixedBraidWord {
        MixedBraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// `self^k`; negative powers use the inverse word.
    pub fn pow(&self, k: i64) -> MixedBraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::identity(self.strands);
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// The same word viewed on `strands ≥ self.strands()` strands.
    pub fn embed(&self, strands: usize) -> MixedBraidWord {
        assert!(strands >= self.strands, "cannot embed into fewer strands");
        MixedBraidWord {
            strands,
            letters: self.letters.clone(),
        }
    }

    /// Exponent sum of the `σ`-letters.
    pub fn sigma_exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .filter(|(g, _)| matches!(g, Gen::Sigma(_)))
            .map(|&(_, e)| e)
            .sum()
    }

    /// Exponent sum of the `t`-letters.
    pub fn t_exponent_sum(&self) -> i64 {
        self.letters.iter().filter(|(g, _)| *g == Gen::T).map(|&(_, e)| e).sum()
    }

    /// The map `α ↦ α_+`: `σ_i ↦ σ_{i+1}` and `t ↦ t_1 = σ_1 t σ_1`.
    pub fn shift_indices(&self) -> MixedBraidWord {
        let mut w = Self::identity(self.strands + 1);
        for &(g, e) in &self.letters {
            match g {
                Gen::T => {
                    let t1 =
                        expand_loop(1, Variant::T, e, self.strands + 1).expect("t_1 exists on two or more strands");
                    w = w.concat(&t1);
                }
                Gen::Sigma(i) => w.push(Gen::Sigma(i + 1), e).expect("shifted index valid"),
            }
        }
        w
    }

    pub fn apply_move(&self, mv: &Move) -> Result<MixedBraidWord> {
        match mv {
            Move::Conjugate(v) => {
                if v.strands > self.strands {
                    return Err(SkeinError::StrandMismatch {
                        left: self.strands,
                        right: v.strands,
                    });
                }
                Ok(v.inverse().concat(self).concat(v))
            }
            Move::Stabilize(s) => {
                let mut w = self.embed(self.strands + 1);
                w.push(Gen::Sigma(self.strands), s.value())?;
                Ok(w)
            }
            Move::LoopConjugate(s) => {
                let e = s.value();
                let mut w = Self::identity(self.strands);
                w.push(Gen::T, e)?;
                let mut w = w.concat(self);
                w.push(Gen::T, -e)?;
                Ok(w)
            }
            Move::Bbm { strand, sign, p } => self.bbm(*strand, *sign, *p),
        }
    }

    /// Braid band move on moving strand `m`.
    ///
    /// A word on fewer than `m` strands is first embedded into `m` strands.
    pub fn bbm(&self, m: usize, sign: Sign, p: i64) -> Result<MixedBraidWord> {
        if m == 0 {
            return Err(SkeinError::IndexOutOfRange {
                index: m,
                strands: self.strands,
            });
        }
        let base = self.embed(self.strands.max(m));
        let shifted = base.shift_indices();
        let mut w = Self::identity(shifted.strands);
        w.push(Gen::T, p)?;
        let mut w = w.concat(&shifted);
        for i in (2..=m).rev() {
            w.push(Gen::Sigma(i), 1)?;
        }
        w.push(Gen::Sigma(1), sign.value())?;
        for i in 2..=m {
            w.push(Gen::Sigma(i), -1)?;
        }
        Ok(w)
    }

    /// Uniformly random word with `len` letters and exponents in `±1..=max_exp`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize, max_exp: i64) -> Self {
        let mut w = Self::identity(strands);
        for _ in 0..len {
            let g = match rng.gen_range(0..strands) {
                0 => Gen::T,
                i => Gen::Sigma(i),
            };
            let mag = rng.gen_range(1..=max_exp.max(1));
            let e = if rng.gen_bool(0.5) { mag } else { -mag };
            w.push(g, e).expect("generated index in range");
        }
        w
    }
}

/// `t_i^k` or `t'_i^k` as a word on `strands` strands; `t_0 = t'_0 = t`.
pub fn expand_loop(i: usize, variant: Variant, k: i64, strands: usize) -> Result<MixedBraidWord> {
    if i >= strands {
        return Err(SkeinError::IndexOutOfRange { index: i, strands });
    }
    let mut up = MixedBraidWord::identity(strands);
    for j in (1..=i).rev() {
        up.push(Gen::Sigma(j), 1)?;
    }
    let mut w = up.clone();
    match variant {
        Variant::T => {
            w.push(Gen::T, 1)?;
            Ok(w.concat(&up.reversed_letters()).pow(k))
        }
        Variant::TPrime => {
            w.push(Gen::T, k)?;
            Ok(w.concat(&up.inverse()))
        }
    }
}

impl MixedBraidWord {
    /// The word with its letters in reverse order (not the inverse).
    fn reversed_letters(&self) -> MixedBraidWord {
        MixedBraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().cloned().collect(),
        }
    }
}

/// Parses a whitespace-separated word: `t`, `t<i>`, `u<i>`, `g<i>`, each with
/// an optional `^<integer>`. `t<i>` and `u<i>` are the looping elements `t_i`
/// and `t'_i`, expanded on the spot. The empty word may be written `1`.
pub fn parse_word(text: &str, strands: usize) -> Result<MixedBraidWord> {
    if strands == 0 {
        return Err(SkeinError::Invalid("strand count must be at least 1".into()));
    }
    let mut w = MixedBraidWord::identity(strands);
    let mut offset = 0;
    let mut tokens = Vec::new();
    for tok in text.split_whitespace() {
        let at = offset + text[offset..].find(tok).expect("token is in text");
        offset = at + tok.len();
        tokens.push((at, tok));
    }
    if tokens.len() == 1 && tokens[0].1 == "1" {
        return Ok(w);
    }
    for (at, tok) in tokens {
        let (head, exp) = match tok.find('^') {
            Some(c) => {
                let e: i64 = tok[c + 1..]
                    .parse()
                    .map_err(|_| SkeinError::parse(at + c + 1, "malformed exponent"))?;
                (&tok[..c], e)
            }
            None => (tok, 1),
        };
        let mut chars = head.chars();
        let kind = chars.next().ok_or_else(|| SkeinError::parse(at, "empty token"))?;
        let idx_text = chars.as_str();
        let index = if idx_text.is_empty() {
            None
        } else {
            Some(
                idx_text
                    .parse::<usize>()
                    .map_err(|_| SkeinError::parse(at + 1, "malformed index"))?,
            )
        };
        let range_err = |index: usize| SkeinError::IndexOutOfRange { index, strands };
        match (kind, index) {
            ('t', None) => w.push(Gen::T, exp)?,
            ('t' | 'u', Some(i)) => {
                let variant = if kind == 't' { Variant::T } else { Variant::TPrime };
                let l = expand_loop(i, variant, exp, strands).map_err(|_| range_err(i))?;
                w = w.concat(&l);
            }
            ('g', Some(i)) => w.push(Gen::Sigma(i), exp).map_err(|_| range_err(i))?,
            _ => return Err(SkeinError::parse(at, format!("unknown token '{tok}'"))),
        }
    }
    Ok(w)
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::T => write!(f, "t"),
            Gen::Sigma(i) => write!(f, "g{i}"),
        }
    }
}

impl fmt::Display for MixedBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (n, (g, e)) in self.letters.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str, n: usize) -> MixedBraidWord {
        parse_word(s, n).unwrap()
    }

    #[test]
    fn tokenizes() {
        let v = w("t^2 g1^-1", 2);
        assert_eq!(v.letters(), &[(Gen::T, 2), (Gen::Sigma(1), -1)]);
        assert_eq!(v.to_string(), "t^2 g1^-1");
    }

    #[test]
    fn loop_letters_expand_and_merge() {
        assert_eq!(w("t1^3 g1", 2).to_string(), "g1 t g1^2 t g1^2 t g1^2");
        assert_eq!(w("t1^2", 2).to_string(), "g1 t g1^2 t g1");
        assert_eq!(w("u1", 2).to_string(), "g1 t g1^-1");
        assert_eq!(w("t1^-1", 2).to_string(), "g1^-1 t^-1 g1^-1");
        assert_eq!(w("u2^-2", 3).to_string(), "g2 g1 t^-2 g1^-1 g2^-1");
        assert_eq!(w("t0^4", 1), w("t^4", 1));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_word("g3", 2),
            Err(SkeinError::IndexOutOfRange { index: 3, strands: 2 })
        );
        assert!(matches!(parse_word("t g1^x", 2), Err(SkeinError::Parse { pos: 5, .. })));
        assert!(matches!(parse_word("t h1", 2), Err(SkeinError::Parse { pos: 2, .. })));
        assert!(parse_word("g0", 2).is_err());
        assert!(parse_word("t2", 2).is_err());
    }

    #[test]
    fn cancellation_cascades() {
        assert!(w("g1 t g2 g2^-1 t^-1 g1^-1", 3).is_identity());
        assert_eq!(w("1", 2).to_string(), "1");
        assert!(w("", 2).is_identity());
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("t^2 g1^2 g2^-1", 3).sigma_exponent_sum(), 1);
        for k in [-3, -1, 1, 2, 5] {
            let l = expand_loop(1, Variant::T, k, 2).unwrap();
            assert_eq!(l.sigma_exponent_sum(), 2 * k);
        }
        assert_eq!(w("t t1^2", 2).sigma_exponent_sum(), 4);
    }

    #[test]
    fn shifting() {
        assert_eq!(w("t", 1).shift_indices(), w("t1", 2));
        assert_eq!(w("g1", 2).shift_indices(), w("g2", 3));
        assert_eq!(w("t t1^2", 2).shift_indices(), w("t1 t2^2", 3));
        let a = w("t^2 g1^-1 t^-3 g1", 2);
        let s = a.shift_indices();
        assert_eq!(s.t_exponent_sum(), a.t_exponent_sum());
        assert_eq!(s.sigma_exponent_sum(), a.sigma_exponent_sum() + 2 * a.t_exponent_sum());
    }

    #[test]
    fn band_moves() {
        let p = 2;
        let a = w("t^3", 1);
        let b = a
            .apply_move(&Move::Bbm {
                strand: 1,
                sign: Sign::Plus,
                p,
            })
            .unwrap();
        assert_eq!(b, w("t^2 t1^3 g1", 2));
        let a = w("t t1^2", 2);
        let b = a.bbm(2, Sign::Plus, p).unwrap();
        assert_eq!(b, w("t^2 t1 t2^2 g2 g1 g2^-1", 3));
        let a = w("t^4", 1);
        assert_eq!(a.bbm(1, Sign::Minus, -1).unwrap(), w("t^-1 t1^4 g1^-1", 2));
        assert_eq!(w("t t1", 2).bbm(3, Sign::Plus, 1).unwrap().strands(), 4);
        assert!(a.bbm(0, Sign::Plus, 1).is_err());
    }

    #[test]
    fn moves_and_inverse_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=3);
            let a = MixedBraidWord::random(&mut rng, n, 6, 2);
            let v = MixedBraidWord::random(&mut rng, n, 4, 2);
            let c = a.apply_move(&Move::Conjugate(v.clone())).unwrap();
            let back = c.apply_move(&Move::Conjugate(v.inverse())).unwrap();
            assert_eq!(back, a);
            for s in [Sign::Plus, Sign::Minus] {
                let st = a.apply_move(&Move::Stabilize(s)).unwrap();
                assert_eq!(st.strands(), n + 1);
                assert_eq!(st.letters().last(), Some(&(Gen::Sigma(n), s.value())));
                let b = a
                    .apply_move(&Move::Bbm {
                        strand: 1,
                        sign: s,
                        p: 3,
                    })
                    .unwrap();
                assert_eq!(
                    b.sigma_exponent_sum(),
                    a.sigma_exponent_sum() + 2 * a.t_exponent_sum() + s.value()
                );
            }
            let l = a.apply_move(&Move::LoopConjugate(Sign::Plus)).unwrap();
            let l = l.apply_move(&Move::LoopConjugate(Sign::Minus)).unwrap();
            assert_eq!(l, a);
            assert_eq!(parse_word(&a.to_string(), n).unwrap(), a);
        }
    }
}
