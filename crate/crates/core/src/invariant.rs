//! The invariant `X_α̂ = Δ^{n-1} (√λ)^e tr(α)` of links in the solid torus.

use std::collections::BTreeMap;
use std::fmt;

use crate::braid::{MixedBraidWord, Move};
use crate::coeff::{RationalFn, SqrtLambdaScalar};
use crate::error::Result;
use crate::trace::{trace_word, SMonomial, TraceValue};

/// `scalar · trace`, compared after folding the scalar into the trace.
#[derive(Clone, Debug)]
pub struct XValue {
    pub scalar: SqrtLambdaScalar,
    pub trace: TraceValue,
}

impl XValue {
    /// `(h, {m ↦ c})` with value `(√λ)^h Σ c·m` and `h ∈ {0, 1}`.
    pub fn normalized(&self) -> (u8, BTreeMap<SMonomial, RationalFn>) {
        let c = self.scalar.coeff();
        let terms: BTreeMap<SMonomial, RationalFn> = self
            .trace
            .terms()
            .iter()
            .map(|(m, v)| (m.clone(), c.scale_poly(v)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        let h = if terms.is_empty() { 0 } else { self.scalar.half_power() };
        (h, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.normalized().1.is_empty()
    }
}

impl PartialEq for XValue {
    fn eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }
}

impl Eq for XValue {}

impl fmt::Display for XValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scalar.as_rational().is_some_and(RationalFn::is_one) {
            write!(f, "{}", self.trace)
        } else {
            write!(f, "{} * ({})", self.scalar, self.trace)
        }
    }
}

/// `Δ^{n-1} (√λ)^e`
pub fn normalizing_scalar(strands: usize, e: i64) -> SqrtLambdaScalar {
    let delta = SqrtLambdaScalar::delta()
        .pow(strands as i64 - 1)
        .expect("Δ is invertible");
    let root = SqrtLambdaScalar::sqrt_lambda_pow(e).expect("λ is invertible");
    &delta * &root
}

pub fn x_invariant(w: &MixedBraidWord) -> XValue {
    XValue {
        scalar: normalizing_scalar(w.strands(), w.sigma_exponent_sum()),
        trace: trace_word(w),
    }
}

/// Whether `X` takes the same value before and after the move.
pub fn check_markov_invariance(w: &MixedBraidWord, mv: &Move) -> Result<bool> {
    Ok(x_invariant(w) == x_invariant(&w.apply_move(mv)?))
}

#[cfg(test)]
mod tests {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::braid::parse_word;
    use crate::coeff::{parse_rational, LaurentPoly};
    use crate::Sign;

    fn x(s: &str, n: usize) -> XValue {
        x_invariant(&parse_word(s, n).unwrap())
    }

    fn plain(t: TraceValue) -> XValue {
        XValue {
            scalar: SqrtLambdaScalar::one(),
            trace: t,
        }
    }

    #[test]
    fn delta_simplifies() {
        let expect = SqrtLambdaScalar::new(-1, parse_rational("1/z").unwrap()).unwrap();
        assert_eq!(SqrtLambdaScalar::delta(), expect);
    }

    #[test]
    fn unknot_values() {
        assert_eq!(x("1", 1), plain(TraceValue::one()));
        assert_eq!(x("g1", 2), plain(TraceValue::one()));
        assert_eq!(x("g1^-1", 2), plain(TraceValue::one()));
        assert_eq!(x("t^2", 1), plain(TraceValue::s(2)));
        assert_eq!(x("t^2", 1).to_string(), "s[2]");
    }

    #[test]
    fn two_component_unlink() {
        let d = SqrtLambdaScalar::delta();
        assert_eq!(
            x("1", 2),
            XValue {
                scalar: d,
                trace: TraceValue::one()
            }
        );
        assert!(!x("1", 2).is_zero());
        assert_ne!(x("1", 2), plain(TraceValue::one().scale(&LaurentPoly::one())));
    }

    #[test]
    fn markov_moves() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let n = rng.gen_range(1..=2);
            let w = MixedBraidWord::random(&mut rng, n, 4, 2);
            let v = MixedBraidWord::random(&mut rng, n, 3, 1);
            for mv in [
                Move::Conjugate(v),
                Move::Stabilize(Sign::Plus),
                Move::Stabilize(Sign::Minus),
                Move::LoopConjugate(Sign::Plus),
                Move::LoopConjugate(Sign::Minus),
            ] {
                assert!(check_markov_invariance(&w, &mv).unwrap(), "{w} {mv:?}");
            }
        }
    }

    #[test]
    fn band_move_changes_value() {
        let w = parse_word("t", 1).unwrap();
        let mv = Move::Bbm {
            strand: 1,
            sign: Sign::Plus,
            p: 1,
        };
        assert!(!check_markov_invariance(&w, &mv).unwrap());
    }
}
