use std::cmp::Ordering;

use proptest::prelude::*;
use skein_core::braid::{Gen, MixedBraidWord};
use skein_core::coeff::{parse_laurent, rat, LaurentPoly, RationalFn};
use skein_core::hecke::normal_form;
use skein_core::skein::{decompose_to_lower, SkeinMonomial};
use skein_core::trace::{markov_trace, trace_via_prime, trace_word};
use skein_core::Variant;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -2i32..=2, -4i64..=4), 0..5)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(a, b, c)| ((a, b), rat(c)))))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn word(strands: usize, len: usize) -> impl Strategy<Value = MixedBraidWord> {
    prop::collection::vec(
        (0..strands, prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)]),
        0..=len,
    )
    .prop_map(move |letters| {
        let letters = letters
            .into_iter()
            .map(|(g, e)| (if g == 0 { Gen::T } else { Gen::Sigma(g) }, e));
        MixedBraidWord::from_letters(strands, letters).unwrap()
    })
}

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha,
        rng_seed: prop::test_runner::RngSeed::Fixed(20_240_613),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cfg(128))]

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        prop_assert_eq!(parse_laurent(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rational_functions_cancel(a in laurent(), b in nonzero_laurent(), c in nonzero_laurent()) {
        let x = RationalFn::new(a.clone(), b.clone()).unwrap();
        let y = RationalFn::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&x, &y);
        let back = &x * &RationalFn::from_poly(b);
        prop_assert_eq!(back, RationalFn::from_poly(a));
    }
}

proptest! {
    #![proptest_config(cfg(48))]

    #[test]
    fn normal_form_is_multiplicative(u in word(3, 5), v in word(3, 5)) {
        let whole = normal_form(&u.concat(&v), Variant::T);
        let product = normal_form(&u, Variant::T).multiply(&normal_form(&v, Variant::T)).unwrap();
        prop_assert_eq!(whole, product);
    }

    #[test]
    fn inverse_word_gives_identity(u in word(3, 6)) {
        let e = normal_form(&u.concat(&u.inverse()), Variant::T);
        prop_assert_eq!(e, normal_form(&MixedBraidWord::identity(3), Variant::T));
    }

    #[test]
    fn bases_round_trip(u in word(3, 6)) {
        let e = normal_form(&u, Variant::T);
        prop_assert_eq!(e.to_variant(Variant::TPrime).to_variant(Variant::T), e.clone());
        prop_assert_eq!(normal_form(&u, Variant::TPrime), e.to_variant(Variant::TPrime));
    }

    #[test]
    fn trace_is_cyclic(u in word(3, 5), v in word(3, 5)) {
        prop_assert_eq!(trace_word(&u.concat(&v)), trace_word(&v.concat(&u)));
    }

    #[test]
    fn trace_routes_agree(u in word(3, 6)) {
        let e = normal_form(&u, Variant::T);
        prop_assert_eq!(markov_trace(&e), trace_via_prime(&e));
    }
}

fn monomial() -> impl Strategy<Value = SkeinMonomial> {
    prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 1..=3)
        .prop_map(|exps| SkeinMonomial::new(Variant::T, exps).unwrap())
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn order_is_total(a in monomial(), b in monomial()) {
        prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
        prop_assert_eq!(a.compare(&b) == Ordering::Equal, a == b);
    }

    #[test]
    fn monomial_text_round_trip(a in monomial()) {
        prop_assert_eq!(a.to_string().parse::<SkeinMonomial>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(cfg(16))]

    #[test]
    fn decompositions_preserve_the_trace(exps in prop::collection::vec(1i64..=3, 2..=3)) {
        let m = SkeinMonomial::new(Variant::T, exps).unwrap();
        let d = decompose_to_lower(&m).unwrap();
        prop_assert!(d.trace_identity_holds());
    }
}
