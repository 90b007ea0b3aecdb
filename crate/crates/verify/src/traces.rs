use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skein_core::braid::{expand_loop, Gen, MixedBraidWord, Move};
use skein_core::coeff::LaurentPoly;
use skein_core::hecke::normal_form;
use skein_core::invariant::check_markov_invariance;
use skein_core::skein::{enumerate_level, Bounds, Convention, SetKind};
use skein_core::trace::{markov_trace, trace_of_prime_loops, trace_via_prime, trace_word, TraceValue};
use skein_core::{Sign, Variant};

use crate::Outcome;

const INSTANCES: usize = 200;

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> MixedBraidWord {
    let len = rng.gen_range(1..=5);
    MixedBraidWord::random(rng, n, len, 2)
}

pub fn rules() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(31);

    let mut bad = 0;
    for _ in 0..INSTANCES {
        let n = rng.gen_range(1..=3);
        let a = random_word(&mut rng, n);
        let b = random_word(&mut rng, n);
        if trace_word(&a.concat(&b)) != trace_word(&b.concat(&a)) {
            bad += 1;
        }
    }
    out.check(
        bad == 0,
        format!("tr(ab) = tr(ba): {INSTANCES} instances, {bad} failures"),
    );

    let z = LaurentPoly::z();
    let mut bad = 0;
    for _ in 0..INSTANCES {
        let n = rng.gen_range(1..=3);
        let a = random_word(&mut rng, n);
        let mut ag = a.embed(n + 1);
        ag.push(Gen::Sigma(n), 1).expect("index in range");
        if trace_word(&ag) != trace_word(&a).scale(&z) {
            bad += 1;
        }
    }
    out.check(
        bad == 0,
        format!("tr(a g_n) = z tr(a): {INSTANCES} instances, {bad} failures"),
    );

    let mut bad = 0;
    for _ in 0..INSTANCES {
        let n = rng.gen_range(1..=3);
        let k = *[-3, -2, -1, 1, 2, 3].get(rng.gen_range(0..6)).expect("in range");
        let a = random_word(&mut rng, n);
        let at = a
            .embed(n + 1)
            .concat(&expand_loop(n, Variant::TPrime, k, n + 1).expect("index in range"));
        if trace_word(&at) != trace_word(&a).mul_s(k) {
            bad += 1;
        }
    }
    out.check(
        bad == 0,
        format!("tr(a t'_n^k) = s_k tr(a), |k| <= 3: {INSTANCES} instances, {bad} failures"),
    );

    let mut bad = 0;
    for _ in 0..INSTANCES {
        let n = rng.gen_range(1..=3);
        let e = normal_form(&random_word(&mut rng, n), Variant::T);
        if markov_trace(&e) != trace_via_prime(&e) {
            bad += 1;
        }
    }
    out.check(
        bad == 0,
        format!("trace through the t basis equals trace through the t' basis: {INSTANCES} elements, {bad} differ"),
    );
    out
}

pub fn prime_monomials() -> Outcome {
    let mut out = Outcome::new();
    let bounds = Bounds {
        max_index: 2,
        exp_bound: 3,
        positive_only: false,
    };
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let (mut total, mut wrong) = (0, Vec::new());
    for level in -4..=4 {
        for m in enumerate_level(SetKind::LambdaPrime, level, bounds, Convention::Increasing) {
            let computed: TraceValue = trace_word(&m.to_braid_word());
            if computed != trace_of_prime_loops(m.exponents()) {
                wrong.push(m.to_string());
            }
            seen.insert(computed.to_string());
            total += 1;
        }
    }
    out.check(
        wrong.is_empty(),
        format!(
            "{total} monomials of level -4..4, index <= 2, |k_i| <= 3 trace to their s-monomial; mismatches: {wrong:?}"
        ),
    );
    out.check(
        seen.len() == total,
        format!("{} distinct trace values for {total} monomials", seen.len()),
    );
    out
}

pub fn invariant_x() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(57);
    let words = 100;
    let mut bad = Vec::new();
    for i in 0..words {
        let n = rng.gen_range(1..=3);
        let w = random_word(&mut rng, n);
        let v = random_word(&mut rng, n);
        let moves = [
            Move::Conjugate(v),
            Move::LoopConjugate(Sign::Plus),
            Move::LoopConjugate(Sign::Minus),
            Move::Stabilize(Sign::Plus),
            Move::Stabilize(Sign::Minus),
        ];
        for mv in &moves {
            if !check_markov_invariance(&w, mv).expect("move applies") {
                bad.push(format!("word {i}: {mv:?}"));
            }
        }
    }
    out.check(
        bad.is_empty(),
        format!("X unchanged under conjugation, loop conjugation and both stabilizations on {words} words, n <= 3; failures: {bad:?}"),
    );
    out
}
