use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skein_core::braid::{parse_word, MixedBraidWord};
use skein_core::coeff::parse_laurent;
use skein_core::hecke::{normal_form, verify_identity, AlgebraElement, Identity};
use skein_core::Variant;

use crate::Outcome;

fn nf(s: &str, n: usize) -> AlgebraElement {
    normal_form(&parse_word(s, n).expect("well-formed word"), Variant::T)
}

fn relation_failures(n: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let mut expect = |lhs: String, rhs: AlgebraElement| {
        if nf(&lhs, n) != rhs {
            bad.push(format!("n={n}: {lhs}"));
        }
    };
    for i in 1..n {
        let quad = AlgebraElement::g(n, Variant::T, i)
            .scale(&parse_laurent("q - 1").expect("literal"))
            .add(&AlgebraElement::scalar(
                n,
                Variant::T,
                parse_laurent("q").expect("literal"),
            ))
            .expect("same shape");
        expect(format!("g{i} g{i}"), quad);
        expect(format!("g{i} g{i}^-1"), AlgebraElement::one(n, Variant::T));
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                expect(format!("g{i} g{j}"), nf(&format!("g{j} g{i}"), n));
            }
        }
        if i + 1 < n {
            let j = i + 1;
            expect(format!("g{i} g{j} g{i}"), nf(&format!("g{j} g{i} g{j}"), n));
        }
        if i > 1 {
            expect(format!("t g{i}"), nf(&format!("g{i} t"), n));
        }
    }
    if n >= 2 {
        expect("g1 t g1 t".into(), nf("t g1 t g1", n));
    }
    expect("t t^-1".into(), AlgebraElement::one(n, Variant::T));
    bad
}

pub fn soundness() -> Outcome {
    let mut out = Outcome::new();
    let bad: Vec<String> = (1..=4).flat_map(relation_failures).collect();
    out.check(
        bad.is_empty(),
        format!("defining relations for n = 1..4; violations: {bad:?}"),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures = 0;
    let pairs = 200;
    for _ in 0..pairs {
        let n = rng.gen_range(1..=4);
        let u = MixedBraidWord::random(&mut rng, n, 6, 2);
        let v = MixedBraidWord::random(&mut rng, n, 6, 2);
        let whole = normal_form(&u.concat(&v), Variant::T);
        let product = normal_form(&u, Variant::T)
            .multiply(&normal_form(&v, Variant::T))
            .expect("same shape");
        if whole != product {
            failures += 1;
        }
    }
    out.check(
        failures == 0,
        format!("nf(uv) = nf(u)nf(v) on {pairs} random pairs, n <= 4; {failures} mismatches"),
    );
    out
}

pub fn identities() -> Outcome {
    let mut out = Outcome::new();
    let mut run = |id: Identity, ns: &[usize], ks: &[i64], required: bool| {
        let mut bad = Vec::new();
        for &n in ns {
            for &k in ks {
                let check = verify_identity(id, n, k).expect("parameters in range");
                if !check.holds() {
                    bad.push((n, k));
                }
            }
        }
        let line = format!("{} for n in {ns:?}, k in {ks:?}; failing (n, k): {bad:?}", id.name());
        if required {
            out.check(bad.is_empty(), line);
        } else {
            out.note(line);
        }
    };
    let pos: Vec<i64> = (1..=5).collect();
    let neg: Vec<i64> = (-5..=-1).collect();
    run(Identity::Eq5, &[1, 2, 3], &pos, true);
    run(Identity::Eq5, &[1, 2, 3], &neg, true);
    run(Identity::Lemma2i, &[1, 2], &pos, true);
    run(Identity::Lemma2iiDerived, &[1, 2], &neg, true);
    run(Identity::Lemma2iiPrinted, &[1, 2], &neg, false);
    out
}
