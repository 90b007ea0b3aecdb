use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skein_core::bbm::{
    band_scalar, equation_for, generate_system, verify_main_theorem, StrandPolicy, SystemConfig, TheoremConfig,
};
use skein_core::braid::{parse_word, MixedBraidWord, Move};
use skein_core::coeff::RationalFn;
use skein_core::invariant::check_markov_invariance;
use skein_core::skein::{Bounds, Convention, SetKind, SkeinMonomial};
use skein_core::Sign;

const POSITIVE: Bounds = Bounds {
    max_index: 2,
    exp_bound: 3,
    positive_only: true,
};

fn config(level: i64, strands: StrandPolicy) -> SystemConfig {
    SystemConfig {
        set: SetKind::Lambda,
        level,
        bounds: POSITIVE,
        p: 1,
        signs: vec![Sign::Plus, Sign::Minus],
        strands,
        convention: Convention::Increasing,
    }
}

#[test]
fn band_scalars_follow_the_level() {
    let lambda = RationalFn::lambda();
    let z = RationalFn::from_poly(skein_core::coeff::LaurentPoly::z());
    assert_eq!(&band_scalar(3, Sign::Plus) * &z, lambda.pow(3).unwrap());
    assert_eq!(&band_scalar(3, Sign::Minus) * &z, lambda.pow(2).unwrap());
    assert_eq!(&band_scalar(-1, Sign::Minus) * &z, lambda.pow(-2).unwrap());
}

#[test]
fn system_sizes_at_level_three() {
    let first = generate_system(&config(3, StrandPolicy::FirstOnly), Some(1)).unwrap();
    assert_eq!(first.rows.len(), 6);
    let all = generate_system(&config(3, StrandPolicy::AllStrands), Some(2)).unwrap();
    assert_eq!(all.rows.len(), 12);
    for row in &first.rows {
        assert!(all.rows.contains(row));
    }
}

#[test]
fn equations_are_nonzero_and_check_the_strand() {
    let t = "t^2".parse::<SkeinMonomial>().unwrap();
    let e = equation_for(&t, 1, Sign::Plus, 1).unwrap();
    assert!(!e.form.is_empty());
    assert!(equation_for(&t, 0, Sign::Plus, 1).is_err());
}

#[test]
fn band_moves_change_the_invariant_but_markov_moves_do_not() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let w = MixedBraidWord::random(&mut rng, 2, 5, 2);
        for mv in [
            Move::Stabilize(Sign::Plus),
            Move::Stabilize(Sign::Minus),
            Move::LoopConjugate(Sign::Plus),
        ] {
            assert!(check_markov_invariance(&w, &mv).unwrap());
        }
    }
    let w = parse_word("t^2", 1).unwrap();
    assert!(!check_markov_invariance(
        &w,
        &Move::Bbm {
            strand: 1,
            sign: Sign::Plus,
            p: 1
        }
    )
    .unwrap());
}

#[test]
fn theorem_main_clause_at_level_two() {
    let cfg = TheoremConfig {
        level: 2,
        bounds: POSITIVE,
        p: 1,
        signs: vec![Sign::Plus, Sign::Minus],
        seed: 3,
    };
    let report = verify_main_theorem(&cfg, Some(1)).unwrap();
    assert!(report.main_ok());
    assert_eq!(report.targets.len(), 6);
}
