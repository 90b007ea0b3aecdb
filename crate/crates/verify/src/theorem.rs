use skein_core::bbm::{verify_main_theorem, SpanOutcome, TheoremConfig};
use skein_core::skein::Bounds;
use skein_core::Sign;

use crate::Outcome;

pub fn main_theorem() -> Outcome {
    let mut out = Outcome::new();
    let bounds = Bounds {
        max_index: 2,
        exp_bound: 3,
        positive_only: true,
    };
    for level in [2, 3] {
        for p in [1, 2] {
            let cfg = TheoremConfig {
                level,
                bounds,
                p,
                signs: vec![Sign::Plus, Sign::Minus],
                seed: 5,
            };
            let report = verify_main_theorem(&cfg, None).expect("systems build");
            let main_bad: Vec<String> = report
                .targets
                .iter()
                .filter(|t| !t.outcome.ok())
                .map(|t| t.target.label())
                .collect();
            out.check(
                main_bad.is_empty(),
                format!(
                    "level {level}, p = {p}: {} targets in the span of first-strand equations of lower or equal order; failing {main_bad:?}",
                    report.targets.len()
                ),
            );
            let strict: Vec<_> = report
                .targets
                .iter()
                .filter_map(|t| t.strict.as_ref().map(|s| (t, s)))
                .collect();
            let strict_bad: Vec<String> = strict
                .iter()
                .filter(|(_, s)| !s.ok())
                .map(|(t, s)| {
                    let why = match s {
                        SpanOutcome::NotInSpan { .. } => "not in span",
                        SpanOutcome::InSpan { .. } => "numeric cross-check failed",
                    };
                    format!(
                        "{} with {} strictly lower generators: {why}",
                        t.target.label(),
                        t.strict_generators.len()
                    )
                })
                .collect();
            out.check(
                strict_bad.is_empty(),
                format!(
                    "level {level}, p = {p}: strictly lower generators span {} of {} targets with m >= 2",
                    strict.len() - strict_bad.len(),
                    strict.len()
                ),
            );
            for line in strict_bad {
                out.note(line);
            }
        }
    }
    out
}
