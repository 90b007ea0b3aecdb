//! The ten acceptance criteria of the engine.
//!
//! Each criterion is a function returning an [`Outcome`]: a verdict plus a
//! few human-readable lines explaining what was checked. The `acceptance`
//! test target runs them all and prints one PASS/FAIL line per criterion.

mod algebra;
mod bases;
mod example;
mod theorem;
mod traces;

use std::time::{Duration, Instant};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub passed: bool,
    pub details: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            passed: true,
            details: Vec::new(),
        }
    }

    /// Records a check; any failed check fails the criterion.
    fn check(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        self.details
            .push(format!("[{}] {line}", if ok { "ok" } else { "FAILED" }));
        self.passed &= ok;
    }

    /// Records context that does not affect the verdict.
    fn note(&mut self, line: impl Into<String>) {
        self.details.push(format!("[info] {}", line.into()));
    }
}

pub struct Criterion {
    pub number: usize,
    pub title: &'static str,
    pub budget: Option<Duration>,
    run: fn() -> Outcome,
}

impl Criterion {
    /// Runs the check and enforces the time budget, if any.
    pub fn run(&self) -> (Outcome, Duration) {
        let start = Instant::now();
        let mut out = (self.run)();
        let elapsed = start.elapsed();
        if let Some(b) = self.budget {
            out.check(elapsed <= b, format!("finished in {elapsed:.1?} (budget {b:?})"));
        }
        (out, elapsed)
    }
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

pub const CRITERIA: [Criterion; 10] = [
    Criterion {
        number: 1,
        title: "algebra soundness",
        budget: secs(60),
        run: algebra::soundness,
    },
    Criterion {
        number: 2,
        title: "identity oracles",
        budget: secs(60),
        run: algebra::identities,
    },
    Criterion {
        number: 3,
        title: "trace rules",
        budget: secs(300),
        run: traces::rules,
    },
    Criterion {
        number: 4,
        title: "trace on the t' basis",
        budget: None,
        run: traces::prime_monomials,
    },
    Criterion {
        number: 5,
        title: "worked example",
        budget: secs(30),
        run: example::worked_example,
    },
    Criterion {
        number: 6,
        title: "invariant X",
        budget: None,
        run: traces::invariant_x,
    },
    Criterion {
        number: 7,
        title: "ordering and counts",
        budget: None,
        run: bases::ordering_and_counts,
    },
    Criterion {
        number: 8,
        title: "lower-order decomposition",
        budget: secs(300),
        run: bases::decomposition,
    },
    Criterion {
        number: 9,
        title: "first-strand theorem",
        budget: secs(600),
        run: theorem::main_theorem,
    },
    Criterion {
        number: 10,
        title: "basis conversion",
        budget: None,
        run: bases::conversion,
    },
];
