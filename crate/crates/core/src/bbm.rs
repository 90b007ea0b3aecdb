//! Braid band move equations `X(T) = X(bbm_m(T))` as linear forms in the
//! trace unknowns, and span checks between them.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeff::{rat, Rat, RationalFn, SqrtLambdaScalar};
use crate::error::{Result, SkeinError};
use crate::invariant::normalizing_scalar;
use crate::linalg::{span_solve, SpanResult};
use crate::skein::{enumerate_level, Bounds, Convention, SetKind, SkeinMonomial};
use crate::trace::{trace_word, SMonomial, TraceValue};
use crate::{Sign, Variant};

/// A linear form over `Q(q, z)` in the unknowns `SMonomial`.
pub type Form = BTreeMap<SMonomial, RationalFn>;

/// `tr(T) - C · tr(bbm_m(T)) = 0`, stored as the form on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub monomial: SkeinMonomial,
    pub strand: usize,
    pub sign: Sign,
    pub p: i64,
    pub form: Form,
}

impl Equation {
    pub fn label(&self) -> String {
        format!("{} [m={}, {}]", self.monomial, self.strand, self.sign.symbol())
    }

    pub fn to_json(&self) -> Value {
        let coeffs: serde_json::Map<String, Value> = self
            .form
            .iter()
            .map(|(s, c)| (s.to_string(), Value::String(c.to_string())))
            .collect();
        json!({
            "monomial": self.monomial.to_string(),
            "strand": self.strand,
            "sign": self.sign.symbol().to_string(),
            "p": self.p,
            "coeffs": coeffs,
        })
    }
}

/// `λ^{k + (ε-1)/2} / z`
pub fn band_scalar(level: i64, sign: Sign) -> RationalFn {
    let e = level + (sign.value() - 1) / 2;
    let z = RationalFn::from_poly(crate::coeff::LaurentPoly::z());
    &RationalFn::lambda().pow(e).expect("λ is invertible") * &z.inverse().expect("z is nonzero")
}

fn to_form(t: &TraceValue) -> Form {
    t.terms()
        .iter()
        .map(|(k, v)| (k.clone(), RationalFn::from_poly(v.clone())))
        .collect()
}

fn add_form(acc: &mut Form, f: &Form, c: &RationalFn) {
    for (k, v) in f {
        let next = acc.get(k).cloned().unwrap_or_default() + v * c;
        if next.is_zero() {
            acc.remove(k);
        } else {
            acc.insert(k.clone(), next);
        }
    }
}

/// The equation for a band move on the `m`-th moving strand of `T`.
pub fn equation_for(t: &SkeinMonomial, m: usize, sign: Sign, p: i64) -> Result<Equation> {
    if t.variant() != Variant::T {
        return Err(SkeinError::Invalid("band moves act on t_i monomials".into()));
    }
    if m == 0 {
        return Err(SkeinError::IndexOutOfRange {
            index: m,
            strands: t.strands(),
        });
    }
    let base = t.to_braid_word();
    let base = base.embed(base.strands().max(m));
    let moved = base.bbm(m, sign, p)?;
    let before = normalizing_scalar(base.strands(), base.sigma_exponent_sum());
    let after = normalizing_scalar(moved.strands(), moved.sigma_exponent_sum());
    let c: SqrtLambdaScalar = &after * &before.inverse()?;
    let c = c.as_rational().cloned().ok_or(SkeinError::Parity)?;
    if c != band_scalar(t.level(), sign) {
        return Err(SkeinError::Invalid(format!(
            "scalar {c} disagrees with the level formula"
        )));
    }
    let mut form = to_form(&trace_word(&base));
    add_form(&mut form, &to_form(&trace_word(&moved)), &-c);
    Ok(Equation {
        monomial: t.clone(),
        strand: m,
        sign,
        p,
        form,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrandPolicy {
    FirstOnly,
    AllStrands,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemConfig {
    pub set: SetKind,
    pub level: i64,
    pub bounds: Bounds,
    pub p: i64,
    pub signs: Vec<Sign>,
    pub strands: StrandPolicy,
    pub convention: Convention,
}

#[derive(Clone, Debug)]
pub struct EquationSystem {
    pub config: SystemConfig,
    pub unknowns: Vec<SMonomial>,
    pub rows: Vec<Equation>,
}

impl EquationSystem {
    pub fn to_json(&self) -> Value {
        json!({
            "level": self.config.level,
            "p": self.config.p,
            "unknowns": self.unknowns.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rows": self.rows.iter().map(Equation::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Runs `f` on a pool of `jobs` threads, or on the global pool.
pub fn with_jobs<T: Send, F: FnOnce() -> T + Send>(jobs: Option<usize>, f: F) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn compute_rows(tasks: &[(SkeinMonomial, usize, Sign)], p: i64) -> Result<Vec<Equation>> {
    tasks.par_iter().map(|(t, m, s)| equation_for(t, *m, *s, p)).collect()
}

pub fn generate_system(config: &SystemConfig, jobs: Option<usize>) -> Result<EquationSystem> {
    let monomials = enumerate_level(config.set, config.level, config.bounds, config.convention);
    let mut tasks = Vec::new();
    for t in &monomials {
        let top = match config.strands {
            StrandPolicy::FirstOnly => 1,
            StrandPolicy::AllStrands => t.index() + 1,
        };
        for m in 1..=top {
            for &s in &config.signs {
                tasks.push((t.clone(), m, s));
            }
        }
    }
    let rows = with_jobs(jobs, || compute_rows(&tasks, config.p))?;
    let unknowns: BTreeSet<SMonomial> = rows.iter().flat_map(|r| r.form.keys().cloned()).collect();
    Ok(EquationSystem {
        config: config.clone(),
        unknowns: unknowns.into_iter().collect(),
        rows,
    })
}

/// Coefficients `c_i` with `target = Σ c_i · generators_i`, or the residual.
pub fn span_membership(target: &Equation, generators: &[Equation]) -> SpanResult<SMonomial> {
    let cols: Vec<Form> = generators.iter().map(|g| g.form.clone()).collect();
    span_solve(&cols, &target.form)
}

fn random_point(rng: &mut ChaCha8Rng) -> (Rat, Rat) {
    let mut pick = || {
        let num: i64 = rng.gen_range(2..=97);
        let den: i64 = rng.gen_range(1..=13);
        Rat::new(num.into(), den.into())
    };
    (pick(), pick())
}

/// Re-checks `target = Σ c_i g_i` coordinatewise at random rational points.
pub fn numeric_cross_check(
    target: &Equation,
    generators: &[Equation],
    coeffs: &[RationalFn],
    points: usize,
    rng: &mut ChaCha8Rng,
) -> bool {
    let keys: BTreeSet<&SMonomial> = generators
        .iter()
        .flat_map(|g| g.form.keys())
        .chain(target.form.keys())
        .collect();
    let mut done = 0;
    let mut attempts = 0;
    while done < points {
        attempts += 1;
        if attempts > 100 * points {
            return false;
        }
        let (q, z) = random_point(rng);
        let eval = |r: &RationalFn| r.evaluate(&q, &z);
        let check = || -> Result<bool> {
            for k in &keys {
                let lhs = target.form.get(*k).map_or(Ok(rat(0)), eval)?;
                let mut rhs = rat(0);
                for (g, c) in generators.iter().zip(coeffs) {
                    if let Some(v) = g.form.get(*k) {
                        rhs += eval(c)? * eval(v)?;
                    }
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        match check() {
            Ok(true) => done += 1,
            Ok(false) => return false,
            Err(_) => continue,
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremConfig {
    pub level: i64,
    pub bounds: Bounds,
    pub p: i64,
    pub signs: Vec<Sign>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanOutcome {
    /// Witness coefficients, one per generator.
    InSpan {
        coefficients: Vec<RationalFn>,
        numeric_ok: bool,
    },
    NotInSpan {
        residual: Form,
    },
}

impl SpanOutcome {
    pub fn ok(&self) -> bool {
        matches!(self, SpanOutcome::InSpan { numeric_ok: true, .. })
    }

    fn to_json(&self, generators: &[Equation]) -> Value {
        match self {
            SpanOutcome::InSpan {
                coefficients,
                numeric_ok,
            } => {
                let w: serde_json::Map<String, Value> = generators
                    .iter()
                    .zip(coefficients)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(g, c)| (g.label(), Value::String(c.to_string())))
                    .collect();
                json!({"status": "in-span", "numeric_check": numeric_ok, "witness": w})
            }
            SpanOutcome::NotInSpan { residual } => {
                let r: serde_json::Map<String, Value> = residual
                    .iter()
                    .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
                    .collect();
                json!({"status": "not-in-span", "residual": r})
            }
        }
    }
}

/// Result for one target equation.
#[derive(Clone, Debug)]
pub struct TargetReport {
    pub target: Equation,
    /// Generators from monomials of lower or equal order.
    pub generators: Vec<Equation>,
    pub outcome: SpanOutcome,
    /// For `m ≥ 2`: generators from strictly lower monomials only.
    pub strict_generators: Vec<Equation>,
    pub strict: Option<SpanOutcome>,
}

impl TargetReport {
    pub fn ok(&self) -> bool {
        self.outcome.ok() && self.strict.as_ref().is_none_or(SpanOutcome::ok)
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub config: TheoremConfig,
    pub targets: Vec<TargetReport>,
    pub elapsed: Duration,
}

impl TheoremReport {
    pub fn ok(&self) -> bool {
        self.targets.iter().all(TargetReport::ok)
    }

    /// Every target lies in the span of generators of lower or equal order.
    pub fn main_ok(&self) -> bool {
        self.targets.iter().all(|t| t.outcome.ok())
    }

    /// Every `m ≥ 2` target lies in the span of strictly lower generators.
    pub fn strict_ok(&self) -> bool {
        self.targets
            .iter()
            .all(|t| t.strict.as_ref().is_none_or(SpanOutcome::ok))
    }

    pub fn failures(&self) -> Vec<&TargetReport> {
        self.targets.iter().filter(|t| !t.ok()).collect()
    }

    pub fn to_json(&self) -> Value {
        let targets: Vec<Value> = self
            .targets
            .iter()
            .map(|t| {
                json!({
                    "monomial": t.target.monomial.to_string(),
                    "strand": t.target.strand,
                    "sign": t.target.sign.symbol().to_string(),
                    "ok": t.ok(),
                    "span": t.outcome.to_json(&t.generators),
                    "strict_span": t.strict.as_ref().map(|s| s.to_json(&t.strict_generators)),
                })
            })
            .collect();
        json!({
            "level": self.config.level,
            "p": self.config.p,
            "ok": self.ok(),
            "main_ok": self.main_ok(),
            "strict_ok": self.strict_ok(),
            "targets": targets,
        })
    }
}

fn solve(target: &Equation, generators: &[Equation], rng: &mut ChaCha8Rng) -> SpanOutcome {
    match span_membership(target, generators) {
        SpanResult::InSpan(coefficients) => {
            let numeric_ok = numeric_cross_check(target, generators, &coefficients, 3, rng);
            SpanOutcome::InSpan {
                coefficients,
                numeric_ok,
            }
        }
        SpanResult::NotInSpan { residual } => SpanOutcome::NotInSpan { residual },
    }
}

/// Checks every `Λ` band move equation against first-strand `Λ^aug` equations
/// of lower or equal order, and against strictly lower ones when `m ≥ 2`.
pub fn verify_main_theorem(config: &TheoremConfig, jobs: Option<usize>) -> Result<TheoremReport> {
    let start = Instant::now();
    let system = |set, strands| SystemConfig {
        set,
        level: config.level,
        bounds: config.bounds,
        p: config.p,
        signs: config.signs.clone(),
        strands,
        convention: Convention::Increasing,
    };
    let targets = generate_system(&system(SetKind::Lambda, StrandPolicy::AllStrands), jobs)?;
    let gens = generate_system(&system(SetKind::LambdaAug, StrandPolicy::FirstOnly), jobs)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut reports = Vec::new();
    for target in targets.rows {
        let pick = |keep: &dyn Fn(Ordering) -> bool| -> Vec<Equation> {
            gens.rows
                .iter()
                .filter(|g| keep(g.monomial.compare(&target.monomial)))
                .cloned()
                .collect()
        };
        let generators = pick(&|o| o != Ordering::Greater);
        let outcome = solve(&target, &generators, &mut rng);
        let (strict_generators, strict) = if target.strand >= 2 {
            let g = pick(&|o| o == Ordering::Less);
            let s = solve(&target, &g, &mut rng);
            (g, Some(s))
        } else {
            (Vec::new(), None)
        };
        reports.push(TargetReport {
            target,
            generators,
            outcome,
            strict_generators,
            strict,
        });
    }
    Ok(TheoremReport {
        config: config.clone(),
        targets: reports,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_rational;

    fn mono(s: &str) -> SkeinMonomial {
        s.parse().unwrap()
    }

    const POS: Bounds = Bounds {
        max_index: 2,
        exp_bound: 3,
        positive_only: true,
    };

    fn config(set: SetKind, strands: StrandPolicy) -> SystemConfig {
        SystemConfig {
            set,
            level: 3,
            bounds: POS,
            p: 1,
            signs: vec![Sign::Plus, Sign::Minus],
            strands,
            convention: Convention::Increasing,
        }
    }

    #[test]
    fn scalar_formula() {
        let l3 = parse_rational("lambda^3/z").unwrap();
        assert_eq!(band_scalar(3, Sign::Plus), l3);
        assert_eq!(band_scalar(3, Sign::Minus), parse_rational("lambda^2/z").unwrap());
    }

    #[test]
    fn single_equations() {
        let e = equation_for(&mono("t"), 1, Sign::Plus, 0).unwrap();
        assert!(e.form.contains_key(&SMonomial::new([1])));
        let e = equation_for(&mono("t^3"), 1, Sign::Plus, 1).unwrap();
        let again = equation_for(&mono("t^3"), 1, Sign::Plus, 1).unwrap();
        assert_eq!(e, again);
        assert!(equation_for(&mono("t"), 0, Sign::Plus, 1).is_err());
    }

    #[test]
    fn equation_counts() {
        let all = generate_system(&config(SetKind::Lambda, StrandPolicy::AllStrands), Some(2)).unwrap();
        assert_eq!(all.rows.len(), 12);
        let first = generate_system(&config(SetKind::LambdaAug, StrandPolicy::FirstOnly), None).unwrap();
        assert_eq!(first.rows.len(), 8);
        for r in &all.rows {
            assert!(r.form.keys().all(|k| all.unknowns.contains(k)));
        }
        let json = first.to_json();
        assert_eq!(json["rows"].as_array().unwrap().len(), 8);
    }

    #[test]
    fn example_span() {
        let target = equation_for(&mono("t t1^2"), 2, Sign::Plus, 1).unwrap();
        let gens = vec![
            equation_for(&mono("t^3"), 1, Sign::Plus, 1).unwrap(),
            equation_for(&mono("t^2 t1"), 1, Sign::Plus, 1).unwrap(),
        ];
        let SpanResult::InSpan(c) = span_membership(&target, &gens) else {
            panic!("not in span");
        };
        assert_eq!(c[0], parse_rational("q*(q-1)*z").unwrap());
        assert_eq!(c[1], parse_rational("q^2-q+1").unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(numeric_cross_check(&target, &gens, &c, 3, &mut rng));
        let mut bad = c.clone();
        bad[1] = &bad[1] + &RationalFn::one();
        assert!(!numeric_cross_check(&target, &gens, &bad, 3, &mut rng));
        let mut corrupted = target.clone();
        let key = corrupted.form.keys().next().unwrap().clone();
        let v = &corrupted.form[&key] + &RationalFn::one();
        corrupted.form.insert(key, v);
        assert!(matches!(
            span_membership(&corrupted, &gens),
            SpanResult::NotInSpan { .. }
        ));
    }
}
