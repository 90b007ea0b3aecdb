//! `skein`: command-line front end for the skein engine.
//!
//! Exit codes: 0 success, 1 parse error, 2 validation error, 3 a check ran
//! and failed.

use std::cmp::Ordering;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use skein_core::bbm::{generate_system, verify_main_theorem, StrandPolicy, SystemConfig, TheoremConfig};
use skein_core::braid::{parse_word, MixedBraidWord};
use skein_core::hecke::{normal_form, verify_identity, Identity};
use skein_core::invariant::x_invariant;
use skein_core::skein::{
    convert_to_lambda_prime, decompose_to_lower, enumerate_level, Bounds, Convention, SetKind, SkeinMonomial,
};
use skein_core::trace::trace_word;
use skein_core::{Sign, SkeinError, Variant};

#[derive(Parser)]
#[command(
    name = "skein",
    version,
    about = "Exact computations with mixed braids, the Markov trace and band move equations"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of a braid word in H_{1,n}(q).
    Nf {
        word: String,
        #[command(flatten)]
        strands: Strands,
        /// Basis of the result: `t` (loops t_i) or `prime` (loops t'_i).
        #[arg(long, value_enum, default_value_t = Basis::T)]
        basis: Basis,
    },
    /// Markov trace of a braid word.
    Trace {
        word: String,
        #[command(flatten)]
        strands: Strands,
    },
    /// The invariant X of the closure of a braid word.
    X {
        word: String,
        #[command(flatten)]
        strands: Strands,
    },
    /// Braid band move on a moving strand.
    Bbm {
        word: String,
        #[command(flatten)]
        strands: Strands,
        /// Moving strand receiving the band (1-based); without --n the word is widened as needed.
        #[arg(long, default_value_t = 1)]
        strand: usize,
        #[arg(long, value_enum, default_value_t = SignArg::Plus)]
        sign: SignArg,
        /// Power of the new loop.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        p: i64,
    },
    /// Compare two loop monomials in the total order.
    Order { left: String, right: String },
    /// List the monomials of a set at one level.
    Enum {
        #[command(flatten)]
        window: Window,
    },
    /// Express tr of a t_i monomial through tr of t'_i monomials.
    Convert {
        monomial: String,
        #[arg(long, value_enum, default_value_t = ConventionArg::Increasing)]
        convention: ConventionArg,
    },
    /// Rewrite tr of a monomial through lower-order monomials.
    Decompose { monomial: String },
    /// Band move equation system for a set and level.
    System {
        #[command(flatten)]
        window: Window,
        /// Band on the first moving strand only, or on every moving strand.
        #[arg(long, value_enum, default_value_t = StrandArg::First)]
        strand: StrandArg,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        p: i64,
        /// Band signs to include.
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [SignArg::Plus, SignArg::Minus])]
        signs: Vec<SignArg>,
        /// Worker threads for equation generation.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check that all-strand equations of a level follow from first-strand ones.
    VerifyTheorem {
        #[arg(long, allow_negative_numbers = true)]
        level: i64,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [SignArg::Plus, SignArg::Minus])]
        signs: Vec<SignArg>,
        /// Seed for the numeric cross-check.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        /// Also fail when a strictly-lower span check fails.
        #[arg(long)]
        require_strict: bool,
    },
    /// Check one instance of a commutation identity.
    CheckIdentity {
        /// One of eq5, lemma2i, lemma2ii, lemma2ii-printed.
        identity: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
}

#[derive(Args)]
struct Strands {
    /// Number of moving strands; inferred from the word when omitted.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct BoundArgs {
    /// Largest index m of t_m.
    #[arg(long, default_value_t = 2)]
    max_index: usize,
    /// Largest |k_i|.
    #[arg(long, default_value_t = 3)]
    exp_bound: i64,
    /// Only positive exponents.
    #[arg(long)]
    positive: bool,
}

#[derive(Args)]
struct Window {
    #[arg(long, value_enum, default_value_t = SetArg::Lambda)]
    set: SetArg,
    #[arg(long, allow_negative_numbers = true)]
    level: i64,
    #[command(flatten)]
    bounds: BoundArgs,
    #[arg(long, value_enum, default_value_t = ConventionArg::Increasing)]
    convention: ConventionArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    T,
    Prime,
}

#[derive(Clone, Copy, ValueEnum)]
enum SignArg {
    #[value(name = "+", alias = "plus")]
    Plus,
    #[value(name = "-", alias = "minus")]
    Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetArg {
    Lambda,
    LambdaPrime,
    LambdaAug,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Increasing,
    Decreasing,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrandArg {
    First,
    All,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Increasing => Convention::Increasing,
            ConventionArg::Decreasing => Convention::Decreasing,
        }
    }
}

impl From<SetArg> for SetKind {
    fn from(s: SetArg) -> SetKind {
        match s {
            SetArg::Lambda => SetKind::Lambda,
            SetArg::LambdaPrime => SetKind::LambdaPrime,
            SetArg::LambdaAug => SetKind::LambdaAug,
        }
    }
}

impl BoundArgs {
    fn bounds(&self) -> Result<Bounds, Failure> {
        if self.exp_bound < 1 {
            return Err(Failure::Validation("--exp-bound must be at least 1".into()));
        }
        Ok(Bounds {
            max_index: self.max_index,
            exp_bound: self.exp_bound,
            positive_only: self.positive,
        })
    }
}

enum Failure {
    Parse(String),
    Validation(String),
    /// The command ran and its check failed; the output is still printed.
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 1,
            Failure::Validation(_) => 2,
            Failure::Check(_) => 3,
        }
    }
}

impl From<SkeinError> for Failure {
    fn from(e: SkeinError) -> Self {
        match e {
            SkeinError::Parse { .. } => Failure::Parse(e.to_string()),
            _ => Failure::Validation(e.to_string()),
        }
    }
}

const MAX_INFERRED_STRANDS: usize = 16;

fn word(text: &str, strands: &Strands) -> Result<MixedBraidWord, Failure> {
    if let Some(n) = strands.n {
        return Ok(parse_word(text, n)?);
    }
    for n in 1..=MAX_INFERRED_STRANDS {
        match parse_word(text, n) {
            Ok(w) => return Ok(w),
            Err(SkeinError::IndexOutOfRange { index, strands }) if index >= strands => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(Failure::Validation(format!(
        "word needs more than {MAX_INFERRED_STRANDS} strands"
    )))
}

fn monomial(text: &str) -> Result<SkeinMonomial, Failure> {
    text.parse::<SkeinMonomial>().map_err(Failure::from)
}

struct Output {
    text: String,
    json: Value,
}

fn strings<K: ToString, V: ToString>(pairs: impl IntoIterator<Item = (K, V)>) -> Value {
    Value::Object(
        pairs
            .into_iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect::<Map<_, _>>(),
    )
}

fn run(cli: &Cli) -> Result<Output, (Failure, Option<Output>)> {
    let plain = |r: Result<Output, Failure>| r.map_err(|f| (f, None));
    match &cli.command {
        Command::Nf {
            word: w,
            strands,
            basis,
        } => plain((|| {
            let variant = match basis {
                Basis::T => Variant::T,
                Basis::Prime => Variant::TPrime,
            };
            let e = normal_form(&word(w, strands)?, variant);
            let terms = strings(e.terms().iter().map(|(b, c)| (b.label(variant), c)));
            Ok(Output {
                text: e.to_string(),
                json: json!({"word": w, "strands": e.strands(), "normal_form": e.to_string(), "terms": terms}),
            })
        })()),
        Command::Trace { word: w, strands } => plain((|| {
            let t = trace_word(&word(w, strands)?);
            Ok(Output {
                text: t.to_string(),
                json: json!({"word": w, "trace": t.to_string(), "terms": strings(t.terms())}),
            })
        })()),
        Command::X { word: w, strands } => plain((|| {
            let x = x_invariant(&word(w, strands)?);
            Ok(Output {
                text: x.to_string(),
                json: json!({"word": w, "scalar": x.scalar.to_string(), "trace": x.trace.to_string()}),
            })
        })()),
        Command::Bbm {
            word: w,
            strands,
            strand,
            sign,
            p,
        } => plain((|| {
            let base = word(w, strands)?;
            if strands.n.is_some_and(|n| *strand > n) {
                return Err(Failure::Validation(format!(
                    "strand {strand} exceeds --n {}",
                    base.strands()
                )));
            }
            let moved = base.bbm(*strand, (*sign).into(), *p)?;
            Ok(Output {
                text: moved.to_string(),
                json: json!({"word": w, "strand": strand, "result": moved.to_string(), "strands": moved.strands()}),
            })
        })()),
        Command::Order { left, right } => plain((|| {
            let (a, b) = (monomial(left)?, monomial(right)?);
            let symbol = match a.compare(&b) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            Ok(Output {
                text: format!("{a} {symbol} {b}"),
                json: json!({"left": a.to_string(), "right": b.to_string(), "order": symbol}),
            })
        })()),
        Command::Enum { window } => plain((|| {
            let list = enumerate_level(
                window.set.into(),
                window.level,
                window.bounds.bounds()?,
                window.convention.into(),
            );
            let names: Vec<String> = list.iter().map(ToString::to_string).collect();
            Ok(Output {
                text: names.join("\n"),
                json: json!({"level": window.level, "monomials": names}),
            })
        })()),
        Command::Convert {
            monomial: m,
            convention,
        } => plain((|| {
            let m = monomial(m)?;
            if m.variant() != Variant::T {
                return Err(Failure::Validation("convert takes a t_i monomial".into()));
            }
            let c = convert_to_lambda_prime(&m, (*convention).into());
            let rhs: Vec<String> = c.iter().map(|(k, v)| format!("({v})*tr({k})")).collect();
            Ok(Output {
                text: format!("tr({m}) = {}", rhs.join(" + ")),
                json: json!({"monomial": m.to_string(), "coefficients": strings(&c)}),
            })
        })()),
        Command::Decompose { monomial: m } => {
            let source = monomial(m).map_err(|f| (f, None))?;
            let d = decompose_to_lower(&source).map_err(|e| (e.into(), None))?;
            let violations: Vec<String> = d.violations().iter().map(|v| v.to_string()).collect();
            let mut text = d.to_string();
            if !violations.is_empty() {
                text.push_str(&format!("\nnot strictly lower: {}", violations.join(", ")));
            }
            let out = Output {
                text,
                json: json!({
                    "monomial": d.source.to_string(),
                    "terms": strings(d.terms.iter()),
                    "all_lower": violations.is_empty(),
                    "not_lower": violations,
                }),
            };
            if d.all_lower() {
                Ok(out)
            } else {
                Err((
                    Failure::Check("decomposition keeps terms that are not strictly lower".into()),
                    Some(out),
                ))
            }
        }
        Command::System {
            window,
            strand,
            p,
            signs,
            jobs,
        } => plain((|| {
            let cfg = SystemConfig {
                set: window.set.into(),
                level: window.level,
                bounds: window.bounds.bounds()?,
                p: *p,
                signs: signs.iter().map(|&s| s.into()).collect(),
                strands: match strand {
                    StrandArg::First => StrandPolicy::FirstOnly,
                    StrandArg::All => StrandPolicy::AllStrands,
                },
                convention: window.convention.into(),
            };
            let system = generate_system(&cfg, *jobs)?;
            let mut text = format!("{} equations in {} unknowns", system.rows.len(), system.unknowns.len());
            for row in &system.rows {
                let terms: Vec<String> = row.form.iter().map(|(k, v)| format!("({v})*{k}")).collect();
                text.push_str(&format!("\n{}: {} = 0", row.label(), terms.join(" + ")));
            }
            Ok(Output {
                text,
                json: system.to_json(),
            })
        })()),
        Command::VerifyTheorem {
            level,
            bounds,
            p,
            signs,
            seed,
            jobs,
            require_strict,
        } => {
            let cfg = TheoremConfig {
                level: *level,
                bounds: bounds.bounds().map_err(|f| (f, None))?,
                p: *p,
                signs: signs.iter().map(|&s| s.into()).collect(),
                seed: *seed,
            };
            let report = verify_main_theorem(&cfg, *jobs).map_err(|e| (e.into(), None))?;
            let mut text = String::new();
            for t in &report.targets {
                let status = |ok: bool| if ok { "in span" } else { "NOT in span" };
                text.push_str(&format!("{}: {}", t.target.label(), status(t.outcome.ok())));
                if let Some(s) = &t.strict {
                    text.push_str(&format!("; strictly lower: {}", status(s.ok())));
                }
                text.push('\n');
            }
            text.push_str(&format!(
                "lower-or-equal span: {}; strictly-lower span for m >= 2: {}",
                if report.main_ok() { "ok" } else { "FAILED" },
                if report.strict_ok() { "ok" } else { "FAILED" }
            ));
            let out = Output {
                text,
                json: report.to_json(),
            };
            if !report.main_ok() {
                Err((
                    Failure::Check("an equation is outside the first-strand span".into()),
                    Some(out),
                ))
            } else if *require_strict && !report.strict_ok() {
                Err((
                    Failure::Check("an equation needs generators of equal order".into()),
                    Some(out),
                ))
            } else {
                Ok(out)
            }
        }
        Command::CheckIdentity { identity, n, k } => {
            let id = Identity::from_name(identity)
                .ok_or_else(|| (Failure::Parse(format!("unknown identity '{identity}'")), None))?;
            let check = verify_identity(id, *n, *k).map_err(|e| (e.into(), None))?;
            let out = Output {
                text: if check.holds() {
                    format!("{} holds for n = {n}, k = {k}", id.name())
                } else {
                    format!(
                        "{} fails for n = {n}, k = {k}; lhs - rhs = {}",
                        id.name(),
                        check.difference
                    )
                },
                json: json!({
                    "identity": id.name(),
                    "n": n,
                    "k": k,
                    "holds": check.holds(),
                    "difference": check.difference.to_string(),
                }),
            };
            if check.holds() {
                Ok(out)
            } else {
                Err((Failure::Check("identity does not hold".into()), Some(out)))
            }
        }
    }
}

fn emit(out: &Output, format: Format) {
    let body = match format {
        Format::Text => out.text.clone(),
        Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
    };
    let _ = writeln!(std::io::stdout().lock(), "{body}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            emit(&out, cli.format);
            ExitCode::SUCCESS
        }
        Err((failure, out)) => {
            if let Some(out) = out {
                emit(&out, cli.format);
            }
            let (Failure::Parse(msg) | Failure::Validation(msg) | Failure::Check(msg)) = &failure;
            eprintln!("error: {msg}");
            ExitCode::from(failure.code())
        }
    }
}
