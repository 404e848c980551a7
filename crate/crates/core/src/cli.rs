//! The `lbsum` command line.
//!
//! Exit codes: 0 success, 2 input or validation error, 3 verification
//! counterexample (or unequal values from `eval --method both`), 4 internal
//! invariant breach.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::closedform::{general_tuple, ClosedForm, ClosedFormError, ClosedFormRecord, ShiftParams};
use crate::exactmath::{parse_rational_list, Rational};
use crate::numeric::{self, SpectralData, DEFAULT_PRECISION};
use crate::presets::{self, PRESETS};
use crate::problem::{parse_weight, Problem, ProblemError, ProblemSpec};
use crate::recurrence::Recurrence;
use crate::render;
use crate::verify::{kernel_bound, naive_sum, uniqueness_probe, verify_identity, PerturbationTuple, VerificationStatus, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Tolerances for `verify --crosscheck`.
const CROSSCHECK_SYMMETRICS_TOL: f64 = 1e-9;
const CROSSCHECK_TERM_REL_TOL: f64 = 1e-9;
const CROSSCHECK_DET_REL_TOL: f64 = 1e-8;
const CROSSCHECK_TERM_WINDOW: i64 = 60;

#[derive(Parser, Debug)]
#[command(name = "lbsum", version, about = "Closed forms for polynomial-weighted sums over linear recurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derive the closed-form tuple.
    Derive {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_enum, default_value_t = DeriveFormat::Text)]
        format: DeriveFormat,
    },
    /// Derive (or load) a closed form and certify it against the naive sum.
    Verify {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Verify a closed form from `derive --format json` (`-` for stdin)
        /// instead of deriving one.
        #[arg(long, value_name = "FILE")]
        closed_form: Option<String>,
        /// Extra values of n checked past the certification bound.
        #[arg(long, default_value_t = 0)]
        extra: u64,
        /// Also compare against the numeric spectral backend.
        #[arg(long)]
        crosscheck: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Evaluate the sum at one n by the closed form, the naive loop, or both.
    Eval {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Print values in full instead of abbreviating long ones.
        #[arg(long)]
        full: bool,
    },
    /// Perturb the tuple randomly and report where each perturbation fails.
    Probe {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 5)]
        coeff_bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List built-in recurrences.
    Presets,
}

#[derive(Args, Debug, Clone, Default)]
struct ProblemArgs {
    /// Built-in recurrence name (see `lbsum presets`).
    #[arg(long)]
    preset: Option<String>,
    /// JSON problem file; `--h`, `--r` and `--weight` override its fields.
    #[arg(long, value_name = "FILE")]
    spec: Option<String>,
    /// Recurrence coefficients a_1,...,a_m (a_1 multiplies the oldest term).
    #[arg(long, allow_hyphen_values = true)]
    coefficients: Option<String>,
    /// Initial terms s_1,...,s_m.
    #[arg(long, allow_hyphen_values = true)]
    initial: Option<String>,
    /// Weight polynomial as ascending coefficients, e.g. `0,1` for x.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    h: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DeriveFormat {
    Text,
    Latex,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Closed,
    Naive,
    Both,
}

/// A failure with its exit code; the message goes to stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<ProblemError> for Failure {
    fn from(e: ProblemError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<ClosedFormError> for Failure {
    fn from(e: ClosedFormError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::internal(format!("i/o error: {e}"))
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

fn read_source(io: &mut Io<'_>, path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io.stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::input(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::input(format!("reading {path}: {e}")))
    }
}

fn resolve_problem(args: &ProblemArgs, io: &mut Io<'_>) -> Result<Problem, Failure> {
    let weight = args
        .weight
        .as_deref()
        .map(|w| {
            parse_rational_list(w)
                .map(crate::exactmath::Polynomial::from_coeffs)
                .map_err(|e| Failure::input(format!("--weight: {e}")))
        })
        .transpose()?;

    if let Some(path) = &args.spec {
        if args.preset.is_some() || args.coefficients.is_some() || args.initial.is_some() {
            return Err(Failure::input("--spec cannot be combined with --preset/--coefficients/--initial"));
        }
        let spec = ProblemSpec::from_json(&read_source(io, path)?)?;
        let mut problem = spec.resolve()?;
        if let Some(h) = args.h {
            problem.shift.h = h;
        }
        if let Some(r) = args.r {
            problem.shift.r = r;
        }
        if let Some(w) = weight {
            problem.weight = w;
        }
        return Ok(problem);
    }

    let recurrence = match (&args.preset, &args.coefficients, &args.initial) {
        (Some(name), None, None) => presets::get(name).ok_or_else(|| ProblemError::UnknownPreset(name.clone()))?,
        (None, Some(a), Some(s)) => {
            let a = parse_rational_list(a).map_err(|e| Failure::input(format!("--coefficients: {e}")))?;
            let s = parse_rational_list(s).map_err(|e| Failure::input(format!("--initial: {e}")))?;
            Recurrence::validate(a.len(), a, s).map_err(ProblemError::from)?
        }
        (None, None, None) => {
            return Err(Failure::input(
                "no recurrence given: use --preset, --spec, or --coefficients with --initial",
            ))
        }
        _ => {
            return Err(Failure::input(
                "use exactly one of --preset or --coefficients with --initial",
            ))
        }
    };
    Ok(Problem {
        recurrence,
        shift: ShiftParams::new(args.h.unwrap_or(1), args.r.unwrap_or(0)),
        weight: match weight {
            Some(w) => w,
            None => parse_weight(&["1".to_string()])?,
        },
    })
}

fn derive(problem: &Problem) -> Result<ClosedForm, Failure> {
    Ok(general_tuple(&problem.recurrence, &problem.weight, problem.shift)?)
}

fn abbreviate(q: &Rational, full: bool) -> String {
    let s = q.to_string();
    if full || s.len() <= 60 {
        return s;
    }
    format!("{}...{} ({} characters)", &s[..25], &s[s.len() - 25..], s.len())
}

fn cmd_derive(problem: &ProblemArgs, format: DeriveFormat, io: &mut Io<'_>) -> Result<i32, Failure> {
    let cf = derive(&resolve_problem(problem, io)?)?;
    match format {
        DeriveFormat::Text => write!(io.out, "{}", render::to_text(&cf))?,
        DeriveFormat::Latex => writeln!(io.out, "{}", render::to_latex(&cf))?,
        DeriveFormat::Json => {
            let json = serde_json::to_string_pretty(&cf.to_record()).expect("serializable");
            writeln!(io.out, "{json}")?
        }
    }
    Ok(EXIT_OK)
}

fn crosscheck(cf: &ClosedForm) -> Result<Vec<String>, Failure> {
    let rec = cf.recurrence();
    let h = cf.shift().h;
    let numeric_err = |e: numeric::NumericError| Failure::internal(format!("numeric backend: {e}"));
    let sd = SpectralData::compute(rec, DEFAULT_PRECISION).map_err(numeric_err)?;
    let mut lines = Vec::new();
    let mut ok = true;

    let steps: &[i64] = if h == 1 { &[1] } else { &[1, h] };
    for &step in steps {
        let agree = numeric::crosscheck_symmetrics(rec, step, CROSSCHECK_SYMMETRICS_TOL).map_err(numeric_err)?;
        ok &= agree;
        lines.push(format!(
            "step symmetrics l = {step}: {}",
            if agree { "agree" } else { "DISAGREE" }
        ));
    }

    let worst = (-CROSSCHECK_TERM_WINDOW..=CROSSCHECK_TERM_WINDOW)
        .map(|k| numeric::relative_error(&sd.explicit_term(k), &rec.term(k)))
        .fold(0.0f64, f64::max);
    ok &= worst < CROSSCHECK_TERM_REL_TOL;
    lines.push(format!(
        "explicit formula, |k| <= {CROSSCHECK_TERM_WINDOW}: max relative error {worst:.3e}"
    ));

    let d = cf.weight().degree_or_zero();
    let diag = rec.step_symmetrics(h).diagonal_value();
    let exact_det = num_traits::pow::pow(diag, d + 1);
    let det_err = numeric::relative_error(&sd.delta_determinant(h, d), &exact_det);
    ok &= det_err < CROSSCHECK_DET_REL_TOL;
    lines.push(format!("delta-system determinant (d = {d}): relative error {det_err:.3e}"));

    if ok {
        Ok(lines)
    } else {
        Err(Failure::internal(format!(
            "numeric cross-check failed:\n{}",
            lines.join("\n")
        )))
    }
}

fn cmd_verify(
    problem: &ProblemArgs,
    closed_form: Option<&str>,
    extra: u64,
    with_crosscheck: bool,
    format: ReportFormat,
    io: &mut Io<'_>,
) -> Result<i32, Failure> {
    let cf = match closed_form {
        Some(path) => {
            let record: ClosedFormRecord = serde_json::from_str(&read_source(io, path)?)
                .map_err(|e| Failure::input(format!("closed form: {e}")))?;
            if record.schema != crate::closedform::SCHEMA_VERSION {
                return Err(Failure::input(format!("unsupported schema version {}", record.schema)));
            }
            ClosedForm::try_from(&record)?
        }
        None => derive(&resolve_problem(problem, io)?)?,
    };
    let report = verify_identity(&cf, extra);
    match format {
        ReportFormat::Json => {
            writeln!(io.out, "{}", serde_json::to_string(&report.to_record()).expect("serializable"))?;
        }
        ReportFormat::Text => match &report.status {
            VerificationStatus::Certified => {
                writeln!(io.out, "Certified (n = 1..{})", report.bound_used)?;
            }
            VerificationStatus::CounterExample { n, lhs, rhs } => {
                writeln!(
                    io.out,
                    "CounterExample at n = {n}: lhs = {lhs}, rhs = {rhs} (bound {})",
                    report.bound_used
                )?;
            }
        },
    }
    if !report.is_certified() {
        return Ok(EXIT_COUNTEREXAMPLE);
    }
    if with_crosscheck {
        for line in crosscheck(&cf)? {
            writeln!(io.out, "crosscheck: {line}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_eval(problem: &ProblemArgs, n: u64, method: Method, full: bool, io: &mut Io<'_>) -> Result<i32, Failure> {
    if n == 0 {
        return Err(Failure::input("--n must be at least 1"));
    }
    let problem = resolve_problem(problem, io)?;
    let mut closed = None;
    let mut naive = None;
    if matches!(method, Method::Closed | Method::Both) {
        let t0 = Instant::now();
        let cf = derive(&problem)?;
        let t1 = Instant::now();
        let v = cf.eval_rhs(n as i64);
        let t2 = Instant::now();
        writeln!(
            io.out,
            "closed: {} (derive {} us, evaluate {} us; O(log n) term computations)",
            abbreviate(&v, full),
            (t1 - t0).as_micros(),
            (t2 - t1).as_micros()
        )?;
        closed = Some(v);
    }
    if matches!(method, Method::Naive | Method::Both) {
        let t0 = Instant::now();
        let v = naive_sum(&problem.recurrence, &problem.weight, problem.shift, n);
        let us = t0.elapsed().as_micros();
        writeln!(io.out, "naive:  {} ({us} us; O(n) term computations)", abbreviate(&v, full))?;
        naive = Some(v);
    }
    if let (Some(c), Some(v)) = (closed, naive) {
        if c != v {
            writeln!(io.out, "MISMATCH between closed and naive values")?;
            return Ok(EXIT_COUNTEREXAMPLE);
        }
        writeln!(io.out, "equal: yes")?;
    }
    Ok(EXIT_OK)
}

fn cmd_probe(
    problem: &ProblemArgs,
    trials: usize,
    max_degree: usize,
    coeff_bound: i64,
    seed: u64,
    io: &mut Io<'_>,
) -> Result<i32, Failure> {
    let cf = derive(&resolve_problem(problem, io)?)?;
    let m = cf.recurrence().order();
    let bound = kernel_bound(m, max_degree.max(cf.tuple_degree()));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witnesses = vec![0usize; bound as usize + 1];
    for trial in 0..trials {
        let gamma = PerturbationTuple::random(&mut rng, m, max_degree, coeff_bound);
        match uniqueness_probe(&cf, &gamma) {
            Ok(n) => witnesses[n as usize] += 1,
            Err(e @ VerifyError::NoWitnessFound { .. }) => {
                let comps: Vec<String> = gamma.components().iter().map(ToString::to_string).collect();
                return Err(Failure::internal(format!(
                    "trial {trial}: {e}; perturbation ({})",
                    comps.join(", ")
                )));
            }
            Err(e) => return Err(Failure::internal(e.to_string())),
        }
    }
    let total: usize = witnesses.iter().sum();
    let max_n = witnesses.iter().rposition(|&c| c > 0).unwrap_or(0);
    let mean = witnesses
        .iter()
        .enumerate()
        .map(|(n, &c)| (n * c) as f64)
        .sum::<f64>()
        / total.max(1) as f64;
    let mut hist = String::new();
    for (n, &c) in witnesses.iter().enumerate().filter(|(_, &c)| c > 0) {
        let _ = write!(hist, " n={n}:{c}");
    }
    writeln!(
        io.out,
        "{trials} perturbations, all rejected; witness n: max {max_n}, mean {mean:.2}, bound {bound}"
    )?;
    writeln!(io.out, "histogram:{hist}")?;
    Ok(EXIT_OK)
}

fn cmd_presets(io: &mut Io<'_>) -> Result<i32, Failure> {
    for p in PRESETS {
        let status = match p.recurrence() {
            Ok(_) => "valid".to_string(),
            Err(e) => format!("INVALID: {e}"),
        };
        let join = |xs: &[i64]| xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        writeln!(
            io.out,
            "{:<11} m={}  a=({})  s=({})  {}  [{status}]",
            p.name,
            p.coefficients.len(),
            join(p.coefficients),
            join(p.initial),
            p.description
        )?;
    }
    Ok(EXIT_OK)
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let mut io = Io { stdin, out };
    let result = match &cli.command {
        Command::Derive { problem, format } => cmd_derive(problem, *format, &mut io),
        Command::Verify {
            problem,
            closed_form,
            extra,
            crosscheck,
            format,
        } => cmd_verify(problem, closed_form.as_deref(), *extra, *crosscheck, *format, &mut io),
        Command::Eval {
            problem,
            n,
            method,
            full,
        } => cmd_eval(problem, *n, *method, *full, &mut io),
        Command::Probe {
            problem,
            trials,
            max_degree,
            coeff_bound,
            seed,
        } => cmd_probe(problem, *trials, *max_degree, *coeff_bound, *seed, &mut io),
        Command::Presets => cmd_presets(&mut io),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_codes() {
        assert_eq!(Failure::input("x").code, EXIT_INPUT);
        assert_eq!(Failure::internal("x").code, EXIT_INTERNAL);
        let nf: Failure = ProblemError::UnknownPreset("x".into()).into();
        assert_eq!(nf.code, EXIT_INPUT);
    }

    #[test]
    fn abbreviation_keeps_both_ends() {
        let big: Rational = format!("{}7", "1".repeat(99)).parse().unwrap();
        let short = abbreviate(&big, false);
        assert!(short.starts_with("1111") && short.contains("17 (100 characters)"));
        assert_eq!(abbreviate(&big, true).len(), 100);
    }
}
