//! The `apolar` command-line front end.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 input is not a usable
//! binomial, 4 verification mismatch (or replay mismatch), 5 ideal is not
//! Artinian.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::binomial::{classify, cross_validate_report, normalize, BinomialError};
use crate::families::{enumerate_binomials, SweepSpec};
use crate::field::FieldSpec;
use crate::inverse::{hilbert_function, GradedIdealPresentation, InverseSystemError};
use crate::lefschetz::{find_lefschetz_element, LefschetzError, LefschetzInput, LefschetzMode, LefschetzReport, LefschetzSearchStrategy, RankSource};
use crate::parse::{parse_polynomial, parse_polynomials, split_ideal, ParseError};
use crate::poly::{default_names, Polynomial};
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_BINOMIAL: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_NOT_ARTINIAN: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "apolar",
    version,
    about = "Inverse systems of binomials: complete-intersection test and Lefschetz checks"
)]
struct Cli {
    /// Recompute a report saved with --out and compare it with the file.
    #[arg(long, value_name = "FILE")]
    replay: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a binomial dual generator.
    Classify(ClassifyArgs),
    /// Hilbert function of R/Ann(F).
    Hilbert(HilbertArgs),
    /// Weak or strong Lefschetz check for a dual generator or an ideal.
    Lefschetz(LefschetzArgs),
    /// Cross-check the classifier against the oracle on every binomial within bounds.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Polynomial expression, e.g. "X^2YZ - XZ^3".
    #[arg(long)]
    poly: String,
    /// Comma-separated variable names fixing their order.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Also compute Ann(F) directly and compare.
    #[arg(long)]
    verify: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct HilbertArgs {
    #[arg(long)]
    poly: String,
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Field characteristic: 0 or a prime below 2^31.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Wlp,
    Slp,
}

#[derive(Args, Debug)]
struct LefschetzArgs {
    /// Dual generator F.
    #[arg(long, required_unless_present = "ideal", conflicts_with = "ideal")]
    poly: Option<String>,
    /// Semicolon-separated ideal generators, e.g. "x^2;y^2;z^2".
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "slp")]
    mode: ModeArg,
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Number of linear forms to try over Q (or over large prime fields).
    #[arg(long, default_value_t = 16)]
    trials: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Compute every rank instead of deducing most of them.
    #[arg(long)]
    full_table: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    max_a: u32,
    #[arg(long, default_value_t = 1)]
    max_b: u32,
    /// Also check the strong Lefschetz property on every CI case.
    #[arg(long)]
    slp: bool,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

/// What a run prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::new(EXIT_PARSE, format!("parse error: {e}"))
    }
}

impl From<InverseSystemError> for Failure {
    fn from(e: InverseSystemError) -> Self {
        let code = match e {
            InverseSystemError::NotArtinian(_) => EXIT_NOT_ARTINIAN,
            _ => EXIT_PARSE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<BinomialError> for Failure {
    fn from(e: BinomialError) -> Self {
        match e {
            BinomialError::NotHomogeneous => Failure::new(EXIT_PARSE, e.to_string()),
            BinomialError::Oracle(inner) => inner.into(),
            _ => Failure::new(EXIT_NOT_BINOMIAL, e.to_string()),
        }
    }
}

impl From<LefschetzError> for Failure {
    fn from(e: LefschetzError) -> Self {
        match e {
            LefschetzError::Inverse(inner) => inner.into(),
            _ => Failure::new(EXIT_PARSE, e.to_string()),
        }
    }
}

/// A finished command: JSON envelope, text rendering and exit code.
struct Rendered {
    json: Value,
    text: String,
    code: i32,
    stderr: String,
}

fn field_from(characteristic: u64) -> Result<FieldSpec, Failure> {
    FieldSpec::from_characteristic(characteristic).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))
}

fn tuple<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(T::to_string).collect();
    format!("({})", parts.join(", "))
}

fn parse_input(src: &str, field: FieldSpec, vars: Option<&[String]>) -> Result<(Polynomial, Vec<String>), Failure> {
    let parsed = parse_polynomial(src, field, vars)?;
    Ok((parsed.poly, parsed.names))
}

fn input_json(recorded: &[String], extra: Value) -> Value {
    let mut input = json!({ "args": recorded });
    if let (Value::Object(map), Value::Object(more)) = (&mut input, extra) {
        map.extend(more);
    }
    input
}

fn run_classify(a: &ClassifyArgs, recorded: &[String]) -> Result<Rendered, Failure> {
    let (f, names) = parse_input(&a.poly, FieldSpec::Rationals, a.vars.as_deref())?;
    let nf = normalize(&f)?;
    let report = classify(&nf);
    let mut result = report::classification(&report, &names);
    let upper: Vec<String> = names.clone();
    let lower = report::lowercase_names(&names);

    let mut text = String::new();
    writeln!(text, "F = {}", f.display_with(&upper)).unwrap();
    let nfr = &report.normal_form;
    let order: Vec<&str> = nfr.variable_map.iter().map(|&i| names[i].as_str()).collect();
    writeln!(
        text,
        "normal form: n = {}, r = {}, variables {}, a = {}, b = {}, c = {}{}",
        nfr.n,
        nfr.r,
        tuple(&order),
        tuple(&nfr.a),
        tuple(&nfr.b),
        nfr.c,
        if report.mirrored { " (monomials swapped)" } else { "" }
    )
    .unwrap();
    if !nfr.tensor_factors.is_empty() {
        let tf: Vec<String> = nfr.tensor_factors.iter().map(|t| format!("{}^{}", names[t.variable], t.exponent)).collect();
        writeln!(text, "tensor factors: {}", tf.join(", ")).unwrap();
    }
    let verdict = if report.is_ci { "complete intersection" } else { "not a complete intersection" };
    write!(text, "verdict: {verdict} [{}]", report.reason.as_str()).unwrap();
    if let Some(q) = report.q {
        write!(text, ", q = {q}").unwrap();
    }
    if let Some(m) = report.m {
        write!(text, ", m = {m}").unwrap();
    }
    if let Some(w) = report.witness_index {
        write!(text, ", witness i = {w}").unwrap();
    }
    text.push('\n');
    if let Some(gens) = &report.generators {
        writeln!(text, "generators of Ann(F):").unwrap();
        for g in gens {
            writeln!(text, "  {}", g.display_with(&lower)).unwrap();
        }
    }

    let mut code = EXIT_OK;
    let mut stderr = String::new();
    if a.verify {
        let cv = cross_validate_report(&f)?;
        writeln!(
            text,
            "oracle: mu = {}, complete intersection: {}, generators match: {}",
            cv.oracle_mu,
            cv.oracle_is_ci,
            match cv.generators_match {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "n/a",
            }
        )
        .unwrap();
        if !cv.agrees() {
            code = EXIT_MISMATCH;
            writeln!(stderr, "VERIFICATION MISMATCH for F = {}", f.display_with(&upper)).unwrap();
        }
        if let Value::Object(map) = &mut result {
            map.insert("verification".into(), report::verification(&cv));
        }
    }
    let input = input_json(
        recorded,
        json!({"poly": a.poly, "vars": names, "field": "QQ", "parsed": report::polynomial(&f), "verify": a.verify}),
    );
    Ok(Rendered { json: report::envelope("classify", input, result), text, code, stderr })
}

fn run_hilbert(a: &HilbertArgs, recorded: &[String]) -> Result<Rendered, Failure> {
    let field = field_from(a.characteristic)?;
    let (f, names) = parse_input(&a.poly, field, a.vars.as_deref())?;
    let h = hilbert_function(&f)?;
    let mut text = String::new();
    writeln!(text, "h-vector: {}", tuple(&h.h_vector)).unwrap();
    writeln!(text, "socle degree: {}", h.socle_degree).unwrap();
    writeln!(text, "dimension: {}", h.total_dimension()).unwrap();
    writeln!(text, "palindromic: {}", if h.is_palindromic() { "yes" } else { "no" }).unwrap();
    let input = input_json(
        recorded,
        json!({"poly": a.poly, "vars": names, "field": field.to_string(), "parsed": report::polynomial(&f)}),
    );
    Ok(Rendered { json: report::envelope("hilbert", input, report::hilbert(&h)), text, code: EXIT_OK, stderr: String::new() })
}

fn lefschetz_text(r: &LefschetzReport, names: &[String]) -> String {
    let lower = report::lowercase_names(names);
    let mut text = String::new();
    writeln!(text, "ell = {}", r.ell.display_with(&lower)).unwrap();
    writeln!(text, "h-vector: {}", tuple(&r.h_vector)).unwrap();
    writeln!(text, "rank table (i, k: achieved/required):").unwrap();
    for e in &r.rank_table {
        let note = match e.source {
            RankSource::Computed => "",
            RankSource::Symmetry => " [symmetry]",
            RankSource::Implied => " [implied]",
        };
        let mark = if e.ok() { "" } else { "  FAIL" };
        writeln!(text, "  {:>3} {:>3}: {}/{}{note}{mark}", e.i, e.k, e.achieved, e.required).unwrap();
    }
    writeln!(text, "WLP: {}", r.wlp).unwrap();
    if let Some(slp) = r.slp {
        writeln!(text, "SLP: {slp}").unwrap();
    }
    if let Some((i, k)) = r.first_failure {
        writeln!(text, "first failure: i = {i}, k = {k}").unwrap();
    }
    let how = if r.exhaustive { "exhaustive search" } else { "search" };
    writeln!(text, "linear forms tried: {} ({how}), certified: {}", r.trials, r.certified).unwrap();
    if !r.success() && !r.certified {
        writeln!(text, "no Lefschetz element found after {} trials", r.trials).unwrap();
    }
    text
}

fn run_lefschetz(a: &LefschetzArgs, recorded: &[String]) -> Result<Rendered, Failure> {
    let field = field_from(a.characteristic)?;
    let strategy = LefschetzSearchStrategy {
        mode: match a.mode {
            ModeArg::Wlp => LefschetzMode::Wlp,
            ModeArg::Slp => LefschetzMode::Slp,
        },
        trials: a.trials,
        seed: a.seed,
        full_table: a.full_table,
        ..LefschetzSearchStrategy::default()
    };
    let (r, names, parsed) = match (&a.poly, &a.ideal) {
        (Some(src), _) => {
            let (f, names) = parse_input(src, field, a.vars.as_deref())?;
            let r = find_lefschetz_element(LefschetzInput::Dual(&f), &strategy)?;
            (r, names, json!({"poly": src, "parsed": report::polynomial(&f)}))
        }
        (None, Some(src)) => {
            let sources = split_ideal(src);
            let (gens, names) = parse_polynomials(&sources, field, a.vars.as_deref())?;
            let ideal = GradedIdealPresentation::new(field, names.len(), gens.clone())?;
            let r = find_lefschetz_element(LefschetzInput::Ideal(&ideal), &strategy)?;
            let parsed: Vec<Value> = gens.iter().map(report::polynomial).collect();
            (r, names, json!({"ideal": src, "parsed": parsed}))
        }
        (None, None) => return Err(Failure::new(EXIT_PARSE, "one of --poly or --ideal is required")),
    };
    let mut input = input_json(recorded, parsed);
    if let Value::Object(map) = &mut input {
        map.insert("vars".into(), json!(names));
        map.insert("field".into(), json!(field.to_string()));
    }
    let text = lefschetz_text(&r, &names);
    Ok(Rendered {
        json: report::envelope("lefschetz", input, report::lefschetz(&r, &names)),
        text,
        code: EXIT_OK,
        stderr: String::new(),
    })
}

struct CaseOutcome {
    poly: String,
    is_ci: bool,
    problem: Option<String>,
    slp_failed: bool,
}

fn sweep_case(f: &Polynomial, names: &[String], check_slp: bool) -> CaseOutcome {
    let poly = f.display_with(names).to_string();
    let cv = match cross_validate_report(f) {
        Ok(cv) => cv,
        Err(e) => return CaseOutcome { poly, is_ci: false, problem: Some(e.to_string()), slp_failed: false },
    };
    let is_ci = cv.report.is_ci;
    let problem = (!cv.agrees()).then(|| {
        format!(
            "classifier says {}, oracle mu = {} ({}), generators match: {:?}",
            if is_ci { "CI" } else { "not CI" },
            cv.oracle_mu,
            if cv.oracle_is_ci { "CI" } else { "not CI" },
            cv.generators_match
        )
    });
    let slp_failed = check_slp
        && is_ci
        && !crate::lefschetz::check_slp(f, &LefschetzSearchStrategy::default()).is_ok_and(|r| r.slp == Some(true));
    CaseOutcome { poly, is_ci, problem, slp_failed }
}

fn run_sweep(a: &SweepArgs, recorded: &[String]) -> Result<Rendered, Failure> {
    let spec = SweepSpec::new(a.n, a.max_a, a.max_b);
    let cases: Vec<Polynomial> = enumerate_binomials(FieldSpec::Rationals, spec)
        .map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?
        .map(|c| c.poly)
        .collect();
    let names = default_names(a.n, true);
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = a.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
    let outcomes: Vec<CaseOutcome> = pool.install(|| cases.par_iter().map(|f| sweep_case(f, &names, a.slp)).collect());

    let ci_count = outcomes.iter().filter(|o| o.is_ci).count();
    let mismatches: Vec<&CaseOutcome> = outcomes.iter().filter(|o| o.problem.is_some()).collect();
    let slp_failures: Vec<&CaseOutcome> = outcomes.iter().filter(|o| o.slp_failed).collect();
    let failures: Vec<Value> = mismatches
        .iter()
        .map(|o| json!({"poly": o.poly, "kind": "mismatch", "detail": o.problem}))
        .chain(slp_failures.iter().map(|o| json!({"poly": o.poly, "kind": "slp_failure"})))
        .collect();
    let result = json!({
        "cases": outcomes.len(),
        "ci_count": ci_count,
        "mismatches": mismatches.len(),
        "slp_failures": slp_failures.len(),
        "failures": failures,
    });
    let mut text = String::new();
    writeln!(text, "n = {}, a_i <= {}, b_i <= {}", a.n, a.max_a, a.max_b).unwrap();
    writeln!(text, "cases: {}", outcomes.len()).unwrap();
    writeln!(text, "complete intersections: {ci_count}").unwrap();
    writeln!(text, "mismatches: {}", mismatches.len()).unwrap();
    if a.slp {
        writeln!(text, "SLP failures: {}", slp_failures.len()).unwrap();
    }
    let mut stderr = String::new();
    for o in &mismatches {
        writeln!(stderr, "MISMATCH: F = {}: {}", o.poly, o.problem.as_deref().unwrap_or("")).unwrap();
    }
    for o in &slp_failures {
        writeln!(stderr, "SLP FAILURE: F = {}", o.poly).unwrap();
    }
    let code = if mismatches.is_empty() && slp_failures.is_empty() { EXIT_OK } else { EXIT_MISMATCH };
    let input = input_json(
        recorded,
        json!({"n": a.n, "max_a": a.max_a, "max_b": a.max_b, "slp": a.slp, "field": "QQ"}),
    );
    Ok(Rendered { json: report::envelope("sweep", input, result), text, code, stderr })
}

/// Arguments worth recording for a replay: everything except output flags
/// (and `--jobs`, which cannot change the result).
fn recorded_args(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip_next = false;
    for a in args {
        if skip_next {
            skip_next = false;
            continue;
        }
        match a.as_str() {
            "--json" => {}
            "--out" | "--jobs" => skip_next = true,
            s if s.starts_with("--out=") || s.starts_with("--jobs=") => {}
            _ => out.push(a.clone()),
        }
    }
    out
}

fn dispatch<'c>(command: &'c Command, recorded: &[String]) -> Result<(Rendered, &'c OutputArgs), Failure> {
    Ok(match command {
        Command::Classify(a) => (run_classify(a, recorded)?, &a.output),
        Command::Hilbert(a) => (run_hilbert(a, recorded)?, &a.output),
        Command::Lefschetz(a) => (run_lefschetz(a, recorded)?, &a.output),
        Command::Sweep(a) => (run_sweep(a, recorded)?, &a.output),
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn replay(path: &PathBuf) -> Outcome {
    let fail = |code: i32, message: String| Outcome { code, stdout: String::new(), stderr: message + "\n" };
    let saved: Value = match std::fs::read_to_string(path).map_err(|e| e.to_string()).and_then(|s| serde_json::from_str(&s).map_err(|e| e.to_string())) {
        Ok(v) => v,
        Err(e) => return fail(EXIT_PARSE, format!("cannot read {}: {e}", path.display())),
    };
    let Some(args) = saved.pointer("/input/args").and_then(Value::as_array) else {
        return fail(EXIT_PARSE, format!("{} has no input.args", path.display()));
    };
    let args: Vec<String> = args.iter().filter_map(|a| a.as_str().map(str::to_string)).collect();
    let mut argv = vec!["apolar".to_string()];
    argv.extend(args.iter().cloned());
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => return fail(EXIT_PARSE, format!("recorded arguments do not parse: {e}")),
    };
    let Some(command) = cli.command else {
        return fail(EXIT_PARSE, "recorded arguments name no command".into());
    };
    let fresh = match dispatch(&command, &args) {
        Ok((r, _)) => r.json,
        Err(f) => return fail(f.code, f.message),
    };
    if fresh == saved {
        Outcome { code: EXIT_OK, stdout: format!("replay of {} matches\n", path.display()), stderr: String::new() }
    } else {
        let keys: Vec<&str> = ["schema_version", "command", "input", "result"]
            .into_iter()
            .filter(|k| fresh.get(k) != saved.get(k))
            .collect();
        fail(EXIT_MISMATCH, format!("REPLAY MISMATCH in {}: differing fields {}", path.display(), keys.join(", ")))
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let raw: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&raw) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match (&cli.replay, &cli.command) {
        (Some(path), None) => return replay(path),
        (Some(_), Some(_)) => {
            return Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: "--replay takes no subcommand\n".into() }
        }
        (None, None) => {
            return Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: "no command given; see --help\n".into() }
        }
        (None, Some(_)) => {}
    }
    let command = cli.command.expect("checked above");
    let strings: Vec<String> = raw.iter().skip(1).map(|s| s.to_string_lossy().into_owned()).collect();
    let recorded = recorded_args(&strings);
    match dispatch(&command, &recorded) {
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
        Ok((r, output)) => {
            let mut stderr = r.stderr;
            if let Some(path) = &output.out {
                if let Err(e) = std::fs::write(path, pretty(&r.json)) {
                    return Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: format!("cannot write {}: {e}\n", path.display()) };
                }
            }
            let stdout = if output.json { pretty(&r.json) } else { r.text };
            if r.code != EXIT_OK && stderr.is_empty() {
                stderr.push_str("verification failed\n");
            }
            Outcome { code: r.code, stdout, stderr }
        }
    }
}
