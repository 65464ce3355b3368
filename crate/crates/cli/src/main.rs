mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regring::ginv::{
    inner_annihilator, inner_inverses, left_annihilator, outer_inverses, principal_left_ideal, principal_right_ideal,
    reflexive_inverses, right_annihilator,
};
use regring::lab::{run_suite, CheckName};
use regring::matrix::{inner_inverse_matrix, inner_set_equal_matrices, membership_ar, membership_ra, rank, Matrix};
use regring::ring::{is_semiprime, regular_elements};
use regring::{build_example_ring, parse_element, render, Error, ElemSet, Ring, RingKind, RingSpec};
use report::{check_text, result_text, Report, RingJson};
use serde_json::{json, Value};

const BUILTIN_EXAMPLE: &str = "example10";

#[derive(Parser)]
#[command(name = "regring", version, about = "Generalized inverses in finite rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring-level facts.
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// Inverse sets, annihilators and principal ideals of one element.
    Inv(InvArgs),
    /// Run theorem checks.
    Check(CheckArgs),
    /// Rank-based operations on k×k matrices over GF(q).
    Matrix(MatrixArgs),
}

#[derive(Subcommand)]
enum RingCommand {
    Info {
        /// Spec file, inline JSON, or `example10`.
        spec: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Clone, Copy)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Enumeration budget, overriding the one in the ring spec.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvKind {
    Inner,
    Outer,
    Reflexive,
    Iann,
    LeftAnn,
    RightAnn,
    Ideals,
}

#[derive(Args)]
struct InvArgs {
    spec: String,
    #[arg(long)]
    elem: String,
    #[arg(long, value_enum)]
    kind: InvKind,
    /// List every element instead of eliding above the cap.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 64)]
    cap: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct CheckArgs {
    spec: String,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Exit 0 when a violation is found and 1 when none is.
    #[arg(long)]
    expect_violation: bool,
    /// Report elapsed times as 0.
    #[arg(long)]
    no_timing: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    q: u64,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    op: MatrixOp,
}

#[derive(Subcommand)]
enum MatrixOp {
    /// A reflexive inner inverse of A.
    Ginverse { a: String },
    /// Whether I(A) = I(B).
    Seteq { a: String, b: String },
    /// Whether B ∈ A·R and B ∈ R·A.
    Membership { a: String, b: String },
}

/// Input errors, reported on stderr with exit status 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

struct Output {
    body: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.body);
            ExitCode::from(out.code)
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Output, InputError> {
    match command {
        Command::Ring { command: RingCommand::Info { spec, common } } => ring_info(&spec, common),
        Command::Inv(args) => inv(&args),
        Command::Check(args) => check(&args),
        Command::Matrix(args) => matrix(&args),
    }
}

fn load_ring(spec: &str, budget: Option<u64>) -> Result<Ring, InputError> {
    let ring = if spec == BUILTIN_EXAMPLE {
        build_example_ring()
    } else {
        let text = if spec.trim_start().starts_with('{') {
            spec.to_string()
        } else {
            std::fs::read_to_string(spec).map_err(|e| InputError(format!("cannot read {spec}: {e}")))?
        };
        RingSpec::from_json(&text)?.build()?
    };
    Ok(match budget {
        Some(b) => ring.with_budget(b),
        None => ring,
    })
}

fn squarefree(mut n: u64) -> bool {
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Semiprimeness, decided without enumeration where the ring type allows it.
fn semiprime(ring: &Ring) -> Result<bool, InputError> {
    match is_semiprime(ring) {
        Ok(v) => Ok(v.semiprime),
        Err(Error::BudgetExceeded { .. }) => match ring.kind() {
            RingKind::Matrix => Ok(true),
            RingKind::Modular => Ok(squarefree(ring.size())),
            _ => Err(InputError(format!(
                "cannot decide semiprimeness of {} within the enumeration budget of {}",
                ring.describe(),
                ring.budget()
            ))),
        },
        Err(e) => Err(e.into()),
    }
}

fn ring_json(ring: &Ring, semiprime: bool) -> RingJson {
    RingJson { kind: ring.kind().as_str().to_string(), size: ring.size(), semiprime }
}

fn emit(report: &Report, format: Format, description: &str) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => result_text(report, description),
    }
}

fn ring_info(spec: &str, common: Common) -> Result<Output, InputError> {
    let ring = load_ring(spec, common.budget)?;
    let mut result = serde_json::Map::new();
    result.insert("description".into(), json!(ring.describe()));
    result.insert("characteristic".into(), json!(ring.characteristic()));
    let semi = match is_semiprime(&ring) {
        Ok(v) => {
            result.insert("semiprime_witness".into(), json!(v.witness.map(|w| render(&ring, &w))));
            v.semiprime
        }
        Err(_) => semiprime(&ring)?,
    };
    let regular = match (ring.kind(), regular_elements(&ring)) {
        (_, Ok(set)) => json!(set.len()),
        (RingKind::Matrix, Err(_)) => json!(ring.size()),
        (_, Err(e)) => json!(format!("skipped: {e}")),
    };
    result.insert("regular_count".into(), regular);
    let mut report = Report::new(ring_json(&ring, semi));
    report.result = Some(Value::Object(result));
    Ok(Output { body: emit(&report, common.format, &ring.describe()), code: 0 })
}

fn set_json(ring: &Ring, name: &str, set: &ElemSet, cap: Option<usize>) -> Value {
    let shown = cap.unwrap_or(usize::MAX).min(set.len());
    let elements: Vec<String> = set.iter().take(shown).map(|x| render(ring, &x)).collect();
    json!({ "name": name, "count": set.len(), "elided": set.len() - shown, "elements": elements })
}

fn inv(args: &InvArgs) -> Result<Output, InputError> {
    let ring = load_ring(&args.spec, args.common.budget)?;
    let a = parse_element(&ring, &args.elem)?;
    let semi = semiprime(&ring)?;
    let label = render(&ring, &a);
    let sets: Result<Vec<(String, ElemSet)>, Error> = match args.kind {
        InvKind::Inner => inner_inverses(&ring, &a).map(|s| vec![(format!("I({label})"), s)]),
        InvKind::Outer => outer_inverses(&ring, &a).map(|s| vec![(format!("outer({label})"), s)]),
        InvKind::Reflexive => reflexive_inverses(&ring, &a).map(|s| vec![(format!("Ref({label})"), s)]),
        InvKind::Iann => inner_annihilator(&ring, &a).map(|s| vec![(format!("Iann({label})"), s)]),
        InvKind::LeftAnn => left_annihilator(&ring, &a).map(|s| vec![(format!("l({label})"), s)]),
        InvKind::RightAnn => right_annihilator(&ring, &a).map(|s| vec![(format!("r({label})"), s)]),
        InvKind::Ideals => principal_right_ideal(&ring, &a).and_then(|r| {
            let l = principal_left_ideal(&ring, &a)?;
            Ok(vec![(format!("{label}R"), r), (format!("R{label}"), l)])
        }),
    };
    let cap = if args.all { None } else { Some(args.cap) };
    let mut result = serde_json::Map::new();
    result.insert("element".into(), json!(label));
    result.insert("kind".into(), json!(args.kind.to_possible_value().map(|v| v.get_name().to_string())));
    match sets {
        Ok(sets) => {
            result.insert("status".into(), json!("pass"));
            let sets: Vec<Value> = sets.iter().map(|(name, s)| set_json(&ring, name, s, cap)).collect();
            result.insert("sets".into(), Value::Array(sets));
        }
        Err(e @ Error::BudgetExceeded { .. }) => {
            result.insert("status".into(), json!("skipped"));
            result.insert("note".into(), json!(e.to_string()));
        }
        Err(e) => return Err(e.into()),
    }
    let mut report = Report::new(ring_json(&ring, semi));
    report.result = Some(Value::Object(result));
    Ok(Output { body: emit(&report, args.common.format, &ring.describe()), code: 0 })
}

fn check(args: &CheckArgs) -> Result<Output, InputError> {
    let names = CheckName::parse_list(&args.checks)?;
    let ring = load_ring(&args.spec, args.common.budget)?;
    let suite = run_suite(&ring, &names, None);
    let semi = match suite.semiprime {
        Some(s) => s,
        None => semiprime(&ring)?,
    };
    let timing = !args.no_timing;
    let mut report = Report::from_suite(&ring, &suite, semi, timing);
    if !timing {
        for c in &mut report.checks {
            c.elapsed_ms = 0.0;
        }
    }
    let violated = report.summary.violation > 0;
    let code = u8::from(violated != args.expect_violation);
    let body = match args.common.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => check_text(&report, &suite.ring, timing),
    };
    Ok(Output { body, code })
}

fn parse_matrix(k: usize, q: u64, text: &str) -> Result<Matrix, InputError> {
    Matrix::parse(k, q, text).map_err(|e| InputError(format!("malformed matrix {text:?}: {e}")))
}

fn matrix_text(m: &Matrix) -> String {
    let k = m.k();
    (0..k)
        .map(|r| (0..k).map(|c| m.get(r, c).to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join(";")
}

fn matrix(args: &MatrixArgs) -> Result<Output, InputError> {
    let ring = Ring::matrix(args.k, args.q)?;
    let p = |t: &str| parse_matrix(args.k, args.q, t);
    let result = match &args.op {
        MatrixOp::Ginverse { a } => {
            let a = p(a)?;
            let g = inner_inverse_matrix(&a);
            json!({ "op": "ginverse", "a": matrix_text(&a), "rank": rank(&a), "ginverse": matrix_text(&g) })
        }
        MatrixOp::Seteq { a, b } => {
            let (a, b) = (p(a)?, p(b)?);
            json!({
                "op": "seteq",
                "a": matrix_text(&a),
                "b": matrix_text(&b),
                "equal": inner_set_equal_matrices(&a, &b),
            })
        }
        MatrixOp::Membership { a, b } => {
            let (a, b) = (p(a)?, p(b)?);
            json!({
                "op": "membership",
                "a": matrix_text(&a),
                "b": matrix_text(&b),
                "b_in_aR": membership_ar(&b, &a),
                "b_in_Ra": membership_ra(&b, &a),
            })
        }
    };
    let mut report = Report::new(ring_json(&ring, true));
    report.result = Some(result);
    Ok(Output { body: emit(&report, args.format, &ring.describe()), code: 0 })
}
