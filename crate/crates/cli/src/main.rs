//! `extremal`: build families, compute invariants, evaluate closed forms, run
//! the exact oracle and emit verification tables.
//!
//! Exit codes: 0 success, 2 argument or hypothesis error, 3 budget exhausted
//! (inconclusive), 4 verification failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use extremal_core::family_core::json::{from_json, to_json};
use extremal_core::family_core::InvariantReport;
use extremal_core::formulas::{self, BoundResult, Regime};
use extremal_core::oracle::{self, Budget, Mode, SearchProblem};
use extremal_core::table::{build_table, Column, Format, TableRequest};
use extremal_core::verify::{self, Identity, IdentityParams, Status, Suite, SuiteOptions};
use extremal_core::{Construction, Error, Family};

const EXIT_ARGUMENT: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_FAILED: u8 = 4;

#[derive(Parser)]
#[command(name = "extremal", version, about = "Exact computation with k-uniform families under matching- and clique-number constraints")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and write it as Family JSON.
    Build(BuildArgs),
    /// Compute ν, τ, ω (with certificates) of a Family JSON file.
    Invariants {
        /// Family JSON file.
        file: PathBuf,
    },
    /// Evaluate a closed-form bound.
    Formula(FormulaArgs),
    /// Run the exact branch-and-bound oracle for m or m*.
    Oracle(OracleArgs),
    /// Emit a formula / conjecture / oracle comparison table.
    Table(TableArgs),
    /// Run a property suite or an identity check.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    #[value(name = "E")]
    E,
    #[value(name = "HM")]
    Hm,
    #[value(name = "T3")]
    T3,
    #[value(name = "B")]
    B,
    #[value(name = "L")]
    L,
    #[value(name = "A")]
    A,
    #[value(name = "CLIQUE")]
    Clique,
    #[value(name = "LEX")]
    Lex,
    #[value(name = "CYC")]
    Cyc,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Number of edges (LEX) or size of the cyclic ground set (CYC).
    #[arg(long)]
    m: Option<usize>,
    /// Interval length (CYC).
    #[arg(long)]
    l: Option<usize>,
    /// Cyclic order as a comma-separated permutation of [m] (CYC; identity by default).
    #[arg(long, value_delimiter = ',')]
    sigma: Option<Vec<usize>>,
    /// Output file; the JSON goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaName {
    #[value(name = "sizeA")]
    SizeA,
    #[value(name = "emc")]
    Emc,
    #[value(name = "hm")]
    Hm,
    #[value(name = "mstar")]
    MStar,
    #[value(name = "m")]
    M,
    #[value(name = "conjecture")]
    Conjecture,
    #[value(name = "cross")]
    Cross,
    #[value(name = "crossdirect")]
    CrossDirect,
}

#[derive(Args)]
struct FormulaArgs {
    #[arg(long, value_enum)]
    name: FormulaName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Positive rational weight, e.g. `1` or `3/2` (cross).
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    n1: Option<usize>,
    #[arg(long)]
    n2: Option<usize>,
    /// l′ (crossdirect).
    #[arg(long)]
    lp: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    M,
    Mstar,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Node limit per search.
    #[arg(long, default_value_t = 100_000_000)]
    node_limit: u64,
    /// Wall-clock limit per search, in seconds.
    #[arg(long, default_value_t = 600.0)]
    time_limit: f64,
    /// Worker threads for the search (0 = all available).
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget, Error> {
        if !(self.time_limit.is_finite() && self.time_limit > 0.0) {
            return Err(Error::arg(format!("--time-limit must be positive (got {})", self.time_limit)));
        }
        Ok(Budget { node_limit: self.node_limit, time_limit: Duration::from_secs_f64(self.time_limit) })
    }

    fn threads(&self) -> Option<usize> {
        (self.threads > 0).then_some(self.threads)
    }
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    q: usize,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Write the optimal family as Family JSON.
    #[arg(long)]
    emit_witness: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: usize,
    /// Inclusive range `lo..hi` (or a single value).
    #[arg(long)]
    n: String,
    /// Inclusive range `lo..hi` (or a single value).
    #[arg(long)]
    q: String,
    /// Comma-separated subset of formula, conjecture, oracle, gap.
    #[arg(long, value_delimiter = ',', default_value = "formula,conjecture,oracle,gap")]
    columns: Vec<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Property suite: shifting, constructions, monotonicity, cross, cyclic,
    /// conjecture, regimes, oracle or trichotomy.
    #[arg(long, conflicts_with = "identity", required_unless_present = "identity")]
    suite: Option<String>,
    /// Identity: recursion, monotonicity, eq17 or trichotomy.
    #[arg(long)]
    identity: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Random samples for the trichotomy identity.
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Where to write a counterexample family, if one is found.
    #[arg(long)]
    witness: Option<PathBuf>,
}

/// A command failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) => 1,
            _ => EXIT_ARGUMENT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure { code: EXIT_ARGUMENT, message: format!("{}: {e}", path.display()) }
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, Error> {
    value.ok_or_else(|| Error::arg(format!("--{flag} is required here")))
}

fn write_or_print(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// JSON integer when it fits, decimal string otherwise.
fn int_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn rational_json(v: &BigRational) -> Value {
    match formulas::as_integer(v) {
        Some(i) => int_json(&i),
        None => json!(v.to_string()),
    }
}

fn bound_json(b: &BoundResult) -> Value {
    json!({
        "value": int_json(&b.value),
        "regime": b.regime.as_str(),
        "hypotheses_met": b.hypotheses_met,
        "note": b.note,
    })
}

fn plain(value: BigInt, regime: Regime) -> Value {
    json!({ "value": int_json(&value), "regime": regime.as_str(), "hypotheses_met": true, "note": "" })
}

fn parse_beta(text: &str) -> Result<BigRational, Error> {
    let bad = || Error::arg(format!("--beta '{text}' is not a rational number"));
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn parse_range(text: &str, flag: &str) -> Result<std::ops::RangeInclusive<usize>, Error> {
    let bad = || Error::arg(format!("--{flag} '{text}' is not a range lo..hi"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(Error::arg(format!("--{flag} range {lo}..{hi} is empty")));
    }
    Ok(lo..=hi)
}

fn cmd_build(args: BuildArgs) -> Result<(), Failure> {
    let c = match args.family {
        FamilyName::E => Construction::E { n: need(args.n, "n")?, k: need(args.k, "k")?, s: need(args.s, "s")? },
        FamilyName::Hm => Construction::HM { n: need(args.n, "n")?, k: need(args.k, "k")? },
        FamilyName::T3 => Construction::T3 { n: need(args.n, "n")? },
        FamilyName::B => Construction::B { n: need(args.n, "n")?, k: need(args.k, "k")?, s: need(args.s, "s")? },
        FamilyName::L => Construction::L { n: need(args.n, "n")?, k: need(args.k, "k")?, q: need(args.q, "q")? },
        FamilyName::A => Construction::A {
            n: need(args.n, "n")?,
            q: need(args.q, "q")?,
            k: need(args.k, "k")?,
            s: need(args.s, "s")?,
        },
        FamilyName::Clique => Construction::Clique { n: need(args.n, "n")?, q: need(args.q, "q")?, k: need(args.k, "k")? },
        FamilyName::Lex => Construction::Lex { n: need(args.n, "n")?, k: need(args.k, "k")?, m: need(args.m, "m")? },
        FamilyName::Cyc => {
            let sigma = match args.sigma {
                Some(sigma) => sigma,
                None => (1..=need(args.m, "m")?).collect(),
            };
            Construction::Cyc { sigma, l: need(args.l, "l")? }
        }
    };
    let family = c.build()?;
    let report = InvariantReport::compute(&family)?;
    write_or_print(args.out.as_ref(), &(to_json(&family) + "\n"))?;
    eprintln!(
        "{}: {} edges, n={}, k={}, nu={}, tau={}, omega={}, shifted={}",
        c.name(),
        family.len(),
        family.n(),
        family.k(),
        report.nu,
        report.tau,
        report.omega,
        report.shifted
    );
    Ok(())
}

fn cmd_invariants(file: PathBuf) -> Result<(), Failure> {
    let text = fs::read_to_string(&file).map_err(|e| io_failure(&file, e))?;
    let family = from_json(&text).map_err(|e| Failure { code: EXIT_ARGUMENT, message: format!("{}: {e}", file.display()) })?;
    let report = InvariantReport::compute(&family)?;
    println!("{}", serde_json::to_string(&report).expect("report serializes"));
    Ok(())
}

fn cmd_formula(a: FormulaArgs) -> Result<(), Failure> {
    let out = match a.name {
        FormulaName::SizeA => {
            plain(formulas::size_a(need(a.n, "n")?, need(a.q, "q")?, need(a.k, "k")?, need(a.s, "s")?)?, Regime::SizeA)
        }
        FormulaName::Emc => plain(formulas::emc_bound(need(a.n, "n")?, need(a.k, "k")?, need(a.s, "s")?)?, Regime::Emc),
        FormulaName::Hm => plain(formulas::hm_bound(need(a.n, "n")?, need(a.k, "k")?)?, Regime::HiltonMilner),
        FormulaName::MStar => {
            bound_json(&formulas::m_star_closed(need(a.n, "n")?, need(a.q, "q")?, need(a.k, "k")?, need(a.s, "s")?)?)
        }
        FormulaName::M => bound_json(&formulas::m_closed(need(a.n, "n")?, need(a.q, "q")?, need(a.k, "k")?, need(a.s, "s")?)?),
        FormulaName::Conjecture => plain(
            formulas::conjecture_rhs(need(a.n, "n")?, need(a.q, "q")?, need(a.k, "k")?, need(a.s, "s")?)?,
            Regime::Conjecture,
        ),
        FormulaName::Cross => {
            let beta = parse_beta(a.beta.as_deref().unwrap_or("1"))?;
            let b = formulas::cross_bound(
                need(a.n, "n")?,
                need(a.k, "k")?,
                need(a.l, "l")?,
                need(a.t, "t")?,
                need(a.s, "s")?,
                &beta,
            )?;
            json!({
                "value": rational_json(&b.value),
                "regime": Regime::Cross.as_str(),
                "hypotheses_met": b.hypotheses_met,
                "note": b.note,
                "maximizing_i": b.maximizing_i,
            })
        }
        FormulaName::CrossDirect => plain(
            formulas::cross_direct_bound(
                need(a.n1, "n1")?,
                need(a.n2, "n2")?,
                need(a.k, "k")?,
                need(a.l, "l")?,
                need(a.lp, "lp")?,
                need(a.s, "s")?,
            )?,
            Regime::CrossDirect,
        ),
    };
    println!("{out}");
    Ok(())
}

fn cmd_oracle(a: OracleArgs) -> Result<(), Failure> {
    let mode = match a.mode {
        ModeArg::M => Mode::M,
        ModeArg::Mstar => Mode::MStar,
    };
    let problem = SearchProblem::new(a.n, a.q, a.k, a.s, mode)
        .with_budget(a.budget.budget()?)
        .with_threads(a.budget.threads());
    let result = match mode {
        Mode::M => oracle::exact_m(&problem)?,
        Mode::MStar => oracle::exact_m_star(&problem)?,
    };
    if let Some(path) = &a.emit_witness {
        fs::write(path, to_json(&result.witness) + "\n").map_err(|e| io_failure(path, e))?;
    }
    println!(
        "{}",
        json!({ "value": result.value, "proven_optimal": result.proven_optimal, "nodes": result.nodes_explored })
    );
    if result.proven_optimal {
        Ok(())
    } else {
        Err(Failure { code: EXIT_INCONCLUSIVE, message: "budget exhausted; value is a lower bound".into() })
    }
}

fn cmd_table(a: TableArgs) -> Result<(), Failure> {
    let columns = a.columns.iter().map(|c| Column::parse(c.trim())).collect::<Result<Vec<_>, _>>()?;
    let format = match a.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    let mut req = TableRequest::new(a.k, a.s, parse_range(&a.n, "n")?, parse_range(&a.q, "q")?).with_columns(columns);
    req.format = format;
    req.budget = a.budget.budget()?;
    req.threads = a.budget.threads();
    let table = build_table(&req)?;
    write_or_print(a.out.as_ref(), &table.render(format))?;
    if table.complete() {
        Ok(())
    } else {
        Err(Failure { code: EXIT_INCONCLUSIVE, message: "some oracle cells exhausted their budget".into() })
    }
}

fn status_exit(status: Status) -> Result<(), Failure> {
    match status {
        Status::Pass => Ok(()),
        Status::Inconclusive => Err(Failure { code: EXIT_INCONCLUSIVE, message: "inconclusive".into() }),
        Status::Fail => Err(Failure { code: EXIT_FAILED, message: "verification failed".into() }),
    }
}

fn write_counterexample(path: Option<&PathBuf>, family: Option<&Family>) -> Result<(), Failure> {
    if let (Some(path), Some(family)) = (path, family) {
        fs::write(path, to_json(family) + "\n").map_err(|e| io_failure(path, e))?;
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let budget = a.budget.budget()?;
    if let Some(name) = &a.identity {
        let identity = Identity::parse(name)?;
        let mut params = IdentityParams::new(a.n.unwrap_or(9), a.q.unwrap_or(0), a.k.unwrap_or(3), a.s.unwrap_or(2));
        if matches!(identity, Identity::Recursion | Identity::MaxOverQ) {
            params = IdentityParams::new(need(a.n, "n")?, need(a.q, "q")?, need(a.k, "k")?, need(a.s, "s")?);
        } else if identity == Identity::Monotonicity {
            params.n = a.n_max.or(a.n).unwrap_or(200);
            params.k = a.k.unwrap_or(5);
            params.s = a.s.unwrap_or(5);
        }
        params.seed = a.seed;
        params.samples = a.samples;
        params.budget = budget;
        params.threads = a.budget.threads();
        let report = verify::verify_identity(identity, &params)?;
        if a.json {
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        } else {
            println!("{} {}: {}", report.status, identity.as_str(), report.detail);
        }
        write_counterexample(a.witness.as_ref(), report.counterexample.as_ref())?;
        return status_exit(report.status);
    }
    let suite = Suite::parse(a.suite.as_deref().unwrap_or_default())?;
    let opts = SuiteOptions {
        seed: a.seed,
        k: a.k,
        s: a.s,
        n_max: a.n_max,
        budget,
        threads: a.budget.threads(),
    };
    let report = verify::run_suite(suite, &opts)?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        println!("{report}");
    }
    status_exit(report.status())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Build(a) => cmd_build(a),
        Command::Invariants { file } => cmd_invariants(file),
        Command::Formula(a) => cmd_formula(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
