//! Library side of the `ramcount` binary. [`run`] parses arguments, executes
//! one subcommand and returns the exit status together with captured output,
//! so the whole frontend is testable without spawning a process.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ramcount::congruence::{classify_unsolvable, count_general_explicit, orbicyclic, CongruenceInstance, CountReport};
use ramcount::methods::MethodRegistry;
use ramcount::oracle::{oracle_count, OracleBudget};
use ramcount::ramanujan::ramanujan;
use ramcount::verify::{self, VerifyConfig, VerifyReport};
use ramcount::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ramcount", version, about = "Count solutions of restricted linear congruences")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count solutions of a1 x1 + ... + ak xk = b (mod n) with gcd(xi, n) = ti.
    Count {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Counting method to cross-check against the explicit formula.
        #[arg(long, default_value = "explicit")]
        method: String,
    },
    /// Report only whether the congruence is solvable, and why not.
    Classify {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Evaluate the Ramanujan sum c_n(m).
    Ramanujan {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Number of orbicyclic arithmetic functions E(m1, ..., mk).
    Orbicyclic {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        m: Vec<i64>,
    },
    /// Count by brute-force enumeration.
    Oracle {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Largest number of candidate tuples to enumerate.
        #[arg(long, default_value_t = OracleBudget::default().max_tuples)]
        budget: u64,
    },
    /// Run the identity suites and a seeded random counting sweep.
    Verify {
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
        /// Random instances in the counting sweep.
        #[arg(long, default_value_t = VerifyConfig::default().samples)]
        samples: usize,
        /// Largest modulus used by the identity suites.
        #[arg(long, default_value_t = VerifyConfig::default().max_modulus)]
        max_modulus: u64,
    },
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Modulus.
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    /// Coefficients, comma separated.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    a: Vec<i64>,
    /// gcd constraints, comma separated, one per coefficient.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    t: Vec<i64>,
    /// Right-hand side.
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
}

impl InstanceArgs {
    fn build(&self) -> Result<CongruenceInstance, Failure> {
        CongruenceInstance::new(self.n, self.a.clone(), self.t.clone(), self.b).map_err(Failure::from)
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Invalid(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            _ if e.is_integrity_failure() => Failure::Verification(e.to_string()),
            Error::NonPositive { name, value } => Failure::Invalid(format!("invalid value '{value}' for --{name}: must be positive")),
            Error::LengthMismatch { coefficients, constraints } => Failure::Invalid(format!(
                "--a has {coefficients} entries but --t has {constraints}; they must have equal length"
            )),
            Error::BudgetExceeded { .. } => Failure::Invalid(format!("{e}; raise --budget")),
            Error::UnknownMethod(_) => Failure::Invalid(format!("invalid value for --method: {e}")),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

/// A report in both renderings.
struct Report {
    human: String,
    json: Value,
    /// Set when the report itself records a failed check.
    failed: bool,
}

/// Parse `args` (including the program name) and execute the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { status: EXIT_INVALID, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { status: EXIT_OK, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let report = match execute(&cli.command) {
        Ok(report) => report,
        Err(Failure::Invalid(msg)) => return error(EXIT_INVALID, msg),
        Err(Failure::Verification(msg)) => return error(EXIT_VERIFY_FAILED, msg),
    };
    let mut text = match cli.format {
        Format::Human => report.human,
        Format::Json => report.json.to_string(),
    };
    text.push('\n');
    let status = if report.failed { EXIT_VERIFY_FAILED } else { EXIT_OK };
    match &cli.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { status, stdout: String::new(), stderr: String::new() },
            Err(e) => error(EXIT_INVALID, format!("cannot write --output {}: {e}", path.display())),
        },
        None => Outcome { status, stdout: text, stderr: String::new() },
    }
}

fn error(status: i32, msg: String) -> Outcome {
    Outcome { status, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

fn execute(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Count { instance, method } => count(&instance.build()?, method),
        Command::Classify { instance } => Ok(classify(&instance.build()?)),
        Command::Ramanujan { n, m } => {
            let n = u64::try_from(*n)
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| Failure::Invalid(format!("invalid value '{n}' for --n: must be positive")))?;
            let value = ramanujan(n, *m)?;
            Ok(Report {
                human: value.to_string(),
                json: json!({ "m": m, "n": n, "value": value }),
                failed: false,
            })
        }
        Command::Orbicyclic { m } => {
            let m = m
                .iter()
                .map(|&mi| {
                    u64::try_from(mi)
                        .ok()
                        .filter(|&x| x > 0)
                        .ok_or_else(|| Failure::Invalid(format!("invalid value '{mi}' for --m: must be positive")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let value = orbicyclic(&m)?;
            Ok(Report {
                human: value.to_string(),
                json: json!({ "m": m, "value": value.to_string() }),
                failed: false,
            })
        }
        Command::Oracle { instance, budget } => {
            let inst = instance.build()?;
            let value = oracle_count(&inst, OracleBudget { max_tuples: *budget })?;
            Ok(Report {
                human: value.to_string(),
                json: json!({ "count": value.to_string() }),
                failed: false,
            })
        }
        Command::Verify { seed, samples, max_modulus } => {
            Ok(verify_report(&verify::run(&VerifyConfig { seed: *seed, samples: *samples, max_modulus: *max_modulus })))
        }
    }
}

fn count(inst: &CongruenceInstance, method: &str) -> Result<Report, Failure> {
    let registry = MethodRegistry::default();
    let chosen = registry.lookup(method)?;
    if !chosen.supports(inst) {
        return Err(Failure::Invalid(format!("method '{method}' does not apply to this instance")));
    }
    let report = count_general_explicit(inst)?;
    let other = chosen.count(inst)?;
    if other != report.count {
        return Err(Failure::Verification(format!(
            "method '{method}' gives {other} but the explicit formula gives {}",
            report.count
        )));
    }
    Ok(Report { human: human_count(inst, &report), json: count_json(inst, &report), failed: false })
}

fn count_json(inst: &CongruenceInstance, report: &CountReport) -> Value {
    let primes: Vec<Value> = report
        .locals
        .iter()
        .map(|l| json!({ "p": l.p, "r_p": l.r_p, "m_p": l.m_p, "e_p": l.e_p, "b_class": l.b_class.label() }))
        .collect();
    json!({
        "canonical_a": inst.coefficients(),
        "canonical_b": inst.target(),
        "count": report.count.to_string(),
        "primes": primes,
        "solvable": report.solvable(),
        "unsolvable_case": report.unsolvable_case.map(|c| c.label()),
    })
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn human_count(inst: &CongruenceInstance, report: &CountReport) -> String {
    let mut lines = vec![
        format!("count: {}", report.count),
        format!("solvable: {}", report.solvable()),
        format!("unsolvable case: {}", report.unsolvable_case.map_or("none", |c| c.label())),
        format!("canonical a: {}", join(inst.coefficients())),
        format!("canonical b: {}", inst.target()),
    ];
    for l in &report.locals {
        lines.push(format!(
            "prime {}: r_p={} m_p={} e_p={} b_class={}",
            l.p,
            l.r_p,
            l.m_p,
            l.e_p.map_or("inf".to_string(), |e| e.to_string()),
            l.b_class.label()
        ));
    }
    lines.join("\n")
}

fn classify(inst: &CongruenceInstance) -> Report {
    let case = classify_unsolvable(inst);
    let human = match case {
        None => "solvable".to_string(),
        Some(c) => format!("unsolvable: case {}", c.label()),
    };
    Report {
        human,
        json: json!({ "solvable": case.is_none(), "unsolvable_case": case.map(|c| c.label()) }),
        failed: false,
    }
}

fn verify_report(report: &VerifyReport) -> Report {
    let mut lines = vec![format!("seed: {}", report.seed)];
    let mut suites = Vec::new();
    for s in &report.suites {
        let mut line = format!(
            "[{}] {}: {} checked, {} failed",
            if s.passed() { "PASS" } else { "FAIL" },
            s.name,
            s.checked,
            s.failures
        );
        if let Some(first) = &s.first_failure {
            line.push_str(&format!(" (first: {first})"));
        }
        lines.push(line);
        suites.push(json!({
            "checked": s.checked,
            "failures": s.failures,
            "first_failure": s.first_failure,
            "name": s.name,
            "passed": s.passed(),
        }));
    }
    Report {
        human: lines.join("\n"),
        json: json!({ "passed": report.passed(), "seed": report.seed, "suites": suites }),
        failed: !report.passed(),
    }
}
