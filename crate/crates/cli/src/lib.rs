//! Command-line front end: identity suites, decompositions, form reduction
//! and orbit experiments, each emitting a JSON run report.

mod commands;
pub mod fixtures;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Map, Value};
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;
use transvect_core::Error;

pub use report::{Outcome, RunReport};

#[derive(Parser, Debug)]
#[command(name = "transvect", version, about = "Elementary symplectic group experiments", arg_required_else_help = true)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Global {
    /// Work budget for enumerations (rows, multiplications).
    #[arg(long, global = true, default_value_t = transvect_core::orbits::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Element cap for subgroup closures.
    #[arg(long, global = true, default_value_t = transvect_core::orbits::DEFAULT_CAP)]
    pub cap: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub threads: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormChoice {
    Printed,
    Corrected,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecomposeCheck {
    /// Word decompositions of the ρ and μ matrices.
    Words,
    /// Bass transvections against ρ and μ.
    Bass,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Check the commutator relations among symplectic generators.
    VerifyRelations {
        #[arg(long, default_value = "dyadic")]
        ring: String,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        n: Vec<usize>,
        /// Random samples per tuple; 0 checks symbolically.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = FormChoice::Both)]
        form: FormChoice,
    },
    /// Rewrite conjugates of first-row/column generators.
    Dilate {
        #[arg(long, value_delimiter = ',', default_value = "2")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 40)]
        max_exponent: u32,
        /// Inline word to dilate, e.g. "S:1,3:a;S:4,1:a*x1".
        #[arg(long)]
        word: Option<String>,
        /// Target indices "i,j".
        #[arg(long, default_value = "1,2")]
        target: String,
        #[arg(long, default_value = "X*f")]
        base: String,
        /// Conjugator variables for --word.
        #[arg(long, value_delimiter = ',', default_value = "a")]
        vars: Vec<String>,
    },
    /// Check the ρ/μ decompositions or the Bass transvection correspondence.
    Decompose {
        #[arg(long, value_enum, default_value_t = DecomposeCheck::Words)]
        check: DecomposeCheck,
        #[arg(long, value_delimiter = ',', default_value = "zmod:9")]
        ring: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Also check over Z[1/2] with indeterminate entries.
        #[arg(long)]
        symbolic: bool,
    },
    /// Reduce random Pfaffian-one alternating forms to the standard form.
    ReduceForm {
        #[arg(long, value_delimiter = ',', default_value = "zmod:9")]
        ring: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Also run the relative variant at the maximal ideal.
        #[arg(long)]
        relative: bool,
        /// Atoms (or relative triples) per random word.
        #[arg(long, default_value_t = 6)]
        length: usize,
    },
    /// Orbit partition of unimodular rows under a group.
    Orbits {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        size: usize,
        /// e, esp, e-rel, esp-rel, e1, esp1.
        #[arg(long, default_value = "esp")]
        group: String,
        #[arg(long)]
        ideal: Option<String>,
        /// Use every nonzero argument instead of additive generators.
        #[arg(long)]
        full_generators: bool,
        /// Include the orbit label of every row.
        #[arg(long)]
        labels: bool,
    },
    /// Compare linear and symplectic orbits on unimodular rows.
    OrbitEquality {
        #[command(flatten)]
        #[serde(flatten)]
        cases: CaseArgs,
    },
    /// Check that the orbits of E_n(R, I) are the congruence classes mod I.
    Transitivity {
        #[command(flatten)]
        #[serde(flatten)]
        cases: CaseArgs,
    },
    /// Random first-row/column words congruent to 1 against the relative group.
    KernelTest {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Conjugates of se_ij(ab), a, b ∈ I, against the group generated by I.
    SquareIdealTest {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Telescoping splice of a polynomial family along a unit partition.
    SpliceDemo {
        #[arg(long, value_delimiter = ',', default_value = "zmod:5,zmod:9")]
        ring: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        k: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        seeds: u64,
    },
}

#[derive(Args, Debug, Serialize)]
pub struct CaseArgs {
    /// Case "ring,size[,ideal]"; repeatable.
    #[arg(long = "case")]
    pub cases: Vec<String>,
    #[arg(long)]
    pub ring: Option<String>,
    #[arg(long)]
    pub size: Option<usize>,
    #[arg(long)]
    pub ideal: Option<String>,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyRelations { .. } => "verify-relations",
            Command::Dilate { .. } => "dilate",
            Command::Decompose { .. } => "decompose",
            Command::ReduceForm { .. } => "reduce-form",
            Command::Orbits { .. } => "orbits",
            Command::OrbitEquality { .. } => "orbit-equality",
            Command::Transitivity { .. } => "transitivity",
            Command::KernelTest { .. } => "kernel-test",
            Command::SquareIdealTest { .. } => "square-ideal-test",
            Command::SpliceDemo { .. } => "splice-demo",
        }
    }
}

/// Failure before a report could be produced.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<clap::Error> for CliError {
    fn from(e: clap::Error) -> Self {
        use clap::error::ErrorKind;
        let code = match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
            _ => 2,
        };
        CliError { code, message: e.render().to_string() }
    }
}

fn usage_error(e: Error) -> CliError {
    CliError { code: 2, message: format!("error: {e}") }
}

/// Parse `argv` (program name first) and run it, returning the report.
pub fn run_report<I, T>(argv: I) -> Result<RunReport, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    match cli.global.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| CliError { code: 2, message: e.to_string() })?;
            pool.install(|| execute(&cli))
        }
        None => execute(&cli),
    }
}

fn parameters(cli: &Cli) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("global".into(), serde_json::to_value(&cli.global).expect("global serializes"));
    let args = match serde_json::to_value(&cli.command).expect("command serializes") {
        Value::Object(mut m) => m.remove(cli.command.name()).unwrap_or(Value::Null),
        v => v,
    };
    p.insert("args".into(), args);
    p
}

pub fn execute(cli: &Cli) -> Result<RunReport, CliError> {
    let t0 = Instant::now();
    let mut report = RunReport::new(cli.command.name(), parameters(cli));
    match commands::dispatch(cli, &mut report) {
        Ok(()) => {}
        Err(e @ (Error::Parse(_) | Error::InvalidRing(_) | Error::Index(_) | Error::Size(_))) => {
            return Err(usage_error(e));
        }
        Err(e) => report.push(Outcome::new("error", false, Value::String(e.to_string()))),
    }
    report.finish(t0);
    Ok(report)
}

/// Full CLI behaviour; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let out = Cli::try_parse_from(&argv).ok().and_then(|c| c.global.out);
    match run_report(argv) {
        Ok(report) => {
            let text = report.to_json();
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text + "\n") {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 2;
                    }
                }
                None => println!("{text}"),
            }
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if e.code == 0 {
                print!("{}", e.message);
            } else {
                eprint!("{}", e.message);
                if !e.message.ends_with('\n') {
                    eprintln!();
                }
            }
            e.code
        }
    }
}
