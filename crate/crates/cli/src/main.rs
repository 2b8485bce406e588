mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use report::{RunReport, Verdict};

#[derive(Parser, Debug)]
#[command(name = "cshuffle", version, about = "Linear and cyclic shuffle-compatibility toolkit")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Global {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub json: bool,
    /// Size bound for exhaustive checks.
    #[arg(long, global = true, value_name = "INT")]
    pub max_n: Option<usize>,
    /// Truncation order for power series.
    #[arg(long, global = true, value_name = "INT")]
    pub trunc: Option<usize>,
    /// Seed for randomized spot-checks.
    #[arg(long, global = true, value_name = "INT")]
    pub seed: Option<u64>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(untagged)]
pub enum Command {
    /// Evaluate a linear statistic on a permutation.
    Eval(StatPerm),
    /// Evaluate a cyclic statistic on the class of a permutation.
    Ceval(StatPerm),
    /// List the shuffles of two disjoint permutations.
    Shuffle(ShuffleArgs),
    /// List the cyclic shuffles of two disjoint cyclic permutations.
    Cshuffle(Pair),
    /// Distribution of a statistic over a (cyclic) shuffle set.
    Distribute(DistributeArgs),
    /// Exhaustive shuffle-compatibility check of a linear statistic.
    CheckSc(StatArg),
    /// Exhaustive cyclic shuffle-compatibility check.
    CheckCsc(CheckCscArgs),
    /// Equivalence (or refinement) of two cyclic statistics.
    CheckEquiv(EquivArgs),
    /// f-equivalence of two linear statistics under a symmetry.
    CheckFEquiv(FEquivArgs),
    /// Replay a stored counterexample, or `all` of them.
    Counterexample(NameArg),
    /// Check the lifting conditions for a cyclic and a linear statistic.
    LiftingCheck(LiftingArgs),
    /// Verify a named identity up to a size bound.
    VerifyTheorem(TheoremArgs),
    /// Dimension of a cyclic shuffle algebra in one degree.
    Dims(DimsArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Eval(_) => "eval",
            Command::Ceval(_) => "ceval",
            Command::Shuffle(_) => "shuffle",
            Command::Cshuffle(_) => "cshuffle",
            Command::Distribute(_) => "distribute",
            Command::CheckSc(_) => "check-sc",
            Command::CheckCsc(_) => "check-csc",
            Command::CheckEquiv(_) => "check-equiv",
            Command::CheckFEquiv(_) => "check-f-equiv",
            Command::Counterexample(_) => "counterexample",
            Command::LiftingCheck(_) => "lifting-check",
            Command::VerifyTheorem(_) => "verify-theorem",
            Command::Dims(_) => "dims",
        }
    }
}

#[derive(Args, Debug, Serialize)]
pub struct StatPerm {
    #[arg(long)]
    pub stat: String,
    #[arg(long)]
    pub perm: String,
}

#[derive(Args, Debug, Serialize)]
pub struct Pair {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
}

#[derive(Args, Debug, Serialize)]
pub struct ShuffleArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    /// Keep only shuffles with this many descents.
    #[arg(long, allow_negative_numbers = true)]
    pub des: Option<i64>,
}

#[derive(Args, Debug, Serialize)]
pub struct DistributeArgs {
    #[arg(long)]
    pub stat: String,
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    /// Use cyclic shuffles and a cyclic statistic.
    #[arg(long)]
    pub cyclic: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct StatArg {
    #[arg(long)]
    pub stat: String,
}

#[derive(Args, Debug, Serialize)]
pub struct CheckCscArgs {
    #[arg(long)]
    pub stat: String,
    /// Check only these shapes, written `m,n`; overrides --max-n.
    #[arg(long, value_name = "M,N")]
    pub shape: Vec<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct EquivArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    /// Only check that `a` refines `b`.
    #[arg(long)]
    pub refines: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct FEquivArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    /// Symmetry: r, c or rc.
    #[arg(long)]
    pub f: String,
}

#[derive(Args, Debug, Serialize)]
pub struct NameArg {
    #[arg(long)]
    pub name: String,
}

#[derive(Args, Debug, Serialize)]
pub struct LiftingArgs {
    /// Cyclic statistic.
    #[arg(long)]
    pub cstat: String,
    /// Linear statistic.
    #[arg(long)]
    pub stat: String,
    #[arg(long, default_value_t = 6)]
    pub n: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct TheoremArgs {
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub max_size: Option<usize>,
    /// Random pairs to test beyond the exhaustive bound.
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
    /// Total length of each random pair; defaults to max size + 2.
    #[arg(long)]
    pub sample_size: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
pub struct DimsArgs {
    #[arg(long)]
    pub stat: String,
    #[arg(long)]
    pub n: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = commands::run(&cli.command, &cli.global);
    let (verdict, payload) = match outcome {
        Ok((ok, payload)) => (Verdict::from_bool(ok), payload),
        Err(e) => (Verdict::Error, json!({"code": e.code(), "message": e.to_string()})),
    };
    let mut inputs = serde_json::to_value(&cli.command).expect("arguments serialize");
    if let (Some(map), Ok(serde_json::Value::Object(g))) = (inputs.as_object_mut(), serde_json::to_value(&cli.global)) {
        map.extend(g);
    }
    let report = RunReport {
        command: cli.command.name().to_string(),
        inputs,
        verdict,
        payload,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    if cli.global.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_table());
    }
    ExitCode::from(verdict.exit_code() as u8)
}
