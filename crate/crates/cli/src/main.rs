use std::fs;
use std::process::ExitCode;

use anchored::checker::{check_all_relations, check_equivariance, check_relations, Backend, Family, Report};
use anchored::groth::{parse_fusion_data, preset};
use anchored::tangle::{equivalent, normalize, parse_expr, Verdict};
use anchored::tl::{apply_map, eval_expr, parse_inputs};
use anchored::RibbonBraid;
use clap::{Args, Parser, Subcommand, ValueEnum};

const GRAMMAR: &str = "\
expr  := u | (id N) | (cap I N) | (cup I N) | (p I J N) | (comp SLOT expr expr) | (act expr BRAID)
BRAID := rb(N)[ (e K | e' K | t K | t' K)* ]";

#[derive(Parser)]
#[command(name = "anchored", version, about = "Anchored planar tangles, ribbon braids and box-object tables", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the standard form of a tangle expression.
    Normalize { expr: String },
    /// Evaluate an expression in the Temperley-Lieb backend.
    Eval {
        expr: String,
        /// Input vectors, one term per line: `slot: partners = coefficient`.
        #[arg(long)]
        inputs: Option<String>,
    },
    /// Search for a chain of moves between two expressions.
    Equiv {
        left: String,
        right: String,
        #[arg(long, default_value_t = 6)]
        budget: usize,
    },
    /// Run the relation or braid equivariance checker.
    Check(CheckArgs),
    /// Print the box-object table of a preset or a fusion-data file.
    Box(BoxArgs),
    /// Ribbon braid arithmetic.
    Braid {
        #[command(subcommand)]
        op: BraidOp,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Relations,
    Braid,
}

#[derive(Args)]
struct CheckArgs {
    suite: Suite,
    #[arg(long, default_value = "tl")]
    backend: String,
    /// Largest box size for relations, largest strand count for braids.
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Restrict relations to one family (A1..A7, C1..C9).
    #[arg(long)]
    family: Option<String>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BoxArgs {
    /// Preset name such as `e7x`, `tlj:5` or `ng:3`.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    preset: Option<String>,
    #[arg(long)]
    file: Option<String>,
    #[arg(long, default_value_t = 10)]
    max_k: usize,
}

#[derive(Subcommand)]
enum BraidOp {
    /// Exit 0 if the braids are equal, 1 otherwise.
    Eq { left: String, right: String },
    /// Product of the braids, left to right.
    Mul {
        #[arg(required = true, num_args = 1..)]
        braids: Vec<String>,
    },
    /// Cable `inner` into strand `slot` of `outer`.
    Compose { outer: String, slot: usize, inner: String },
}

/// Exit status 1: the command ran but the answer is negative.
struct Negative;

type Outcome = Result<Result<(), Negative>, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Negative)) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn read(path: &str) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
}

fn braid(text: &str) -> Result<RibbonBraid, String> {
    text.parse().map_err(|e| format!("{text}: {e}"))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Normalize { expr } => {
            let e = parse_expr(&expr).map_err(err)?;
            println!("{}", normalize(&e).map_err(err)?);
        }
        Command::Eval { expr, inputs } => {
            let e = parse_expr(&expr).map_err(err)?;
            let map = eval_expr(&e).map_err(err)?;
            match inputs {
                None => print!("{}", map.to_tsv()),
                Some(path) => {
                    let args = parse_inputs(&read(&path)?, map.domain()).map_err(err)?;
                    print!("{}", apply_map(&map, &args).map_err(err)?);
                }
            }
        }
        Command::Equiv { left, right, budget } => {
            let a = parse_expr(&left).map_err(err)?;
            let b = parse_expr(&right).map_err(err)?;
            let v = equivalent(&a, &b, budget).map_err(err)?;
            println!("{v}");
            if v == Verdict::NotProven {
                return Ok(Err(Negative));
            }
        }
        Command::Check(args) => return check(args),
        Command::Box(args) => {
            let data = match (&args.preset, &args.file) {
                (_, Some(path)) => parse_fusion_data(&read(path)?).map_err(err)?,
                (Some(name), None) => preset(name).map_err(err)?,
                (None, None) => return Err("give a preset name or --file".into()),
            };
            print!("{}", data.box_table_tsv(args.max_k));
        }
        Command::Braid { op } => match op {
            BraidOp::Eq { left, right } => {
                let equal = braid(&left)? == braid(&right)?;
                println!("{}", if equal { "equal" } else { "not equal" });
                if !equal {
                    return Ok(Err(Negative));
                }
            }
            BraidOp::Mul { braids } => {
                let mut acc = braid(&braids[0])?;
                for b in &braids[1..] {
                    acc = acc.multiply(&braid(b)?).map_err(err)?;
                }
                println!("{acc}");
            }
            BraidOp::Compose { outer, slot, inner } => {
                println!("{}", braid(&outer)?.compose_at(slot, &braid(&inner)?).map_err(err)?);
            }
        },
    }
    Ok(Ok(()))
}

fn check(args: CheckArgs) -> Outcome {
    let report: Report = match args.suite {
        Suite::Relations => {
            let backend: Backend = args.backend.parse().map_err(err)?;
            match &args.family {
                Some(f) => check_relations(backend, f.parse::<Family>().map_err(err)?, args.max_n),
                None => check_all_relations(backend, args.max_n),
            }
            .map_err(err)?
        }
        Suite::Braid => check_equivariance(args.max_n, args.trials, args.seed).map_err(err)?,
    };
    print!("{}", report.to_tsv());
    eprintln!(
        "{} checked, {} failed in {:.3} s",
        report.entries.len(),
        report.failures(),
        report.elapsed.as_secs_f64()
    );
    if report.passed() {
        Ok(Ok(()))
    } else {
        Ok(Err(Negative))
    }
}
