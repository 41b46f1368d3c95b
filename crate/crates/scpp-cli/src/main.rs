//! Command-line front end for the `scpp` library.
//!
//! One subcommand per public pipeline, text wire formats on stdout, and a
//! `--json` flag for machine-readable structured output. Exit codes follow
//! a fixed discipline: 0 success, 1 violated promise or exhausted machine
//! run, 2 malformed input, 3 internal invariant breach or completion cap.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use scpp::bench::{scaling_in_degree, scaling_in_length};
use scpp::braid::{braid_equal, rgnf, BraidWord};
use scpp::braid_scpp::{
    probabilistic_scpp_search, pure_braid_factorization, scpp_permutation_braids,
};
use scpp::commutator::scpp_solve;
use scpp::perm::{cycle_decomposition, word_to_permutation, GenWord};
use scpp::rewrite::{canonical_form_sn, knuth_bendix_complete, sn_presentation, RewriteSystem};
use scpp::turing::{adder_machine, run as run_machine, TuringMachine};
use scpp::Error;

#[derive(Parser)]
#[command(
    name = "scpp",
    version,
    about = "Constructive commutator decompositions in symmetric and braid groups",
    long_about = "Constructive commutator decompositions in symmetric and braid groups.\n\
                  Words are read from the positional argument or, when omitted, from stdin.\n\
                  Degrees and strand counts are always explicit: words do not self-describe n."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Permutation pipelines over S_n.
    #[command(subcommand)]
    Perm(PermCommand),
    /// Braid pipelines over B_n.
    #[command(subcommand)]
    Braid(BraidCommand),
    /// String rewriting over the presentation of S_n.
    #[command(subcommand)]
    Rewrite(RewriteCommand),
    /// The Turing-machine interpreter.
    #[command(subcommand)]
    Tm(TmCommand),
    /// Operation-count scaling measurements.
    #[command(subcommand)]
    Bench(BenchCommand),
}

#[derive(Subcommand)]
enum PermCommand {
    /// Express an even permutation as a commutator x y x⁻¹ y⁻¹.
    ///
    /// Prints the four words of the expression, each terminated by 0, the
    /// whole output by an extra 0. Read left to right, apply right to left.
    Solve {
        /// Degree n of the symmetric group.
        #[arg(long)]
        degree: usize,
        /// Input word; letters 1..n-1, space-separated, `e` for empty.
        word: Option<String>,
        /// Emit structured JSON, including the dispatch trace.
        #[arg(long)]
        json: bool,
    },
    /// Disjoint cycle decomposition of the permutation of a word.
    Decompose {
        /// Degree n of the symmetric group.
        #[arg(long)]
        degree: usize,
        /// Input word; letters 1..n-1, space-separated, `e` for empty.
        word: Option<String>,
        /// Emit structured JSON.
        #[arg(long)]
        json: bool,
    },
    /// Canonical (ShortLex-least) word of the permutation of a word.
    Canonical {
        /// Degree n of the symmetric group.
        #[arg(long)]
        degree: usize,
        /// Input word; letters 1..n-1, space-separated, `e` for empty.
        word: Option<String>,
        /// Emit structured JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Right-greedy normal form of a braid word.
    Rgnf {
        /// Number of strands n of the braid group.
        #[arg(long)]
        strands: usize,
        /// Signed braid word, space-separated, `e` for empty.
        word: Option<String>,
        /// Emit structured JSON.
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two braid words denote the same braid.
    Equal {
        /// Number of strands n of the braid group.
        #[arg(long)]
        strands: usize,
        /// First braid word.
        left: String,
        /// Second braid word.
        right: String,
        /// Emit structured JSON.
        #[arg(long)]
        json: bool,
    },
    /// Recognize a commutator of permutation braids; prints `0` if none.
    ScppK {
        /// Number of strands n of the braid group.
        #[arg(long)]
        strands: usize,
        /// Signed braid word, space-separated, `e` for empty.
        word: Option<String>,
        /// Emit structured JSON.
        #[arg(long)]
        json: bool,
    },
    /// Factor a braid with even projection as pure · commutator.
    ///
    /// Prints the pure part on the first line and the commutator witness
    /// pair `x | y` on the second.
    Factor {
        /// Number of strands n of the braid group.
        #[arg(long)]
        strands: usize,
        /// Signed braid word, space-separated, `e` for empty.
        word: Option<String>,
        /// Emit structured JSON.
        #[arg(long)]
        json: bool,
    },
    /// Probabilistic commutator search; prints the milestone trace.
    Search {
        /// Number of strands n of the braid group.
        #[arg(long)]
        strands: usize,
        /// Number of budget rounds (the budget doubles each round).
        #[arg(long, default_value_t = 8)]
        budget: u32,
        /// RNG seed; fixed seed means byte-identical trace.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Signed braid word, space-separated, `e` for empty.
        word: Option<String>,
        /// Emit the trace as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RewriteCommand {
    /// Knuth–Bendix completion of a rewrite system.
    ///
    /// Without --rules, completes the standard presentation of S_n and
    /// prints the confluent system, one `lhs -> rhs` rule per line.
    Complete {
        /// Degree n of the symmetric group the rules live over.
        #[arg(long)]
        degree: usize,
        /// Rule file to complete instead of the standard presentation.
        #[arg(long)]
        rules: Option<String>,
        /// Emit structured JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum TmCommand {
    /// Run a machine on an input string.
    ///
    /// Without --machine, runs the built-in one-digit binary adder.
    Run {
        /// Machine description file; defaults to the built-in adder.
        #[arg(long)]
        machine: Option<String>,
        /// Maximum number of transition invocations.
        #[arg(long, default_value_t = 10_000)]
        step_limit: u64,
        /// Input symbols (whitespace ignored); read from stdin if omitted.
        input: Option<String>,
        /// Emit structured JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Measure operation-count scaling of the commutator solver.
    ///
    /// Exactly one of --n-list (vary the degree at a fixed word) or
    /// --k-list (vary the word length at a fixed degree) must be given.
    /// Prints a table of (parameter, input length, operation count, wall
    /// time) and the fitted log-log slope of operations against the
    /// parameter.
    Scaling {
        /// Operation to measure; only `scpp` is available.
        #[arg(long, default_value = "scpp")]
        op: String,
        /// Comma-separated degrees to solve the fixed word at.
        #[arg(long, value_delimiter = ',')]
        n_list: Option<Vec<usize>>,
        /// Comma-separated word lengths to solve at the fixed degree.
        #[arg(long, value_delimiter = ',')]
        k_list: Option<Vec<usize>>,
        /// Fixed word for --n-list runs.
        #[arg(long, default_value = "6 4 1 2")]
        word: String,
        /// Fixed degree for --k-list runs.
        #[arg(long, default_value_t = 16)]
        degree: usize,
        /// Repetitions per configuration (averaged).
        #[arg(long, default_value_t = 3)]
        reps: u32,
        /// RNG seed for the random words of --k-list runs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the table as JSON.
        #[arg(long)]
        json: bool,
    },
}

/// Everything the handlers can fail with: library errors keep their exit
/// classification, I/O problems count as malformed input.
enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type CliResult = Result<(), CliError>;

/// The positional word, or stdin when omitted.
fn word_or_stdin(word: Option<String>) -> Result<String, CliError> {
    match word {
        Some(w) => Ok(w),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn parse_gen_word(degree: usize, text: &str) -> Result<GenWord, CliError> {
    Ok(GenWord::parse(degree, text.trim())?)
}

fn parse_braid_word(strands: usize, text: &str) -> Result<BraidWord, CliError> {
    Ok(BraidWord::parse(strands, text.trim())?)
}

fn run_perm(cmd: PermCommand) -> CliResult {
    match cmd {
        PermCommand::Solve { degree, word, json } => {
            let text = word_or_stdin(word)?;
            let w = parse_gen_word(degree, &text)?;
            let sigma = word_to_permutation(&w);
            let sol = scpp_solve(&sigma)?;
            if json {
                let payload = json!({
                    "degree": degree,
                    "input": w.to_string(),
                    "x": sol.x.to_string(),
                    "y": sol.y.to_string(),
                    "output": sol.to_string(),
                    "c1": sol.c1.entries(),
                    "c2": sol.c2.entries(),
                    "c3": sol.c3.entries(),
                    "tau": sol.tau.to_string(),
                    "product_c1": sol.product.c1.to_string(),
                    "product_c2": sol.product.c2.to_string(),
                    "trace": sol.product.trace,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&payload).expect("valid json")
                );
            } else {
                println!("{sol}");
            }
            Ok(())
        }
        PermCommand::Decompose { degree, word, json } => {
            let text = word_or_stdin(word)?;
            let w = parse_gen_word(degree, &text)?;
            let d = cycle_decomposition(&word_to_permutation(&w));
            if json {
                let payload = json!({
                    "degree": degree,
                    "input": w.to_string(),
                    "cycles": d.to_string(),
                    "cycle_lists": d.cycles(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&payload).expect("valid json")
                );
            } else {
                println!("{d}");
            }
            Ok(())
        }
        PermCommand::Canonical { degree, word, json } => {
            let text = word_or_stdin(word)?;
            let w = parse_gen_word(degree, &text)?;
            let canonical = canonical_form_sn(&w)?;
            if json {
                let payload = json!({
                    "degree": degree,
                    "input": w.to_string(),
                    "canonical": canonical.to_string(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&payload).expect("valid json")
                );
            } else {
                println!("{canonical}");
            }
            Ok(())
        }
    }
}

fn run_braid(cmd: BraidCommand) -> CliResult {
    match cmd {
        BraidCommand::Rgnf {
            strands,
            word,
            json,
        } => {
            let text = word_or_stdin(word)?;
            let b = parse_braid_word(strands, &text)?;
            let nf = rgnf(&b)?;
            if json {
                let payload = json!({
                    "strands": strands,
                    "input": b.to_string(),
                    "rendered": nf.to_string(),
                    "factors": nf.factors().iter().map(|f| f.word().to_string()).collect::<Vec<_>>(),
                    "omega_power": nf.omega_power(),
                    "canonical_length": nf.canonical_length(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&payload).expect("valid json")
                );
            } else {
                println!("{nf}");
            }
            Ok(())
        }
        BraidCommand::Equal {
            strands,
            left,
            right,
            json,
        } => {
            let a = parse_braid_word(strands, &left)?;
            let b = parse_braid_word(strands, &right)?;
            let equal = braid_equal(&a, &b)?;
            if json {
                let payload = json!({
                    "strands": strands,
                    "left": a.to_string(),
                    "right": b.to_string(),
                    "equal": equal,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&payload).expect("valid json")
                );
            } else if equal {
                println!("equal");
            } else {
                println!("not equal");
            }
            Ok(())
        }
        BraidCommand::ScppK {
            strands,
            word,
            json,
        } => {
            let text = word_or_stdin(word)?;
            let b = parse_braid_word(strands, &text)?;
            let candidate = scpp_permutation_braids(&b)?;
            if json {
                let payload = json!({
                    "strands": strands,
                    "input": b.to_string(),
                    "candidate": candidate.as_ref().map(|c| json!({
                        "x": c.x().to_string(),
                        "y": c.y().to_string(),
                    })),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&payload).expect("valid json")
                );
            } else {
                match candidate {
                    Some(c) => println!("{c}"),
                    None => println!("0"),
                }
            }
            Ok(())
        }
        BraidCommand::Factor {
            strands,
            word,
            json,
        } => {
            let text = word_or_stdin(word)?;
            let b = parse_braid_word(strands, &text)?;
            let (pure, candidate) = pure_braid_factorization(&b)?;
            if json {
                let payload = json!({
                    "strands": strands,
                    "input": b.to_string(),
                    "pure": pure.to_string(),
                    "x": candidate.x().to_string(),
                    "y": candidate.y().to_string(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&payload).expect("valid json")
                );
            } else {
                println!("{pure}");
                println!("{candidate}");
            }
            Ok(())
        }
        BraidCommand::Search {
            strands,
            budget,
            seed,
            word,
            json,
        } => {
            let text = word_or_stdin(word)?;
            let b = parse_braid_word(strands, &text)?;
            let trace = probabilistic_scpp_search(&b, budget, seed)?;
            if json {
                println!("{}", trace.to_json());
            } else {
                println!("{trace}");
            }
            Ok(())
        }
    }
}

fn run_rewrite(cmd: RewriteCommand) -> CliResult {
    match cmd {
        RewriteCommand::Complete {
            degree,
            rules,
            json,
        } => {
            let system = match rules {
                Some(path) => RewriteSystem::parse(degree, &fs::read_to_string(path)?)?,
                None => sn_presentation(degree)?,
            };
            let complete = knuth_bendix_complete(&system)?;
            if json {
                let payload = json!({
                    "degree": degree,
                    "rules": complete.rules().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&payload).expect("valid json")
                );
            } else {
                println!("{complete}");
            }
            Ok(())
        }
    }
}

fn run_tm(cmd: TmCommand) -> CliResult {
    match cmd {
        TmCommand::Run {
            machine,
            step_limit,
            input,
            json,
        } => {
            let machine = match machine {
                Some(path) => TuringMachine::parse(&fs::read_to_string(path)?)?,
                None => adder_machine(),
            };
            let text = word_or_stdin(input)?;
            let (tape, steps) = run_machine(&machine, text.trim(), step_limit)?;
            if json {
                let payload = json!({ "tape": tape, "steps": steps });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&payload).expect("valid json")
                );
            } else {
                println!("{tape}");
                println!("{steps} steps");
            }
            Ok(())
        }
    }
}

fn run_bench(cmd: BenchCommand) -> CliResult {
    match cmd {
        BenchCommand::Scaling {
            op,
            n_list,
            k_list,
            word,
            degree,
            reps,
            seed,
            json,
        } => {
            if op != "scpp" {
                return Err(CliError::Lib(Error::InvalidInput(format!(
                    "unknown operation {op:?}; only `scpp` can be measured"
                ))));
            }
            let report = match (n_list, k_list) {
                (Some(ns), None) => {
                    let letters: Vec<usize> =
                        GenWord::parse(usize::MAX, word.trim())?.letters().to_vec();
                    scaling_in_degree(&ns, &letters, reps)?
                }
                (None, Some(ks)) => scaling_in_length(degree, &ks, reps, seed)?,
                _ => {
                    return Err(CliError::Lib(Error::InvalidInput(
                        "give exactly one of --n-list and --k-list".into(),
                    )))
                }
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("valid json")
                );
            } else {
                print!("{}", report.render());
            }
            Ok(())
        }
    }
}

fn dispatch(cli: Cli) -> CliResult {
    match cli.command {
        Command::Perm(cmd) => run_perm(cmd),
        Command::Braid(cmd) => run_braid(cmd),
        Command::Rewrite(cmd) => run_rewrite(cmd),
        Command::Tm(cmd) => run_tm(cmd),
        Command::Bench(cmd) => run_bench(cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::InvalidInput(_) | Error::Parse(_) => 2,
                Error::PromiseViolation(_) | Error::StepLimit(_) | Error::MachineStuck { .. } => 1,
                Error::CompletionCap(_) | Error::Internal(_) => 3,
            };
            ExitCode::from(code)
        }
    }
}
