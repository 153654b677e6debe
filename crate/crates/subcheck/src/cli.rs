//! The `subcheck` command line: `check`, `gen`, and `bench`.
//!
//! Exit codes for `check`: 0 the relation is substitutable, 1 it is not,
//! 2 the input could not be read or parsed (also invalid generator specs),
//! 3 the search and the brute-force oracle disagree.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use subcheck_core::subtest::{SearchMode, SearchOptions};
use subcheck_core::{
    brute_force_test, generate, parse_preference_list, Family, GenSpec, ORACLE_DEFAULT_MAX_U,
};

use crate::bench::{render_bench_text, run_bench, BenchConfig};
use crate::parallel::test_substitutability_threaded;
use crate::report::{build_check_report, render_text, to_json};

pub const EXIT_SUBSTITUTABLE: u8 = 0;
pub const EXIT_NOT_SUBSTITUTABLE: u8 = 1;
pub const EXIT_BAD_INPUT: u8 = 2;
pub const EXIT_ORACLE_DISAGREEMENT: u8 = 3;

/// Default for `--threads` when the flag is absent.
pub const THREADS_ENV: &str = "SUBCHECK_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "subcheck",
    version,
    about = "Test whether ranked set preferences (with ties) are substitutable",
    long_about = "Decides whether a preference relation over subsets, written as a \
                  ranked list of acceptable sets, is substitutable, and reports a \
                  machine-checkable violation witness when it is not."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a preference-list file
    Check(CheckArgs),
    /// Generate seeded random instances in the list format
    Gen(GenArgs),
    /// Measure how the check scales with instance size
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Input file; "-" reads standard input
    pub path: PathBuf,
    /// Enumerate every restricted-form witness instead of stopping at the first
    #[arg(long)]
    pub all: bool,
    /// Cross-check the verdict against the exhaustive oracle (universes of at most 12)
    #[arg(long)]
    pub oracle: bool,
    /// Emit the report as JSON on stdout
    #[arg(long)]
    pub json: bool,
    /// Worker threads for the search [default: $SUBCHECK_THREADS or 1]
    #[arg(long)]
    pub threads: Option<usize>,
    /// Omit wall-clock timing from the report, making output byte-reproducible
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Seed of the first instance; instance i uses seed + i
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Universe size
    #[arg(long)]
    pub u: usize,
    /// Number of non-empty acceptable sets ({} is always appended)
    #[arg(long)]
    pub ell: u64,
    /// Largest allowed indifference class
    #[arg(long, default_value_t = 3)]
    pub max_class: usize,
    #[arg(long, value_enum, default_value_t = FamilyArg::UniformWeak)]
    pub family: FamilyArg,
    /// How many instances to emit
    #[arg(long, default_value_t = 1)]
    pub count: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    /// Uniformly sampled sets in random classes
    UniformWeak,
    /// Uniformly sampled sets, singleton classes
    Strict,
    /// Additive utilities under a capacity cap (--ell and --max-class ignored)
    AdditiveCapacity,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Family {
        match arg {
            FamilyArg::UniformWeak => Family::UniformWeak,
            FamilyArg::Strict => Family::Strict,
            FamilyArg::AdditiveCapacity => Family::AdditiveCapacity,
        }
    }
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Universe sizes, comma separated
    #[arg(long, value_delimiter = ',', default_value = "16")]
    pub u_range: Vec<usize>,
    /// Acceptable-set counts, comma separated
    #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
    pub ell_range: Vec<u64>,
    /// Largest-class sizes, comma separated
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub s_range: Vec<usize>,
    /// Timed repetitions per point (median reported)
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    /// Emit the scaling report as JSON
    #[arg(long)]
    pub json: bool,
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Gen(args) => cmd_gen(&args),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn read_input(path: &PathBuf) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
    }
}

fn resolve_threads(flag: Option<usize>) -> Result<usize, String> {
    if let Some(n) = flag {
        return Ok(n.max(1));
    }
    match std::env::var(THREADS_ENV) {
        Ok(value) => value
            .trim()
            .parse::<usize>()
            .map(|n| n.max(1))
            .map_err(|_| format!("{THREADS_ENV} is not a number: {value:?}")),
        Err(_) => Ok(1),
    }
}

fn cmd_check(args: &CheckArgs) -> u8 {
    let text = match read_input(&args.path) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("subcheck: cannot read {}: {err}", args.path.display());
            return EXIT_BAD_INPUT;
        }
    };
    let pref = match parse_preference_list(&text) {
        Ok(pref) => pref,
        Err(err) => {
            eprintln!("subcheck: {}: {err}", args.path.display());
            return EXIT_BAD_INPUT;
        }
    };
    let threads = match resolve_threads(args.threads) {
        Ok(n) => n,
        Err(err) => {
            eprintln!("subcheck: {err}");
            return EXIT_BAD_INPUT;
        }
    };

    let options = SearchOptions {
        mode: if args.all {
            SearchMode::EnumerateAll
        } else {
            SearchMode::FirstWitness
        },
        ..SearchOptions::default()
    };
    let verdict = test_substitutability_threaded(&pref, &options, threads);

    let oracle_verdict = if args.oracle {
        if pref.universe_size() <= ORACLE_DEFAULT_MAX_U {
            Some(
                brute_force_test(&pref, ORACLE_DEFAULT_MAX_U)
                    .expect("universe size checked against the cap"),
            )
        } else {
            eprintln!(
                "subcheck: oracle skipped: universe of {} exceeds the exhaustive cap of {}",
                pref.universe_size(),
                ORACLE_DEFAULT_MAX_U
            );
            None
        }
    } else {
        None
    };

    let report = build_check_report(
        &pref,
        &verdict,
        oracle_verdict.as_ref(),
        args.oracle,
        !args.no_timing,
    );
    if args.json {
        println!("{}", to_json(&report));
    } else {
        print!("{}", render_text(&report));
    }

    if report.oracle.is_some_and(|o| !o.agrees) {
        eprintln!("subcheck: search and oracle disagree; this is a bug");
        return EXIT_ORACLE_DISAGREEMENT;
    }
    if report.substitutable {
        EXIT_SUBSTITUTABLE
    } else {
        EXIT_NOT_SUBSTITUTABLE
    }
}

fn cmd_gen(args: &GenArgs) -> u8 {
    for i in 0..args.count {
        let spec = GenSpec {
            seed: args.seed.wrapping_add(i as u64),
            universe_size: args.u,
            target_len: args.ell,
            max_class: args.max_class,
            family: args.family.into(),
        };
        let pref = match generate(&spec) {
            Ok(pref) => pref,
            Err(err) => {
                eprintln!("subcheck: {err}");
                return EXIT_BAD_INPUT;
            }
        };
        if args.count > 1 {
            if i > 0 {
                println!();
            }
            println!("# seed {}", spec.seed);
        }
        println!("{pref}");
    }
    EXIT_SUBSTITUTABLE
}

fn cmd_bench(args: &BenchArgs) -> u8 {
    let config = BenchConfig {
        u_values: args.u_range.clone(),
        ell_values: args.ell_range.clone(),
        s_values: args.s_range.clone(),
        reps: args.reps,
    };
    match run_bench(&config) {
        Ok(report) => {
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("bench report serializes")
                );
            } else {
                print!("{}", render_bench_text(&report));
            }
            EXIT_SUBSTITUTABLE
        }
        Err(err) => {
            eprintln!("subcheck: {err}");
            EXIT_BAD_INPUT
        }
    }
}
