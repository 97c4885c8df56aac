//! Command-line front end: solve tables, zero-sum scores, play
//! lines, discrepancy tables, parameter scans, law checkers, oracle
//! verification and reproducible sampling.
//!
//! Exit codes: 0 clean, 1 counterexample/violation found, 2 usage error,
//! 3 I/O error.

mod check_cmd;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cumsub::analysis::{scan_three_action, scan_two_action, Criterion};
use cumsub::{
    naive_pspe_with_budget, play_line, solve, zero_sum_solve, zs_play_line, Convention,
    SubtractionSet, NAIVE_DEFAULT_BUDGET,
};

use render::Meta;

/// Anything larger would allocate unreasonable tables.
const HMAX_LIMIT: u64 = 5_000_000;

#[derive(Parser)]
#[command(
    name = "cumsub",
    version,
    about = "Cumulative subtraction games: equilibrium solver and analysis toolkit"
)]
struct Cli {
    /// Worker threads for scans and sampled checks (default: $CUMSUB_JOBS,
    /// then all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Compare {
    /// Friendly-vs-friendly against antagonistic-vs-antagonistic
    FvfAva,
    /// Antagonistic self-interest against the zero-sum scoring game
    AvaZs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    /// The spreads o1-o2 differ
    DiffOfDiff,
    /// Any outcome component differs
    Componentwise,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Criterion {
        match c {
            CriterionArg::DiffOfDiff => Criterion::DiffOfDiff,
            CriterionArg::Componentwise => Criterion::Componentwise,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Per-heap equilibrium outcomes, refined move sets and deltas vs FvF
    Solve {
        /// Comma-separated distinct positive actions, e.g. 4,5,9
        #[arg(long, value_parser = parse_set_arg)]
        set: SubtractionSet,
        #[arg(long, default_value_t = 300)]
        hmax: u64,
        /// Subset of conventions to render (deltas stay relative to FvF)
        #[arg(long, value_delimiter = ',', value_parser = parse_convention)]
        conventions: Option<Vec<Convention>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Optimal zero-sum scores per heap
    Zs {
        #[arg(long, value_parser = parse_set_arg)]
        set: SubtractionSet,
        #[arg(long, default_value_t = 300)]
        hmax: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Principal line of play from one heap
    Line {
        #[arg(long, value_parser = parse_set_arg)]
        set: SubtractionSet,
        #[arg(long)]
        heap: u64,
        #[arg(long, value_parser = parse_convention, conflicts_with = "zero_sum")]
        convention: Option<Convention>,
        /// Trace the zero-sum scoring game instead of a convention
        #[arg(long)]
        zero_sum: bool,
    },
    /// Per-heap outcome deltas between two conventions
    Diff {
        #[arg(long, value_parser = parse_set_arg)]
        set: SubtractionSet,
        #[arg(long, value_parser = parse_convention, default_value = "FvF")]
        base: Convention,
        #[arg(long, value_parser = parse_convention, default_value = "AvA")]
        other: Convention,
        #[arg(long, default_value_t = 300)]
        hmax: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep all sets of a given arity for discrepancies
    Scan {
        /// Number of actions per set: 2 or 3
        #[arg(long)]
        arity: u8,
        #[arg(long, value_enum)]
        compare: Compare,
        #[arg(long, default_value_t = 25)]
        smax: u64,
        #[arg(long, default_value_t = 300)]
        hmax: u64,
        /// Discrepancy notion for fvf-ava scans (ava-zs has its own)
        #[arg(long, value_enum, default_value_t = CriterionArg::DiffOfDiff)]
        criterion: CriterionArg,
        /// Write the point file here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a named checker over one set or a sampled family
    Check {
        #[arg(long, value_enum)]
        name: check_cmd::CheckerName,
        #[arg(long, value_parser = parse_set_arg, conflicts_with = "sample")]
        set: Option<SubtractionSet>,
        /// Sampling spec, e.g. "sizes=3..10,count=200,max=25"
        #[arg(long)]
        sample: Option<String>,
        #[arg(long, default_value_t = 300)]
        hmax: u64,
        /// Required with --sample
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the table solver against the un-memoized recursion
    VerifyOracle {
        #[arg(long, value_parser = parse_set_arg)]
        set: SubtractionSet,
        #[arg(long, default_value_t = 30)]
        hmax: u64,
        /// Node budget for the recursion (default 2^31)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Draw reproducible random subtraction sets
    Sample {
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 25)]
        max: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_set_arg(s: &str) -> Result<SubtractionSet, String> {
    let mut actions = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let value: u64 = part
            .parse()
            .map_err(|_| format!("`{part}` is not a positive integer"))?;
        actions.push(value);
    }
    SubtractionSet::new(actions).map_err(|e| e.to_string())
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse()
}

pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn io(context: &str, err: std::io::Error) -> CliError {
        CliError::Io(format!("{context}: {err}"))
    }
}

/// Whether a command found mathematical violations (exit 1) or came up clean.
pub enum Outcome {
    Clean,
    Violations,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violations) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let jobs = cli.jobs.or_else(|| {
        std::env::var("CUMSUB_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    match jobs {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot build a {n}-thread pool: {e}")))?
            .install(|| dispatch(cli.command)),
        _ => dispatch(cli.command),
    }
}

fn check_hmax(hmax: u64) -> Result<(), CliError> {
    if hmax > HMAX_LIMIT {
        return Err(CliError::Usage(format!(
            "--hmax {hmax} exceeds the supported limit {HMAX_LIMIT}"
        )));
    }
    Ok(())
}

fn dispatch(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Solve {
            set,
            hmax,
            conventions,
            format,
            out,
        } => {
            check_hmax(hmax)?;
            let shown = match conventions {
                None => Convention::ALL.to_vec(),
                Some(list) => {
                    // preserve canonical order, drop duplicates
                    Convention::ALL
                        .into_iter()
                        .filter(|x| list.contains(x))
                        .collect()
                }
            };
            let table = solve(&set, hmax);
            let meta = Meta::new().with("set", set.to_string()).with("hmax", hmax);
            let rendered = match format {
                Format::Text => render::solve_text(&table, &shown, &meta),
                Format::Csv => render::solve_csv(&table, &shown, &meta),
                Format::Json => render::solve_json(&table, &shown, &meta),
            };
            render::emit(&out, &rendered)?;
            Ok(Outcome::Clean)
        }
        Command::Zs {
            set,
            hmax,
            format,
            out,
        } => {
            check_hmax(hmax)?;
            let values = zero_sum_solve(&set, hmax);
            let meta = Meta::new().with("set", set.to_string()).with("hmax", hmax);
            let rendered = match format {
                Format::Text => render::zs_text(&values, &meta),
                Format::Csv => render::zs_csv(&values, &meta),
                Format::Json => render::zs_json(&values, &meta),
            };
            render::emit(&out, &rendered)?;
            Ok(Outcome::Clean)
        }
        Command::Line {
            set,
            heap,
            convention,
            zero_sum,
        } => {
            check_hmax(heap)?;
            let meta = Meta::new().with("set", set.to_string()).with("heap", heap);
            if zero_sum {
                let line = zs_play_line(&set, heap);
                let score = zero_sum_solve(&set, heap)[heap as usize];
                print!("{}", render::line_text(&set, heap, None, &line, Some(score), &meta));
            } else {
                let Some(convention) = convention else {
                    return Err(CliError::Usage(
                        "pass --convention FvF|FvA|AvF|AvA or --zero-sum".into(),
                    ));
                };
                let table = solve(&set, heap);
                let line = play_line(&table, convention, heap);
                print!(
                    "{}",
                    render::line_text(&set, heap, Some(convention), &line, None, &meta)
                );
            }
            Ok(Outcome::Clean)
        }
        Command::Diff {
            set,
            base,
            other,
            hmax,
            format,
            out,
        } => {
            check_hmax(hmax)?;
            let records = cumsub::analysis::discrepancy_table(&set, base, other, hmax);
            let meta = Meta::new()
                .with("set", set.to_string())
                .with("base", base)
                .with("other", other)
                .with("hmax", hmax);
            let rendered = match format {
                Format::Text => render::diff_text(&records, &meta),
                Format::Csv => render::diff_csv(&records, &meta),
                Format::Json => render::diff_json(&records, &meta),
            };
            render::emit(&out, &rendered)?;
            let first_spread = records.iter().find(|r| r.diff_of_diff != 0).map(|r| r.heap);
            let first_component = records.iter().find(|r| !r.is_zero()).map(|r| r.heap);
            eprintln!(
                "first discrepancy {base}->{other}: diff_of_diff {first_spread:?}, componentwise {first_component:?}"
            );
            Ok(Outcome::Clean)
        }
        Command::Scan {
            arity,
            compare,
            smax,
            hmax,
            criterion,
            out,
        } => {
            check_hmax(hmax)?;
            let criterion = match compare {
                Compare::FvfAva => criterion.into(),
                Compare::AvaZs => Criterion::ZsVsAva,
            };
            let points = match arity {
                2 => scan_two_action(smax, hmax, criterion),
                3 => scan_three_action(smax, hmax, criterion),
                other => {
                    return Err(CliError::Usage(format!(
                        "--arity must be 2 or 3, got {other}"
                    )))
                }
            };
            let meta = Meta::new()
                .with("arity", arity)
                .with("smax", smax)
                .with("hmax", hmax)
                .with("criterion", criterion);
            let rendered = render::scan_csv(&points, &meta);
            render::emit(&out, &rendered)?;
            let summary = format!(
                "scan: {} points (arity {arity}, smax {smax}, hmax {hmax}, criterion {criterion})",
                points.len()
            );
            if out.is_some() {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
            Ok(Outcome::Clean)
        }
        Command::Check {
            name,
            set,
            sample,
            hmax,
            seed,
            format,
            out,
        } => {
            check_hmax(hmax)?;
            let json = match format {
                Format::Csv => {
                    return Err(CliError::Usage(
                        "check reports support --format text or json".into(),
                    ))
                }
                Format::Json => true,
                Format::Text => false,
            };
            check_cmd::run(name, set, sample, hmax, seed, json, out)
        }
        Command::VerifyOracle { set, hmax, budget } => {
            let budget = budget.unwrap_or(NAIVE_DEFAULT_BUDGET);
            check_hmax(hmax)?;
            let table = solve(&set, hmax);
            let mut mismatches = Vec::new();
            let mut probes = 0u64;
            for x in Convention::ALL {
                for h in 0..=hmax {
                    let naive = naive_pspe_with_budget(&set, x, h, budget).map_err(|e| {
                        CliError::Usage(format!(
                            "{set} {x} h={h}: {e}; raise --budget or lower --hmax"
                        ))
                    })?;
                    let solved = table.outcome(x, h);
                    if naive != solved {
                        mismatches.push(format!("{set} {x} h={h}: table {solved}, naive {naive}"));
                    }
                    probes += 1;
                }
            }
            for m in &mismatches {
                println!("MISMATCH {m}");
            }
            if mismatches.is_empty() {
                println!("verified {probes} probes on {set}: table solver and naive recursion agree");
                Ok(Outcome::Clean)
            } else {
                println!("{} mismatches over {probes} probes", mismatches.len());
                Ok(Outcome::Violations)
            }
        }
        Command::Sample {
            size,
            max,
            count,
            seed,
            out,
        } => {
            let sets = cumsub::analysis::sample_random_sets(size, max, count, seed)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let meta = Meta::new()
                .with("size", size)
                .with("max", max)
                .with("count", count)
                .with("seed", seed)
                .with("algorithm", cumsub::analysis::SAMPLE_ALGORITHM);
            let mut text = meta.comment_line();
            for s in &sets {
                let actions: Vec<String> = s.actions().iter().map(u64::to_string).collect();
                text.push_str(&actions.join(","));
                text.push('\n');
            }
            render::emit(&out, &text)?;
            Ok(Outcome::Clean)
        }
    }
}
