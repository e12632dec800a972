use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sudoku_rect::completion::{complete, complete_seeded, decide_guaranteed, CompletionOutcome};
use sudoku_rect::constructions::construct_counterexample;
use sudoku_rect::counting::{
    count_completions, render_bounds_kv, render_bounds_table, sudoku_bounds, CountCaps,
};
use sudoku_rect::{format, SudokuGrid, Validity};

/// Sudoku rectangle completion for order n = k².
#[derive(Parser)]
#[command(name = "sudoku-rect", version)]
struct Cli {
    /// Output style for reports.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Kv,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a grid file and report its shape.
    Check { file: PathBuf },
    /// Decide whether every m×n rectangle of order k² completes.
    Decide {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Complete a rectangle, or report why it has no completion.
    Complete {
        file: PathBuf,
        /// Shuffle the matching and coloring inputs reproducibly.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Write a non-completable m×n rectangle.
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// Output file; stdout when absent.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Count completions by exhaustive search.
    Count {
        file: PathBuf,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        max_solutions: Option<u64>,
    },
    /// Tabulate log-space bounds on the number of squares for k = 2..=k-max.
    Bounds {
        #[arg(long)]
        k_max: usize,
    },
}

const AFFIRMATIVE: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;

struct Failure(String);

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { file } => check(&file, cli.format),
        Command::Decide { k, m } => decide(k, m, cli.format),
        Command::Complete { file, seed } => run_complete(&file, seed, cli.format),
        Command::Construct { k, m, output } => construct(k, m, output.as_deref()),
        Command::Count { file, max_nodes, max_solutions } => {
            count(&file, CountCaps { max_nodes, max_solutions }, cli.format)
        }
        Command::Bounds { k_max } => bounds(k_max, cli.format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn load(path: &Path) -> Result<SudokuGrid, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn describe_violation(v: &Validity) -> String {
    match v {
        Validity::Valid => "valid".into(),
        Validity::Violation { kind, value, first, second } => {
            format!("{kind} conflict: value {value} at {first} and {second}")
        }
    }
}

fn check(path: &Path, fmt: Format) -> Outcome {
    let grid = load(path)?;
    let (k, n) = (grid.k(), grid.n());
    match grid.validate() {
        Validity::Valid => {
            match (grid.rect_shape(), fmt) {
                (Some(s), Format::Text) => {
                    println!("valid ({}×{n} rectangle, k={k}, l={}, r={})", s.m, s.l, s.r)
                }
                (Some(s), Format::Kv) => {
                    println!("status=valid k={k} n={n} shape=rectangle m={} l={} r={}", s.m, s.l, s.r)
                }
                (None, Format::Text) => {
                    println!("valid (partial square, k={k}, {} filled cells)", grid.filled_count())
                }
                (None, Format::Kv) => {
                    println!("status=valid k={k} n={n} shape=partial filled={}", grid.filled_count())
                }
            }
            Ok(AFFIRMATIVE)
        }
        v @ Validity::Violation { kind, value, first, second } => {
            match fmt {
                Format::Text => println!("violation: {}", describe_violation(&v)),
                Format::Kv => println!(
                    "status=violation kind={kind} value={value} first={},{} second={},{}",
                    first.row, first.col, second.row, second.col
                ),
            }
            Ok(NEGATIVE)
        }
    }
}

fn decide(k: usize, m: usize, fmt: Format) -> Outcome {
    let verdict = decide_guaranteed(k, m).map_err(|e| Failure(e.to_string()))?;
    let s = verdict.shape;
    let condition = verdict.reason.map_or("none".to_string(), |r| r.to_string());
    match fmt {
        Format::Text => match verdict.reason {
            Some(r) => println!("guaranteed (k={k}, m={m}, l={}, r={}): {r}", s.l, s.r),
            None => println!("not guaranteed (k={k}, m={m}, l={}, r={})", s.l, s.r),
        },
        Format::Kv => println!(
            "k={k} m={m} l={} r={} guaranteed={} condition={condition}",
            s.l,
            s.r,
            verdict.is_guaranteed()
        ),
    }
    Ok(if verdict.is_guaranteed() { AFFIRMATIVE } else { NEGATIVE })
}

fn run_complete(path: &Path, seed: Option<u64>, fmt: Format) -> Outcome {
    let grid = load(path)?;
    let outcome = match seed {
        Some(s) => complete_seeded(&grid, s),
        None => complete(&grid),
    }
    .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    match outcome {
        CompletionOutcome::Completed(square) => {
            print!("{}", format::render(&square));
            Ok(AFFIRMATIVE)
        }
        CompletionOutcome::NotCompletable(obs) => {
            let cols = join(&obs.columns, ",");
            let cands = join(&obs.candidates, ",");
            match fmt {
                Format::Text => {
                    println!("not completable: block {} has no valid assignment", obs.block);
                    println!(
                        "  columns {{{cols}}} need {} new value(s) each; {} candidate(s) available: {{{cands}}}",
                        obs.per_column,
                        obs.candidates.len()
                    );
                }
                Format::Kv => println!(
                    "status=not-completable block={},{} columns={cols} per_column={} candidates={cands}",
                    obs.block.block_row, obs.block.block_col, obs.per_column
                ),
            }
            Ok(NEGATIVE)
        }
    }
}

fn construct(k: usize, m: usize, output: Option<&Path>) -> Outcome {
    let report = construct_counterexample(k, m).map_err(|e| Failure(e.to_string()))?;
    let text = report.render();
    match output {
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))?;
            eprintln!("wrote case-{} rectangle ({m}×{}) to {}", report.case, k * k, path.display());
        }
        None => print!("{text}"),
    }
    Ok(AFFIRMATIVE)
}

fn count(path: &Path, caps: CountCaps, fmt: Format) -> Outcome {
    let grid = load(path)?;
    let v = grid.validate();
    if !v.is_valid() {
        return Err(Failure(format!("{}: {}", path.display(), describe_violation(&v))));
    }
    let res = count_completions(&grid, caps);
    match fmt {
        Format::Text => println!("{}", res.count),
        Format::Kv => println!(
            "count={} exhausted={} nodes={}",
            res.count, res.exhausted, res.nodes_visited
        ),
    }
    if res.exhausted {
        Ok(AFFIRMATIVE)
    } else {
        eprintln!("search stopped by a cap after {} nodes; the count is partial", res.nodes_visited);
        Ok(NEGATIVE)
    }
}

fn bounds(k_max: usize, fmt: Format) -> Outcome {
    if k_max < 2 {
        return Err(Failure(format!("--k-max must be at least 2, got {k_max}")));
    }
    let reports = (2..=k_max)
        .map(sudoku_bounds)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure(e.to_string()))?;
    match fmt {
        Format::Text => print!("{}", render_bounds_table(&reports)),
        Format::Kv => print!("{}", render_bounds_kv(&reports)),
    }
    Ok(AFFIRMATIVE)
}

fn join(xs: &[usize], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
