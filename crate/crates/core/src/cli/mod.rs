//! The `antimagic` command line.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::constructors::{solve, SolveError, DEFAULT_ORACLE_BUDGET};
use crate::graph::{parse_graph, Graph};
use crate::labeling::{Solution, SolutionRecord};
use crate::oracle::{brute_force_solve, enumerate_connected_graphs, random_connected_graph, SearchBudget, SearchOutcome};

pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const REFUSAL: i32 = 2;
}

pub const SWEEP_HEADER: &str = "id\tn\tm\tdelta\troute\tverified\truntime_ms";

#[derive(Debug, Parser)]
#[command(name = "antimagic", version, about = "Antimagic orientations of graphs with large maximum degree")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct and verify an antimagic orientation
    Solve(SolveArgs),
    /// Check a solution file against a graph
    Verify(VerifyArgs),
    /// Exhaustive search
    Oracle(OracleArgs),
    /// Emit a random connected graph
    Gen(GenArgs),
    /// Run solve or the oracle over many small graphs, TSV out
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Solution,
    Dot,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Edge-list file, or '-' for stdin
    #[arg(long, default_value = "-")]
    pub input: String,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Solution)]
    pub format: Format,
    /// Largest edge count handed to exhaustive search
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    pub oracle_budget: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Edge-list file, or '-' for stdin
    #[arg(long)]
    pub input: String,
    /// Solution file
    #[arg(long)]
    pub solution: String,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, default_value = "-")]
    pub input: String,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Solution)]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    pub max_edges: usize,
    #[arg(long)]
    pub max_nodes: Option<u64>,
    #[arg(long)]
    pub max_millis: Option<u64>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub delta: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepMode {
    Solve,
    Oracle,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Enumerate all connected graphs from this many vertices...
    #[arg(long, default_value_t = 1)]
    pub min_n: usize,
    /// ...up to this many (at most 7)
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    /// Sample this many random graphs instead of enumerating
    #[arg(long)]
    pub sample: Option<usize>,
    /// Vertex count for sampling
    #[arg(long, default_value_t = 9)]
    pub n: usize,
    /// Maximum degree for sampling
    #[arg(long, default_value_t = 5)]
    pub delta: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SweepMode::Solve)]
    pub mode: SweepMode,
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    pub oracle_budget: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command. Results go to
/// `out` unless an output file is given; diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { exit::FAILURE } else { exit::OK };
        }
    };
    let result = match cli.command {
        Command::Solve(args) => run_solve(&args, out, err),
        Command::Verify(args) => run_verify(&args, out),
        Command::Oracle(args) => run_oracle(&args, out, err),
        Command::Gen(args) => run_gen(&args, out),
        Command::Sweep(args) => run_sweep(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "antimagic: {message}");
            exit::FAILURE
        }
    }
}

type CmdResult = Result<i32, String>;

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| format!("reading stdin: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn read_graph(path: &str) -> Result<Graph, String> {
    parse_graph(&read_input(path)?).map_err(|e| format!("{path}: {e}"))
}

fn emit(text: &str, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), String> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| format!("writing stdout: {e}")),
    }
}

/// Renders a solution after re-verifying the exact text being written.
fn render(solution: &Solution, graph: &Graph, format: Format) -> Result<String, String> {
    let text = solution.to_text();
    let record: SolutionRecord = text.parse().map_err(|e| format!("internal: unparsable output: {e}"))?;
    let report = record.verify_against(graph).map_err(|e| format!("internal: {e}"))?;
    if !report.ok {
        return Err(format!("internal: output failed verification: {}", report.defect.map(|d| d.to_string()).unwrap_or_default()));
    }
    Ok(match format {
        Format::Solution => text,
        Format::Dot => solution.to_dot(),
    })
}

fn run_solve(args: &SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let graph = read_graph(&args.input)?;
    match solve(&graph, args.oracle_budget) {
        Ok(solution) => {
            emit(&render(&solution, &graph, args.format)?, &args.output, out)?;
            Ok(exit::OK)
        }
        Err(e @ SolveError::Refused { .. }) => {
            let _ = writeln!(err, "antimagic: {e}");
            Ok(exit::REFUSAL)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let graph = read_graph(&args.input)?;
    let record: SolutionRecord = read_input(&args.solution)?.parse().map_err(|e| format!("{}: {e}", args.solution))?;
    let report = record.verify_against(&graph).map_err(|e| format!("{}: {e}", args.solution))?;
    match report.defect {
        None => {
            writeln!(out, "ok").map_err(|e| e.to_string())?;
            Ok(exit::OK)
        }
        Some(defect) => {
            writeln!(out, "{defect}").map_err(|e| e.to_string())?;
            Ok(exit::FAILURE)
        }
    }
}

fn run_oracle(args: &OracleArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let graph = read_graph(&args.input)?;
    let budget = SearchBudget { max_edges: args.max_edges, max_nodes: args.max_nodes, max_millis: args.max_millis };
    match brute_force_solve(&graph, &budget).map_err(|e| e.to_string())? {
        SearchOutcome::Found(solution) => {
            emit(&render(&solution, &graph, args.format)?, &args.output, out)?;
            Ok(exit::OK)
        }
        SearchOutcome::Exhausted => {
            let _ = writeln!(err, "antimagic: no antimagic orientation exists");
            Ok(exit::REFUSAL)
        }
        SearchOutcome::BudgetExceeded => {
            let _ = writeln!(err, "antimagic: search budget exceeded");
            Ok(exit::REFUSAL)
        }
    }
}

fn run_gen(args: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let generated = random_connected_graph(args.n, args.delta, args.seed)?;
    let text = format!("# hub {}\n{}", generated.hub, generated.graph.to_edge_list());
    emit(&text, &args.output, out)?;
    Ok(exit::OK)
}

struct SweepRow {
    id: String,
    graph: Graph,
}

fn sweep_row(row: &SweepRow, mode: SweepMode, budget: usize) -> String {
    let g = &row.graph;
    let start = Instant::now();
    let (route, verified) = match mode {
        SweepMode::Solve => match solve(g, budget) {
            Ok(s) => (s.provenance().tag().to_string(), true),
            Err(e) if e.is_refusal() => ("refused".to_string(), false),
            Err(_) => ("failed".to_string(), false),
        },
        SweepMode::Oracle => match brute_force_solve(g, &SearchBudget::edges(budget)) {
            Ok(SearchOutcome::Found(s)) => (s.provenance().tag().to_string(), true),
            Ok(SearchOutcome::Exhausted) => ("exhausted".to_string(), false),
            Ok(SearchOutcome::BudgetExceeded) | Err(_) => ("over-budget".to_string(), false),
        },
    };
    let ms = start.elapsed().as_millis();
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        row.id,
        g.n(),
        g.m(),
        g.max_degree(),
        route,
        if verified { "yes" } else { "no" },
        ms
    )
}

fn run_sweep(args: &SweepArgs, out: &mut dyn Write) -> CmdResult {
    let rows: Vec<SweepRow> = match args.sample {
        Some(count) => (0..count)
            .map(|k| {
                random_connected_graph(args.n, args.delta, args.seed.wrapping_add(k as u64))
                    .map(|g| SweepRow { id: format!("s{k}"), graph: g.graph })
            })
            .collect::<Result<_, _>>()?,
        None => {
            let mut rows = Vec::new();
            for n in args.min_n..=args.max_n {
                let graphs = enumerate_connected_graphs(n).ok_or_else(|| format!("cannot enumerate n = {n} (1..=7)"))?;
                rows.extend(graphs.into_iter().enumerate().map(|(k, graph)| SweepRow { id: format!("n{n}-{k}"), graph }));
            }
            rows
        }
    };
    let lines: Vec<String> = rows.par_iter().map(|row| sweep_row(row, args.mode, args.oracle_budget)).collect();
    let mut text = String::from(SWEEP_HEADER);
    text.push('\n');
    for line in lines {
        text.push_str(&line);
        text.push('\n');
    }
    emit(&text, &args.output, out)?;
    Ok(exit::OK)
}
