use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use inertia_core::generator::{generate_extremal, GeneratorParams, Residue};
use inertia_core::Graph;
use inertia_verify::corpus::{load_all, Corpus, CorpusSource};
use inertia_verify::format::{encode_edge_list, encode_graph6, parse_edge_list, parse_graph6};
use inertia_verify::report::{emit_report, Format};
use inertia_verify::run::{run_verification, Check, RunConfig, RunReport, WORKERS_ENV};

const EXIT_CLEAN: u8 = 0;
const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "inertia",
    version,
    about = "Exact inertia, matching and cycle checks for simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check on one graph and print its report row as JSON.
    Analyze {
        /// A graph6 string, a file (graph6 or edge list), or `-` for stdin.
        input: String,
        #[arg(long, value_enum, default_value = "auto")]
        input_format: InputFormat,
        /// Treat budget skips as failures.
        #[arg(long)]
        strict: bool,
    },
    /// Evaluate checks over one or more corpora and write a report.
    Verify {
        /// Corpus spec; repeat to concatenate corpora. See the README for the grammar.
        #[arg(long, required = true)]
        corpus: Vec<String>,
        /// Comma-separated checks, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        /// Worker threads; defaults to the INERTIA_WORKERS environment variable,
        /// then to the available parallelism.
        #[arg(long)]
        workers: Option<usize>,
        /// Treat budget skips as failures.
        #[arg(long)]
        strict: bool,
    },
    /// Print graphs that attain the bound matching the residue class, one graph6 per line.
    Generate {
        #[arg(long, value_parser = ["0", "1", "3"])]
        residue: String,
        #[arg(long)]
        cycles: usize,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
        /// Isolated seed vertices besides the cycles.
        #[arg(long, default_value_t = 0)]
        isolated: usize,
        /// Seed cycle lengths are drawn from this many members of the residue class.
        #[arg(long, default_value_t = 1)]
        length_choices: usize,
        /// Number of graphs, using seeds `seed`, `seed + 1`, ...
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Print edge lists instead of graph6.
        #[arg(long)]
        edges: bool,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn outcome(report: &RunReport) -> ExitCode {
    for ce in &report.summary.counterexamples {
        eprintln!(
            "counterexample: {} [{}] {}: {}",
            ce.graph_id, ce.graph6, ce.check, ce.detail
        );
    }
    ExitCode::from(if report.has_counterexamples() {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_CLEAN
    })
}

fn read_graph(input: &str, format: InputFormat) -> Result<Graph, String> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        s
    } else if let Ok(meta) = fs::metadata(input) {
        if !meta.is_file() {
            return Err(format!("{input}: not a file"));
        }
        fs::read_to_string(input).map_err(|e| format!("{input}: {e}"))?
    } else {
        input.to_string()
    };
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| {
            !l.is_empty()
                && !(l.starts_with('>') && !l.starts_with(">>graph6<<"))
                && !l.starts_with('#')
        })
        .unwrap_or("");
    let edges = match format {
        InputFormat::Edges => true,
        InputFormat::Graph6 => false,
        InputFormat::Auto => first
            .split('#')
            .next()
            .unwrap_or("")
            .trim()
            .parse::<usize>()
            .is_ok(),
    };
    if edges {
        parse_edge_list(&text).map_err(|e| e.to_string())
    } else {
        parse_graph6(first).map_err(|e| e.to_string())
    }
}

fn analyze(input: &str, format: InputFormat, strict: bool) -> ExitCode {
    let graph = match read_graph(input, format) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let corpus = Corpus::from_graphs("input", [graph]);
    let mut config = RunConfig::all();
    config.workers = Some(1);
    config.strict = strict;
    let report = match run_verification(&corpus, &config) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    match serde_json::to_string_pretty(&report.rows[0]) {
        Ok(s) => println!("{s}"),
        Err(e) => return usage(e),
    }
    outcome(&report)
}

fn verify(
    specs: &[String],
    checks: &str,
    out: &Path,
    format: ReportFormat,
    workers: Option<usize>,
    strict: bool,
) -> ExitCode {
    let sources = match specs
        .iter()
        .map(|s| s.parse::<CorpusSource>())
        .collect::<Result<Vec<_>, _>>()
    {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let checks = match Check::parse_list(checks) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let corpus = match load_all(&sources) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let config = RunConfig {
        checks,
        workers,
        strict,
    };
    let report = match run_verification(&corpus, &config) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let format = match format {
        ReportFormat::Json => Format::Json,
        ReportFormat::Csv => Format::Csv,
    };
    if let Err(e) = emit_report(&report, format, out) {
        return usage(e);
    }
    eprintln!(
        "{} graphs, {} counterexamples, {:.3}s",
        report.summary.graphs,
        report.summary.counterexamples.len(),
        report.elapsed.as_secs_f64()
    );
    outcome(&report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            input,
            input_format,
            strict,
        } => analyze(&input, input_format, strict),
        Command::Verify {
            corpus,
            checks,
            out,
            format,
            workers,
            strict,
        } => {
            if workers == Some(0) {
                return usage(format_args!(
                    "--workers must be at least 1 (or unset to use {WORKERS_ENV})"
                ));
            }
            verify(&corpus, &checks, &out, format, workers, strict)
        }
        Command::Generate {
            residue,
            cycles,
            steps,
            seed,
            isolated,
            length_choices,
            count,
            edges,
        } => {
            let residue = match residue
                .parse()
                .map_err(|_| ())
                .and_then(|r| Residue::from_u8(r).map_err(|_| ()))
            {
                Ok(r) => r,
                Err(()) => return usage("residue must be 0, 1 or 3"),
            };
            let mut params = GeneratorParams::new(residue, cycles, steps, seed);
            params.num_isolated_seeds = isolated;
            params.length_choices = length_choices;
            for i in 0..count as u64 {
                params.rng_seed = seed.wrapping_add(i);
                let g = generate_extremal(&params);
                if edges {
                    print!("{}", encode_edge_list(&g));
                } else {
                    println!("{}", encode_graph6(&g));
                }
            }
            ExitCode::from(EXIT_CLEAN)
        }
    }
}
