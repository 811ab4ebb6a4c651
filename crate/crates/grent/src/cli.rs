//! Command-line definitions and command implementations.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use grent_core::ordering::{bfd_realize, bfd_tree};
use grent_core::randic::{grid, profile_point, DEFAULT_HI, DEFAULT_LO, DEFAULT_STEP};
use grent_core::random::generate_er;
use grent_core::rewire::{maximize_randic, DEFAULT_BUDGET};
use grent_core::spectral::spectral_radius;
use grent_core::{AlphaProfile, DegreeSequence, Error, Graph};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error as ThisError;

use crate::io::{load_graph, save_edge_list, LoadError, LoadedGraph};
use crate::report::{
    analyze, markov, reports_csv, sweep_csv, trace_csv, AnalysisReport, BfdPair, TreeReport, DEFAULT_ALPHAS,
    SCHEMA_VERSION,
};

#[derive(Debug, Parser)]
#[command(name = "grent", version, about = "Topological entropy, Randić indices and BFD graphs")]
pub struct Cli {
    /// Worker threads for parallel sweeps (results do not depend on it).
    #[arg(long, global = true, env = "GRENT_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Er,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree statistics, Randić indices, λ/2, H(G) and assortativity.
    Analyze {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_ALPHAS, allow_hyphen_values = true)]
        alphas: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Realizes the degree sequence as a BFD graph and reports both.
    Bfd {
        file: PathBuf,
        /// Where to write the BFD graph as an edge list.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_ALPHAS, allow_hyphen_values = true)]
        alphas: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Tabulates the α profile and locates α*.
    Sweep {
        #[arg(required_unless_present = "gen", conflicts_with = "gen")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, requires_all = ["n", "p"])]
        gen: Option<Generator>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_LO, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, default_value_t = DEFAULT_HI, allow_hyphen_values = true)]
        hi: f64,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hill-climbs R_α by connectivity-preserving switches; prints the trace CSV.
    Maximize {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the final graph as an edge list.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum-entropy random walk summary.
    Markov { file: PathBuf },
    /// Builds the BFD-tree of a tree degree sequence.
    TreeMax {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_ALPHAS, allow_hyphen_values = true)]
        alphas: Vec<f64>,
    },
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{path}: {source}")]
    Load { path: String, source: LoadError },
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    /// 0 success, 2 disconnected, 3 parse error, 4 invalid sequence,
    /// 5 numeric non-convergence, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Load { source: LoadError::Io(_), .. } => 1,
            CliError::Load { .. } => 3,
            CliError::Core(Error::Disconnected) => 2,
            CliError::Core(
                Error::NotGraphical | Error::NotConnectedRealizable | Error::NotTreeSequence | Error::LengthMismatch(..),
            ) => 4,
            CliError::Core(Error::NoConvergence { .. }) => 5,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn load(path: &Path) -> CliResult<LoadedGraph> {
    let loaded = load_graph(path).map_err(|source| CliError::Load { path: path.display().to_string(), source })?;
    let w = loaded.warnings;
    if w.total() > 0 {
        eprintln!(
            "warning: {}: dropped {} duplicate edge(s) and {} self-loop(s)",
            path.display(),
            w.duplicate_edges,
            w.self_loops
        );
    }
    Ok(loaded)
}

fn network_name(path: &Path) -> String {
    path.file_stem().map_or_else(|| "graph".into(), |s| s.to_string_lossy().into_owned())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// Runs one parsed command, writing its primary output to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Analyze { file, alphas, format } => {
            let g = load(file)?.graph;
            let report = analyze(&network_name(file), &g, alphas)?;
            match format {
                Format::Json => write_json(out, &report),
                Format::Csv => Ok(out.write_all(reports_csv(&[report]).as_bytes())?),
            }
        }
        Command::Bfd { file, out: graph_out, alphas, format } => {
            let g = load(file)?.graph;
            let name = network_name(file);
            let original = analyze(&name, &g, alphas)?;
            let (h, _) = bfd_realize(&g.degree_sequence())?;
            let bfd = analyze(&format!("{name}-bfd"), &h, alphas)?;
            if !original.same_degrees(&bfd) || h.degree_sequence() != g.degree_sequence() {
                return Err(CliError::Other("BFD realization changed the degree sequence".into()));
            }
            if let Some(path) = graph_out {
                save_edge_list(&h, path)?;
            }
            match format {
                Format::Json => write_json(out, &BfdPair { spec_version: SCHEMA_VERSION.into(), original, bfd }),
                Format::Csv => Ok(out.write_all(reports_csv(&[original, bfd]).as_bytes())?),
            }
        }
        Command::Sweep { file, gen, n, p, seed, lo, hi, step, out: csv_out } => {
            let g = match (file, gen) {
                (Some(path), _) => load(path)?.graph,
                (None, Some(Generator::Er)) => {
                    let (n, p) = (n.expect("clap requires n"), p.expect("clap requires p"));
                    let sample = generate_er(n, p, *seed)?;
                    if sample.seed != *seed {
                        eprintln!("note: first connected sample at seed {}", sample.seed);
                    }
                    sample.graph
                }
                (None, None) => unreachable!("clap requires a file or a generator"),
            };
            let csv = sweep(&g, *lo, *hi, *step)?;
            match csv_out {
                Some(path) => std::fs::write(path, csv)?,
                None => out.write_all(csv.as_bytes())?,
            }
            Ok(())
        }
        Command::Maximize { file, alpha, budget, seed, out: graph_out } => {
            let g = load(file)?.graph;
            let (h, trace) = maximize_randic(&g, *alpha, *budget, *seed)?;
            if let Some(path) = graph_out {
                save_edge_list(&h, path)?;
            }
            if trace.budget_exhausted {
                eprintln!("warning: budget of {budget} rounds exhausted before a local optimum");
            }
            out.write_all(trace_csv(&trace).as_bytes())?;
            Ok(())
        }
        Command::Markov { file } => {
            let g = load(file)?.graph;
            write_json(out, &markov(&g)?)
        }
        Command::TreeMax { degrees, out: graph_out, alphas } => {
            let report = tree_max(degrees, alphas)?;
            if let Some(path) = graph_out {
                let g = Graph::from_edges(report.degrees.len(), &report.edges)?;
                save_edge_list(&g, path)?;
            }
            write_json(out, &report)
        }
    }
}

/// The sweep CSV for `g`; grid points are evaluated in parallel and
/// collected in grid order.
pub fn sweep(g: &Graph, lo: f64, hi: f64, step: f64) -> CliResult<String> {
    if !(step > 0.0 && lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(Error::InvalidArgument(format!("bad sweep range lo={lo} hi={hi} step={step}")).into());
    }
    let lambda = spectral_radius(g)?.lambda;
    let records = grid(lo, hi, step).into_par_iter().map(|a| profile_point(g, a)).collect();
    let profile = AlphaProfile::from_records(g, records);
    if profile.star.is_none() {
        eprintln!("warning: maximum of the normalized Randić function lies on the sweep boundary");
    }
    Ok(sweep_csv(&profile, lambda))
}

pub fn tree_max(degrees: &[usize], alphas: &[f64]) -> CliResult<TreeReport> {
    let pi = DegreeSequence::from(degrees.to_vec());
    let (g, ord) = bfd_tree(&pi)?;
    let report: AnalysisReport = analyze("bfd-tree", &g, alphas)?;
    Ok(TreeReport {
        spec_version: SCHEMA_VERSION.into(),
        degrees: pi.as_slice().to_vec(),
        lambda: 2.0 * report.lambda_half,
        order: ord.order,
        edges: g.edges().collect(),
        report,
    })
}
