//! Command-line front end: reads instances and layouts, runs the solver,
//! optionally cross-checks an exhaustive oracle, and reports JSON.

pub mod generate;
pub mod report;

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sfvs_core::dp::{solve, Solution};
use sfvs_core::layout::{width, WidthKind};
use sfvs_core::nmc::{brute_force_nmc, solve_nmc, NmcInstance, NMC_ORACLE_LIMIT};
use sfvs_core::verify::{brute_force_fvs, brute_force_sfvs, SFVS_ORACLE_LIMIT};
use sfvs_core::{io, Instance, RootedLayout, VertexSet};
use thiserror::Error;

pub use generate::GenerateArgs;
pub use report::{Report, Widths};

#[derive(Debug, Parser)]
#[command(name = "sfvs", version, about = "Exact Subset Feedback Vertex Set and Node Multiway Cut over rooted layouts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance and print a JSON report.
    Solve(SolveArgs),
    /// Write a random instance and a layout for it.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Sfvs,
    Fvs,
    Nmc,
}

impl Problem {
    fn name(self) -> &'static str {
        match self {
            Problem::Sfvs => "sfvs",
            Problem::Fvs => "fvs",
            Problem::Nmc => "nmc",
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Instance file (`p sfvs` format).
    #[arg(long)]
    pub graph: PathBuf,
    /// Layout file; defaults to a caterpillar in vertex order.
    #[arg(long)]
    pub layout: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "sfvs")]
    pub problem: Problem,
    /// Comma-separated names replacing the S flags of the file.
    #[arg(long, value_delimiter = ',')]
    pub s: Option<Vec<String>>,
    /// Comma-separated terminal names (nmc); defaults to the S-flagged vertices.
    #[arg(long, value_delimiter = ',')]
    pub terminals: Option<Vec<String>>,
    /// Let the cut delete terminals at their file weights (nmc).
    #[arg(long)]
    pub deletable_terminals: bool,
    /// Cross-check the answer against an exhaustive oracle.
    #[arg(long)]
    pub oracle: bool,
    /// Worker threads; 0 picks automatically.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Where to write the report; `-` is stdout.
    #[arg(long, default_value = "-")]
    pub json: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("{context}: {source}")]
    Input { context: String, source: sfvs_core::Error },
    #[error("{0}")]
    Usage(String),
    #[error("oracle mismatch: solver found {solver}, oracle found {oracle}")]
    OracleMismatch { solver: i64, oracle: i64 },
    #[error(transparent)]
    SizeGuard(sfvs_core::Error),
    #[error(transparent)]
    Solver(sfvs_core::Error),
    #[error("cannot write output: {0}")]
    Write(std::io::Error),
}

impl CliError {
    /// 1 for bad input, 2 for an oracle mismatch, 3 for a size guard.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::OracleMismatch { .. } => 2,
            CliError::SizeGuard(_) => 3,
            _ => 1,
        }
    }
}

fn solver_err(e: sfvs_core::Error) -> CliError {
    match e {
        sfvs_core::Error::SizeGuard { .. } => CliError::SizeGuard(e),
        other => CliError::Solver(other),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })
}

fn names_to_set(inst: &Instance, names: &[String]) -> Result<VertexSet, CliError> {
    names
        .iter()
        .filter(|n| !n.is_empty())
        .map(|n| inst.graph.vertex_by_name(n).ok_or_else(|| CliError::Usage(format!("unknown vertex {n:?}"))))
        .collect()
}

/// Loads the instance and layout named by `args`.
pub fn load(args: &SolveArgs) -> Result<(Instance, RootedLayout), CliError> {
    let input = |context: String| move |source| CliError::Input { context, source };
    let inst = io::parse_graph(&read(&args.graph)?).map_err(input(args.graph.display().to_string()))?;
    let layout = match &args.layout {
        Some(p) => RootedLayout::parse(&read(p)?, &inst.graph).map_err(input(p.display().to_string()))?,
        None => RootedLayout::caterpillar(inst.n()).map_err(input("default layout".into()))?,
    };
    Ok((inst, layout))
}

/// Runs `solve` and returns the report; `--threads` sizes the pool.
pub fn run_solve(args: &SolveArgs) -> Result<Report, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.threads)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    pool.install(|| solve_in_pool(args))
}

fn solve_in_pool(args: &SolveArgs) -> Result<Report, CliError> {
    let (mut inst, layout) = load(args)?;
    // the oracle size guard is checked before solving
    let limit = if args.problem == Problem::Nmc { NMC_ORACLE_LIMIT } else { SFVS_ORACLE_LIMIT };
    if args.oracle && inst.n() > limit {
        return Err(CliError::SizeGuard(sfvs_core::Error::SizeGuard { n: inst.n(), limit }));
    }
    let start = Instant::now();
    let (_, cuts) = width(&inst.graph, &layout, WidthKind::Mim).map_err(solver_err)?;
    let widths = Widths {
        gf2: cuts.width(WidthKind::Gf2),
        rational: cuts.width(WidthKind::Rational),
        mim: cuts.width(WidthKind::Mim),
    };
    let mut report = Report::new(args.problem.name(), &inst, widths);
    match args.problem {
        Problem::Sfvs | Problem::Fvs => {
            if args.problem == Problem::Fvs {
                inst.s = inst.graph.vertices();
            } else if let Some(names) = &args.s {
                inst.s = names_to_set(&inst, names)?;
            }
            let sol = solve(&inst, &layout).map_err(solver_err)?;
            if args.oracle {
                let (expected, _) = match args.problem {
                    Problem::Fvs => brute_force_fvs(&inst.graph, &inst.weights),
                    _ => brute_force_sfvs(&inst),
                }
                .map_err(solver_err)?;
                check(sol.sforest_weight, expected)?;
                report.oracle_checked = true;
            }
            report.fill_sfvs(&inst, &sol);
        }
        Problem::Nmc => {
            let terminals = match &args.terminals {
                Some(names) => names_to_set(&inst, names)?,
                None => inst.s.clone(),
            };
            let nmc = NmcInstance::new(inst.graph.clone(), terminals, inst.weights.clone())
                .map_err(|source| CliError::Input { context: "terminals".into(), source })?
                .with_deletable_terminals(args.deletable_terminals);
            let sol = solve_nmc(&nmc, &layout).map_err(solver_err)?;
            if args.oracle {
                check(sol.weight, brute_force_nmc(&nmc).map_err(solver_err)?.weight)?;
                report.oracle_checked = true;
            }
            let kept = sol.cut.complement(inst.n());
            report.fill(&inst, sol.weight, &sol.cut, inst.weight(&kept));
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn check(solver: i64, oracle: i64) -> Result<(), CliError> {
    if solver == oracle {
        Ok(())
    } else {
        Err(CliError::OracleMismatch { solver, oracle })
    }
}

impl Report {
    fn fill_sfvs(&mut self, inst: &Instance, sol: &Solution) {
        self.fill(inst, sol.sforest_weight, &sol.deletion, sol.sforest_weight);
    }
}

/// Entry point shared by the binary and the tests.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve(args) => {
            let report = run_solve(args)?;
            let text = serde_json::to_string_pretty(&report).expect("report serialises") + "\n";
            if args.json == "-" {
                print!("{text}");
                Ok(())
            } else {
                fs::write(&args.json, text).map_err(CliError::Write)
            }
        }
        Command::Generate(args) => generate::run(args),
    }
}
