//! Argument parsing and dispatch for the `mmnfa` binary.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use mmnfa_core::{generate, verify_network, GenSpec, DEFAULT_BUDGET, DEFAULT_COORD_MAX};

use crate::commands::{self, CompareSpec};
use crate::files;
use crate::report::RunRecord;

/// Exit status when a verified network leaves some main pair disconnected.
pub const EXIT_DISCONNECTED: i32 = 2;
/// Exit status for `verify --strict` when coverage is below 1.
pub const EXIT_NOT_MANHATTAN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mmnfa",
    version,
    about = "Approximate minimum Manhattan networks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the heuristic on a point file.
    Solve {
        input: PathBuf,
        /// Print the JSON run record instead of the summary line.
        #[arg(long)]
        json: bool,
        /// Write an SVG drawing of the graph and the kept network.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        /// Write the network file.
        #[arg(long, value_name = "PATH")]
        network: Option<PathBuf>,
    },
    /// Exact minimum Manhattan network for up to 8 points.
    Exact {
        input: PathBuf,
        /// Witness network file (default: INPUT.exact.json).
        #[arg(long, value_name = "PATH")]
        network: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Measure Manhattan-path coverage of a network over a point file.
    Verify {
        points: PathBuf,
        network: PathBuf,
        /// Exit nonzero unless every pair has a Manhattan path.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Generate a random point file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_COORD_MAX)]
        coord_max: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (default: stdout).
        #[arg(short, long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
    /// Repeated random solves with per-trial statistics.
    Bench {
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_COORD_MAX)]
        coord_max: i64,
        #[arg(long)]
        json: bool,
        /// Also write the JSON record here.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
    /// Heuristic versus exact length on small random instances.
    Compare {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value_t = 8)]
        coord_max: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    files::write_string(path, contents)?;
    Ok(())
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out`. Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<i32>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args)?;
    execute(cli.command, out)
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Solve {
            input,
            json,
            svg,
            network,
        } => {
            let points = files::read_points(&input)?;
            let (trace, rec) = commands::solve(&points);
            if trace.duplicates_merged > 0 {
                eprintln!(
                    "warning: merged {} duplicate points",
                    trace.duplicates_merged
                );
            }
            if let Some(path) = &svg {
                write_file(path, &commands::solve_svg(&trace))?;
            }
            if let Some(path) = &network {
                write_file(path, &files::format_network(&trace.network))?;
            }
            if json {
                let mut record = RunRecord::new("solve");
                record.input = Some(input.display().to_string());
                record.solve = Some(rec);
                out.write_all(record.to_json().as_bytes())?;
            } else {
                out.write_all(commands::solve_text(&rec).as_bytes())?;
            }
            Ok(0)
        }
        Command::Exact {
            input,
            network,
            json,
            budget,
        } => {
            let points = files::read_points(&input)?;
            let rec = commands::exact_record(&points, budget)?;
            let witness = network.unwrap_or_else(|| {
                let mut p = input.clone().into_os_string();
                p.push(".exact.json");
                PathBuf::from(p)
            });
            write_file(&witness, &files::format_network(&rec.network))?;
            if json {
                let mut record = RunRecord::new("exact");
                record.input = Some(input.display().to_string());
                record.exact = Some(rec);
                out.write_all(record.to_json().as_bytes())?;
            } else {
                writeln!(
                    out,
                    "optimal_length={} expansions={} witness={}",
                    rec.length,
                    rec.expansions,
                    witness.display()
                )?;
            }
            Ok(0)
        }
        Command::Verify {
            points,
            network,
            strict,
            json,
        } => {
            let pts = files::read_points(&points)?;
            let net = files::read_network(&network)?;
            let report = verify_network(&net, &pts)?;
            if json {
                let mut record = RunRecord::new("verify");
                record.input = Some(network.display().to_string());
                record.verify = Some(report.clone());
                out.write_all(record.to_json().as_bytes())?;
            } else {
                out.write_all(commands::verify_text(&report).as_bytes())?;
            }
            Ok(if !report.connected {
                EXIT_DISCONNECTED
            } else if strict && !report.is_manhattan() {
                EXIT_NOT_MANHATTAN
            } else {
                0
            })
        }
        Command::Gen {
            n,
            coord_max,
            seed,
            output,
        } => {
            let pts = generate(GenSpec::new(n, coord_max, seed))?;
            let text = files::format_points(&pts);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Bench {
            n,
            trials,
            seed,
            coord_max,
            json,
            report,
        } => {
            let b = commands::bench(n, trials, seed, coord_max)?;
            let mut record = RunRecord::new("bench");
            record.gen = Some(GenSpec::new(n, coord_max, seed));
            record.bench = Some(b.clone());
            if let Some(path) = &report {
                write_file(path, &record.to_json())?;
            }
            if json {
                out.write_all(record.to_json().as_bytes())?;
            } else {
                out.write_all(commands::bench_text(&b).as_bytes())?;
            }
            Ok(0)
        }
        Command::Compare {
            count,
            n_min,
            n_max,
            coord_max,
            seed,
            budget,
            json,
            report,
        } => {
            if coord_max < 1 {
                bail!("coord-max must be positive");
            }
            let spec = CompareSpec {
                count,
                n_min,
                n_max,
                coord_max,
                seed,
                budget,
            };
            let c = commands::compare(spec).context("compare")?;
            let mut record = RunRecord::new("compare");
            record.compare = Some(c.clone());
            if let Some(path) = &report {
                write_file(path, &record.to_json())?;
            }
            if json {
                out.write_all(record.to_json().as_bytes())?;
            } else {
                out.write_all(commands::compare_text(&c).as_bytes())?;
            }
            Ok(0)
        }
    }
}
