//! `hyperbar`: contact streams and point clouds to hypergraph barcodes.
//!
//! Usage errors exit with status 2, data errors and oracle mismatches with 1.
//! `HYPERBAR_THREADS` caps the worker pool.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use hyperbar::contact::{self, DEFAULT_SIZE_CAP, DEFAULT_WINDOW};
use hyperbar::engine::{compute_barcodes, Mode};
use hyperbar::hypergraph::MAX_AMBIENT_VERTICES;
use hyperbar::io::{read_filtration, read_points, write_filtration};
use hyperbar::oracle::{compare, oracle_bars};
use hyperbar::report::{
    betti_at, length_histogram, read_bars_csv, read_bars_json, render_svg, stats, write_bars_csv,
    write_bars_json, GradeAxis,
};
use hyperbar::rips::rips_filtration;
use hyperbar::synthetic::{self, StreamShape};
use hyperbar::Bar64;

#[derive(Parser)]
#[command(name = "hyperbar", version, about = "Persistent homology barcodes of filtered hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Contact file to filtration file.
    Ingest {
        contacts: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Window length in timestamp units.
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: u64,
        /// Largest group size counted as one meeting.
        #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
        size_cap: usize,
        /// Logarithm base for rendered grades: `e`, `2`, `10` or any real > 1.
        #[arg(long, default_value = "e")]
        log_base: String,
    },
    /// Filtration file to barcodes.
    Compute {
        filtration: PathBuf,
        #[arg(long, default_value_t = 1)]
        max_dim: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Filtered)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Bar counts and proportions of one dimension, as JSON on stdout.
    Stats {
        bars: PathBuf,
        #[arg(long)]
        dim: usize,
        /// Add an equal-width histogram of finite bar lengths.
        #[arg(long)]
        histogram_bins: Option<usize>,
        /// Add bars alive at these grades.
        #[arg(long)]
        betti_at: Vec<f64>,
    },
    /// Barcode file to SVG.
    Plot {
        bars: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Only plot this dimension.
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Point cloud to Rips filtration file.
    Rips {
        points: PathBuf,
        #[arg(long)]
        rmax: f64,
        #[arg(long, default_value_t = 2)]
        max_dim: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Compares engine bars with the brute-force oracle.
    OracleCheck {
        filtration: PathBuf,
        #[arg(long, default_value_t = 1)]
        max_dim: usize,
    },
    /// Writes a seeded synthetic contact stream.
    Synth {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 400)]
        individuals: usize,
        #[arg(long, default_value_t = 70_000)]
        contacts: usize,
        /// Two communities that never meet, instead of the clustered stream.
        #[arg(long)]
        two_clusters: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Filtered,
    Literal,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(message) = configure_threads() {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("HYPERBAR_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("HYPERBAR_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn parse_base(text: &str) -> Result<f64> {
    let base = match text {
        "e" => std::f64::consts::E,
        other => other
            .parse::<f64>()
            .ok()
            .filter(|b| b.is_finite() && *b > 1.0)
            .with_context(|| format!("log base must be `e` or a real above 1, got `{other}`"))?,
    };
    Ok(base)
}

/// Bars by file extension: `.json` or CSV otherwise.
fn read_bars(path: &Path) -> Result<Vec<Bar64>> {
    let text = read(path)?;
    let bars = if path.extension().is_some_and(|e| e == "json") {
        read_bars_json(&text)
    } else {
        read_bars_csv(&text)
    };
    bars.with_context(|| path.display().to_string())
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Ingest {
            contacts,
            output,
            window,
            size_cap,
            log_base,
        } => {
            let base = parse_base(&log_base)?;
            let text = read(&contacts)?;
            let (tally, f) = contact::ingest(&text, window, size_cap)
                .with_context(|| contacts.display().to_string())?;
            if tally.truncated_windows > 0 {
                eprintln!(
                    "warning: {} windows had groups above the size cap of {size_cap}",
                    tally.truncated_windows
                );
            }
            let rendered = if log_base == "e" {
                write_filtration(&f)
            } else {
                write_filtration(&f.map_grades(|g| g.to_real_base(base)))
            };
            write(&output, &rendered)?;
        }
        Command::Compute {
            filtration,
            max_dim,
            mode,
            format,
            output,
        } => {
            let f = read_filtration(&read(&filtration)?, max_dim + 1)
                .with_context(|| filtration.display().to_string())?;
            let mode = match mode {
                ModeArg::Filtered => Mode::Filtered,
                ModeArg::Literal => Mode::Literal,
            };
            let bars = compute_barcodes(&f, max_dim, mode)?;
            let text = match format {
                Format::Csv => write_bars_csv(&bars),
                Format::Json => write_bars_json(&bars),
            };
            write(&output, &text)?;
        }
        Command::Stats {
            bars,
            dim,
            histogram_bins,
            betti_at: grades,
        } => {
            let bars = read_bars(&bars)?;
            let mut summary = stats(&bars, dim);
            if let Some(bins) = histogram_bins {
                summary.length_histogram = Some(length_histogram(&bars, dim, bins));
            }
            if !grades.is_empty() {
                summary.betti_at = Some(
                    grades
                        .iter()
                        .map(|&g| {
                            let (inf, hat) = betti_at(&bars, dim, g);
                            (g, inf, hat)
                        })
                        .collect(),
                );
            }
            println!("{}", serde_json::to_string(&summary)?);
        }
        Command::Plot { bars, output, dim } => {
            let mut bars = read_bars(&bars)?;
            if let Some(d) = dim {
                bars.retain(|b| b.dim == d);
            }
            write(&output, &render_svg(&bars, GradeAxis::fit(&bars)))?;
        }
        Command::Rips {
            points,
            rmax,
            max_dim,
            output,
        } => {
            let cloud = read_points(&read(&points)?).with_context(|| points.display().to_string())?;
            let f = rips_filtration(&cloud, rmax, max_dim)?;
            write(&output, &write_filtration(&f))?;
        }
        Command::OracleCheck {
            filtration,
            max_dim,
        } => {
            let f = read_filtration(&read(&filtration)?, max_dim + 1)
                .with_context(|| filtration.display().to_string())?;
            if f.roster().len() > MAX_AMBIENT_VERTICES {
                bail!(
                    "{} vertices exceed the oracle cap of {MAX_AMBIENT_VERTICES}",
                    f.roster().len()
                );
            }
            let engine = compute_barcodes(&f, max_dim, Mode::Filtered)?;
            let oracle = oracle_bars(&f, max_dim)?;
            let diff = compare(&engine, &oracle);
            print!("{diff}");
            if !diff.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Synth {
            seed,
            individuals,
            contacts,
            two_clusters,
            output,
        } => {
            let records = if two_clusters {
                synthetic::two_cluster_stream(individuals.max(4) / 2, contacts as u64 / 2, seed)
            } else {
                if individuals < 2 {
                    bail!("at least two individuals are needed");
                }
                synthetic::clustered_stream(
                    StreamShape {
                        individuals,
                        contacts,
                        ..StreamShape::conference()
                    },
                    seed,
                )
            };
            write(&output, &synthetic::to_text(&records))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
