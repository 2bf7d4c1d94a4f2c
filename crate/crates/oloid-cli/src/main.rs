//! Command-line front end for the oloid crate: sample objects onto grids as
//! CSV or JSON, render SVG projection plots, and run the verification
//! suites.
//!
//! Exit codes: 0 on success, 1 when verification fails, 2 on usage or
//! domain errors.

mod plot;
mod sample;

use clap::{Parser, Subcommand};
use oloid::verify::{run_suite, Suite, VerifyOptions};
use oloid::ExtendedParam;
use sample::{BranchChoice, Grid, Object};

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "oloid",
    version,
    about = "Sample, plot, and verify the analytic geometry of the extended oloid"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample an object onto a parameter grid and emit CSV or JSON.
    Sample(SampleArgs),
    /// Render an SVG projection plot of one or more objects.
    Plot(PlotArgs),
    /// Run verification suites and report per-check residuals.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct SampleArgs {
    /// What to sample.
    #[arg(value_enum)]
    object: Object,
    /// Comma-separated member parameters; finite reals or "inf".
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Number of grid points per branch.
    #[arg(long, default_value_t = 400)]
    n: usize,
    /// Lower end of the parameter grid (object-specific default).
    #[arg(long, allow_hyphen_values = true)]
    t_min: Option<f64>,
    /// Upper end of the parameter grid (object-specific default).
    #[arg(long, allow_hyphen_values = true)]
    t_max: Option<f64>,
    /// Which z branch to sample, where the object has one.
    #[arg(long, value_enum, default_value_t = BranchChoice::Both)]
    branch: BranchChoice,
    /// Ruling coordinate for the oloid object (0 = circle a, 1 = circle b).
    #[arg(long, allow_hyphen_values = true)]
    m: Option<f64>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct PlotArgs {
    /// Plot specs: object[@lambda[,lambda...]][:style], with style one of
    /// solid, dashed, thick, thin.
    #[arg(required = true)]
    specs: Vec<String>,
    /// Projection axis for spatial objects, or "plane" for developments.
    #[arg(long, value_enum, default_value_t = plot::Projection::Y)]
    projection: plot::Projection,
    /// Half-width of the square coordinate window.
    #[arg(long, default_value_t = 2.5)]
    window: f64,
    /// Output file.
    #[arg(long, default_value = "plot.svg")]
    out: PathBuf,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Suite name, or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    /// Multiplier applied to every residual threshold.
    #[arg(long, default_value_t = 1.0)]
    tol: f64,
    /// Seed for the jittered sampling grids.
    #[arg(long)]
    seed: Option<u64>,
}

/// Parse a comma-separated lambda list.
pub(crate) fn parse_lambda_list(text: &str) -> Result<Vec<ExtendedParam>, String> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<ExtendedParam>()
                .map_err(|e| format!("bad lambda {part:?}: {e}"))
        })
        .collect()
}

fn usage_err(msg: String) -> UsageError {
    UsageError(msg)
}

struct UsageError(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Sample(args) => cmd_sample(args),
        Command::Plot(args) => cmd_plot(args),
        Command::Verify(args) => return cmd_verify(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn cmd_sample(args: SampleArgs) -> Result<(), UsageError> {
    let object = args.object;
    let lambdas = match (&args.lambda, object.takes_lambda()) {
        (Some(list), true) => parse_lambda_list(list).map_err(usage_err)?,
        (None, true) => {
            return Err(usage_err(format!(
                "object {} needs --lambda",
                object.name()
            )))
        }
        (Some(_), false) => {
            return Err(usage_err(format!(
                "object {} does not take --lambda",
                object.name()
            )))
        }
        (None, false) => Vec::new(),
    };
    if args.m.is_some() && object != Object::Oloid {
        return Err(usage_err(format!(
            "--m only applies to the oloid object, not {}",
            object.name()
        )));
    }
    if args.n < 2 {
        return Err(usage_err(format!("--n must be at least 2, got {}", args.n)));
    }
    let (d_min, d_max) = object.default_range();
    let grid = Grid {
        t_min: args.t_min.unwrap_or(d_min),
        t_max: args.t_max.unwrap_or(d_max),
        n: args.n,
    };
    if !(grid.t_min < grid.t_max) {
        return Err(usage_err(format!(
            "empty parameter range [{}, {}]",
            grid.t_min, grid.t_max
        )));
    }

    let rows = sample::sample(object, &lambdas, &grid, args.branch, args.m.unwrap_or(0.0))
        .map_err(|e| usage_err(e.to_string()))?;

    let write = |out: &mut dyn Write| -> std::io::Result<()> {
        match args.format {
            Format::Csv => sample::write_csv(out, object.is_planar(), &rows),
            Format::Json => sample::write_json(out, &rows),
        }
    };
    sink(args.out.as_deref(), write).map_err(|e| usage_err(e.to_string()))
}

fn cmd_plot(args: PlotArgs) -> Result<(), UsageError> {
    let specs = args
        .specs
        .iter()
        .map(|s| plot::PlotSpec::parse(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage_err)?;
    let svg = plot::render(&specs, args.projection, args.window).map_err(usage_err)?;
    sink(Some(&args.out), |out| out.write_all(svg.as_bytes()))
        .map_err(|e| usage_err(e.to_string()))
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let mut opts = VerifyOptions {
        tol_scale: args.tol,
        ..VerifyOptions::default()
    };
    if let Some(seed) = args.seed {
        opts.seed = seed;
    }

    let suites: Vec<Suite> = if args.suite.trim().eq_ignore_ascii_case("all") {
        Suite::ALL.to_vec()
    } else {
        match args.suite.parse::<Suite>() {
            Ok(s) => vec![s],
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    };

    let mut all_passed = true;
    for suite in suites {
        let report = run_suite(suite, &opts);
        all_passed &= report.passed();
        print!("{report}");
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn sink(
    path: Option<&std::path::Path>,
    write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> std::io::Result<()> {
    match path {
        Some(p) => {
            let mut out = BufWriter::new(File::create(p)?);
            write(&mut out)?;
            out.flush()
        }
        None => {
            let stdout = std::io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            write(&mut out)?;
            out.flush()
        }
    }
}
