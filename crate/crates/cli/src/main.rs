use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dps_cli::bench::{self, BenchOptions};
use dps_cli::commands::{self, emit, RenderArgs, SmoothArgs};
use dps_cli::{batch_threads, CliError};

/// Shortest curvature-bounded smoothing of polylines.
///
/// Exit codes: 0 success, 1 I/O or parse error, 2 infeasible polyline,
/// 3 no path, 4 oracle mismatch, 5 path written but clearance below the
/// robot radius.
#[derive(Parser)]
#[command(name = "dps", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smooth a polyline CSV into a path of lines and arcs.
    Smooth {
        /// Polyline CSV (`x,y` per line, `-` for stdin).
        input: PathBuf,
        #[arg(short, long, allow_negative_numbers = true)]
        radius: f64,
        /// Clamp tangent lengths instead of refusing infeasible corners.
        #[arg(long)]
        best_effort: bool,
        /// Solve corners on a thread pool (`DPS_THREADS` caps its size).
        #[arg(long)]
        parallel: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Plan around convex obstacles and smooth the result.
    Plan {
        scenario: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare each smoothed piece with the shortest Dubins path.
    OracleCheck {
        input: PathBuf,
        #[arg(short, long, allow_negative_numbers = true)]
        radius: f64,
    },
    /// Time smoothing and compare lengths with multi-point Dubins baselines.
    Bench {
        /// Polyline sizes, comma separated.
        #[arg(short, long, value_delimiter = ',', default_value = "1000")]
        n: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        repeats: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(short, long, default_value_t = 2.0)]
        radius: f64,
        /// Heading samples per vertex for the free-heading baseline.
        #[arg(long, default_value_t = 360)]
        mpdp_samples: usize,
        /// Skip the free-heading baseline above this size.
        #[arg(long, default_value_t = 1000)]
        mpdp_max_n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a path, optionally with its scenario and polyline, as SVG.
    Render {
        path: PathBuf,
        #[arg(long)]
        scenario: Option<PathBuf>,
        #[arg(long)]
        polyline: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Smooth {
            input,
            radius,
            best_effort,
            parallel,
            output,
        } => commands::smooth(&SmoothArgs {
            input,
            radius,
            best_effort,
            parallel,
            output,
        }),
        Command::Plan { scenario, output } => commands::plan_scenario(&scenario, output.as_deref()),
        Command::OracleCheck { input, radius } => {
            print!("{}", commands::oracle_check(&input, radius)?);
            Ok(())
        }
        Command::Bench {
            n,
            repeats,
            seed,
            radius,
            mpdp_samples,
            mpdp_max_n,
            output,
        } => {
            let table = bench::run(&BenchOptions {
                sizes: n,
                repeats,
                seed,
                radius,
                mpdp_samples,
                mpdp_max_n,
                threads: batch_threads(),
            })?;
            emit(output.as_deref(), &table)
        }
        Command::Render {
            path,
            scenario,
            polyline,
            output,
        } => commands::render_svg(&RenderArgs {
            path,
            scenario,
            polyline,
            output,
        }),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors share the I/O and parse exit code, not clap's 2
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                // the report already ends with a newline
                CliError::Mismatch(report) => print!("{report}"),
                other => eprintln!("dps: {other}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
