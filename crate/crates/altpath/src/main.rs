//! Command-line surface: generate, solve, partition, verify, oracle, and
//! render subcommands over the textual instance/path/partition formats.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 internal invariant breach.

use altpath::format;
use altpath::generate::{generate, GenError, GenParams};
use altpath::geom::ColoredPoint;
use altpath::oracle::brute_force_path;
use altpath::partition::{discrepancy, plane_partition, PartitionError, Targets};
use altpath::path::{closed_cycle_with_partition, open_path, PathError};
use altpath::region::bounding_region;
use altpath::svg::render_svg;
use altpath::verify::{verify_partition, verify_path};
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "altpath", version, about = "Non-crossing alternating Hamiltonian paths on bicolored point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random instance.
    Gen {
        /// Polygon size (at least 3).
        #[arg(long)]
        s: usize,
        /// Number of interior blue points.
        #[arg(long)]
        blue: usize,
        /// Number of red points outside the polygon.
        #[arg(long = "red-out")]
        red_out: usize,
        #[arg(long)]
        seed: u64,
        /// Radius of the sampling circle.
        #[arg(long, default_value_t = 64)]
        range: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Solve an instance: closed cycle on balanced input, open path when
    /// the counts differ by one (auto-detected; flags force a mode).
    Solve {
        instance: PathBuf,
        #[arg(long, conflicts_with = "open")]
        closed: bool,
        #[arg(long)]
        open: bool,
        /// Seed for the auxiliary point in the open case.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Compute the equitable convex partition for a balanced instance.
    Partition {
        instance: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Verify a path and/or partition file against an instance.
    Verify {
        instance: PathBuf,
        #[arg(long = "path")]
        path_file: Option<PathBuf>,
        #[arg(long = "partition")]
        partition_file: Option<PathBuf>,
    },
    /// Brute-force a tiny instance (at most 12 points).
    Oracle {
        instance: PathBuf,
        #[arg(long, conflicts_with = "open")]
        closed: bool,
        #[arg(long)]
        open: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Render an instance (optionally with a path and partition) as SVG.
    Render {
        instance: PathBuf,
        #[arg(long = "path")]
        path_file: Option<PathBuf>,
        #[arg(long = "partition")]
        partition_file: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

enum CliError {
    /// Verification failed (exit 1).
    Verification(String),
    /// Bad input: unreadable files, parse errors, hypothesis violations
    /// (exit 2).
    Invalid(String),
    /// Internal invariant breach (exit 3).
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Verification(m) | CliError::Invalid(m) | CliError::Internal(m) => m,
        }
    }
}

fn from_path_error(e: PathError) -> CliError {
    match e {
        PathError::Internal(_) | PathError::AugmentationFailed => CliError::Internal(e.to_string()),
        PathError::Partition(ref pe) => match pe {
            PartitionError::ConditionsViolated(_)
            | PartitionError::HypothesisViolated(_)
            | PartitionError::InvalidChain(_) => CliError::Invalid(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        },
        _ => CliError::Invalid(e.to_string()),
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {}", path.display(), e)))
}

fn write_out(output: &Output, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Internal(format!("cannot write {}: {}", path.display(), e))),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn load_instance(path: &PathBuf) -> Result<format::InstanceFile, CliError> {
    format::parse_instance(&read(path)?).map_err(|e| CliError::Invalid(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen {
            s,
            blue,
            red_out,
            seed,
            range,
            output,
        } => {
            let params = GenParams {
                s,
                n_blue: blue,
                n_red_outside: red_out,
                seed,
                coordinate_range: range,
            };
            let inst = generate(&params).map_err(|e| match e {
                GenError::BadParams(_) => CliError::Invalid(e.to_string()),
                GenError::GenerationFailed(_) => CliError::Internal(e.to_string()),
            })?;
            let file = format::InstanceFile {
                instance: inst,
                seed: Some(seed),
                metadata: None,
            };
            write_out(&output, &format::emit_instance(&file))
        }
        Command::Solve {
            instance,
            closed,
            open,
            seed,
            output,
        } => {
            let file = load_instance(&instance)?;
            let inst = &file.instance;
            let diff = inst.red.len() as i64 - inst.blue.len() as i64;
            let want_closed = if closed {
                true
            } else if open {
                false
            } else {
                diff == 0
            };
            let path = if want_closed {
                closed_cycle_with_partition(inst)
                    .map(|(p, _)| p)
                    .map_err(from_path_error)?
            } else {
                open_path(inst, seed).map_err(from_path_error)?
            };
            write_out(&output, &format::emit_path(&path))
        }
        Command::Partition { instance, output } => {
            let file = load_instance(&instance)?;
            let inst = &file.instance;
            let part = plane_partition(&inst.polygon_points(), &inst.blue, &inst.outside_reds())
                .map_err(|e| from_path_error(PathError::Partition(e)))?;
            write_out(&output, &format::emit_partition(&part))
        }
        Command::Verify {
            instance,
            path_file,
            partition_file,
        } => {
            let file = load_instance(&instance)?;
            let inst = &file.instance;
            if path_file.is_none() && partition_file.is_none() {
                return Err(CliError::Invalid(
                    "nothing to verify: pass --path and/or --partition".into(),
                ));
            }
            if let Some(pf) = path_file {
                let path = format::parse_path(&read(&pf)?)
                    .map_err(|e| CliError::Invalid(e.to_string()))?;
                verify_path(&inst.all_points(), &path)
                    .map_err(|v| CliError::Verification(v.to_string()))?;
                println!("path ok");
            }
            if let Some(pf) = partition_file {
                let part = format::parse_partition(&read(&pf)?)
                    .map_err(|e| CliError::Invalid(e.to_string()))?;
                let verts = inst.polygon_points();
                let outside = inst.outside_reds();
                let all: Vec<ColoredPoint> = inst
                    .blue
                    .iter()
                    .chain(outside.iter())
                    .cloned()
                    .collect();
                let coords: Vec<_> = inst.all_points().iter().map(|p| p.point.clone()).collect();
                let ambient = bounding_region(&coords);
                // Each cell must carry one more blue than red so that the
                // per-cell separated instance is solvable.
                let total = discrepancy(&all);
                let s = verts.len() as i64;
                if total != s {
                    return Err(CliError::Invalid(format!(
                        "partition verification needs a balanced instance (discrepancy {}, expected {})",
                        total, s
                    )));
                }
                let want = Targets(vec![1; verts.len()]);
                verify_partition(&ambient, &verts, &outside, &inst.blue, &part, &want)
                    .map_err(|v| CliError::Verification(v.to_string()))?;
                println!("partition ok");
            }
            Ok(())
        }
        Command::Oracle {
            instance,
            closed,
            open,
            output,
        } => {
            let file = load_instance(&instance)?;
            let inst = &file.instance;
            let want_closed = if closed {
                true
            } else if open {
                false
            } else {
                inst.red.len() == inst.blue.len()
            };
            let found = brute_force_path(&inst.red, &inst.blue, want_closed, None)
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            match found {
                Some(path) => write_out(&output, &format::emit_path(&path)),
                None => write_out(&output, "none\n"),
            }
        }
        Command::Render {
            instance,
            path_file,
            partition_file,
            output,
        } => {
            let file = load_instance(&instance)?;
            let path = match path_file {
                Some(pf) => Some(
                    format::parse_path(&read(&pf)?)
                        .map_err(|e| CliError::Invalid(e.to_string()))?,
                ),
                None => None,
            };
            let part = match partition_file {
                Some(pf) => Some(
                    format::parse_partition(&read(&pf)?)
                        .map_err(|e| CliError::Invalid(e.to_string()))?,
                ),
                None => None,
            };
            let svg = render_svg(&file.instance, path.as_ref(), part.as_ref())
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            write_out(&output, &svg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
