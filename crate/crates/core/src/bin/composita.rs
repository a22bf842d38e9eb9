use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use composita::bfile::write_atomic;
use composita::commands::{self, Computed, ForwardExtras};
use composita::render::Format;
use composita::{Result, SeriesSpec};

#[derive(Parser)]
#[command(
    name = "composita",
    version,
    about = "Exact compositae and central-coefficient transforms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    /// plain, csv, json or bfile
    #[arg(long, short = 'f', default_value = "plain")]
    format: Format,
    /// Write to PATH instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the triangle of a series
    Composita {
        spec: SeriesSpec,
        #[arg(long, short = 'n', default_value_t = 5)]
        order: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Solve A = x·H(A) and print a(1..=n)
    SolveFe {
        spec: SeriesSpec,
        #[arg(long, short = 'n', default_value_t = 10)]
        order: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Forward and inverse central-coefficient transforms
    Central {
        #[command(subcommand)]
        direction: Direction,
    },
    /// Compare computed terms against a b-file
    Compare {
        /// series, forward, solve-fe, invert or triangle
        what: Computed,
        spec: SeriesSpec,
        fixture: PathBuf,
        #[arg(long, short = 'n', default_value_t = 10)]
        order: usize,
    },
    /// Builtin series catalogue
    Builtins {
        #[command(subcommand)]
        action: BuiltinsAction,
    },
}

#[derive(Subcommand)]
enum Direction {
    /// Central coefficients of the triangle of H
    Forward {
        spec: SeriesSpec,
        #[arg(long, short = 'n', default_value_t = 10)]
        order: usize,
        /// Also print A(x)
        #[arg(long)]
        show_a: bool,
        /// Also print the triangle
        #[arg(long)]
        triangle: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Recover H and its triangle from central coefficients F
    Invert {
        spec: SeriesSpec,
        #[arg(long, short = 'n', default_value_t = 10)]
        order: usize,
        /// Re-run the forward transform and fail unless it reproduces F
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand)]
enum BuiltinsAction {
    List,
}

fn emit(text: String, output: &Output) -> Result<()> {
    match &output.out {
        Some(path) => write_atomic(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Composita {
            spec,
            order,
            output,
        } => emit(
            commands::cmd_composita(&spec, spec.order.unwrap_or(order), output.format)?,
            &output,
        )?,
        Command::SolveFe {
            spec,
            order,
            output,
        } => emit(
            commands::cmd_solve_fe(&spec, spec.order.unwrap_or(order), output.format)?,
            &output,
        )?,
        Command::Central { direction } => match direction {
            Direction::Forward {
                spec,
                order,
                show_a,
                triangle,
                output,
            } => {
                let extras = ForwardExtras {
                    a_series: show_a,
                    triangle,
                };
                let text = commands::cmd_central_forward(
                    &spec,
                    spec.order.unwrap_or(order),
                    output.format,
                    extras,
                )?;
                emit(text, &output)?
            }
            Direction::Invert {
                spec,
                order,
                check,
                output,
            } => {
                let text = commands::cmd_central_invert(
                    &spec,
                    spec.order.unwrap_or(order),
                    output.format,
                    check,
                )?;
                emit(text, &output)?
            }
        },
        Command::Compare {
            what,
            spec,
            fixture,
            order,
        } => {
            let report = commands::cmd_compare(what, &spec, &fixture, order)?;
            println!("{report}");
            return Ok(report.is_match());
        }
        Command::Builtins {
            action: BuiltinsAction::List,
        } => print!("{}", commands::cmd_builtins_list()),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
