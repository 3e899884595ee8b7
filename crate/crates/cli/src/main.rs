use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use boxcover_cli::specs::{parse_list, ScaleSpec, SetSpec};
use boxcover_cli::{commands, render_verify, verify, CliError, Format, Rendered, Result};
use clap::{Parser, Subcommand};

/// Exact covering numbers and box-dimension estimates for sets of rationals.
#[derive(Parser)]
#[command(name = "boxcover", version)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the points of a set.
    Set {
        /// reciprocal:m, primepow:p:K, smooth:p1,p2,..:m, cantor:depth or file:PATH
        spec: SetSpec,
    },
    /// Minimal cover by closed intervals of length delta.
    Cover {
        spec: SetSpec,
        #[arg(long)]
        delta: String,
    },
    /// Box-dimension estimate from covering numbers over a scale schedule.
    Dim {
        spec: SetSpec,
        /// geo:<d0>:<ratio>:<steps> or pow3:<steps>
        #[arg(long)]
        scales: Option<ScaleSpec>,
        /// Fit even when scales go below the set's resolution.
        #[arg(long)]
        force: bool,
    },
    /// Check the product covering bound on seeded random pairs.
    VerifyLemma2 {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        scales: Option<ScaleSpec>,
    },
    /// Check the covering bounds for 1/N and A(p).
    VerifyBounds {
        #[arg(long, default_value_t = 10_000)]
        max: u64,
        #[arg(long, default_value = "2,3,5")]
        primes: String,
        /// Truncation exponent K for A(p).
        #[arg(long, default_value_t = 64)]
        exponent: u32,
        #[arg(long)]
        scales: Option<ScaleSpec>,
    },
    /// Compare the dimension of 1/N with that of the smooth product set.
    VerifyEuclid {
        #[arg(long, default_value = "2,3,5")]
        primes: String,
        #[arg(long, default_value_t = 100_000)]
        max: u64,
        #[arg(long)]
        scales: Option<ScaleSpec>,
        #[arg(long, default_value_t = verify::DEFAULT_GAP_THRESHOLD)]
        threshold: f64,
        #[arg(long)]
        force: bool,
    },
}

fn run(cli: &Cli) -> Result<Rendered> {
    let format = cli.format;
    match &cli.command {
        Command::Set { spec } => commands::emit_set(spec, format),
        Command::Cover { spec, delta } => {
            commands::cover(spec, &commands::parse_delta(delta)?, format)
        }
        Command::Dim {
            spec,
            scales,
            force,
        } => commands::dim(spec, scales.as_ref(), *force, format),
        Command::VerifyLemma2 {
            trials,
            seed,
            scales,
        } => render_verify(&verify::lemma2(*trials, *seed, scales.as_ref())?, format),
        Command::VerifyBounds {
            max,
            primes,
            exponent,
            scales,
        } => render_verify(
            &verify::bounds(*max, &parse_list(primes)?, *exponent, scales.as_ref())?,
            format,
        ),
        Command::VerifyEuclid {
            primes,
            max,
            scales,
            threshold,
            force,
        } => render_verify(
            &verify::euclid(&parse_list(primes)?, *max, scales.as_ref(), *threshold, *force)?,
            format,
        ),
    }
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli).and_then(|r| write_output(cli.out.as_ref(), &r.text).map(|_| r)) {
        Ok(rendered) => rendered.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
