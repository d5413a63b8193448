//! Argument parsing and subcommand dispatch.

use std::io::Write;
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};
use clap::{Args, Parser, Subcommand};

use crate::error::CliError;
use crate::render::{self, Format, LimitRequest, Preset, Rendered};
use crate::suites::{run_suite, Caps, Suite};

#[derive(Debug, Parser)]
#[command(name = "hypharm", version, about = "Exact verification of harmonic number identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Cap on n (defaults to each record's documented grid)
    #[arg(long, value_name = "N")]
    pub n_max: Option<i64>,
    /// Cap on integer parameters
    #[arg(long, value_name = "P")]
    pub param_max: Option<i64>,
    /// Allow caps beyond the safe bounds
    #[arg(long)]
    pub unsafe_large: bool,
}

impl GridArgs {
    fn caps(&self) -> Caps {
        Caps {
            n_max: self.n_max,
            param_max: self.param_max,
            unsafe_large: self.unsafe_large,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite and write a report
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate Table 1 or Table 2 with sample values
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a binomial family at x = 0 + eps and compare both parts
    Derive {
        family: String,
        /// Parameters as name=value, or positionally
        params: Vec<String>,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Probe the decay of a reflection family's weighted harmonic sum
    Limits {
        #[arg(value_enum, default_value_t = Preset::Reflex)]
        preset: Preset,
        #[arg(long, default_value_t = 0)]
        mu: u32,
        #[arg(long, default_value_t = 0)]
        nu: u32,
        #[arg(long)]
        n: u32,
        /// Weight exponent
        #[arg(long, default_value_t = 1)]
        lambda: u32,
        #[arg(long, value_delimiter = ',', default_value = "10,100,1000,10000")]
        ys: Vec<u64>,
        #[arg(long)]
        unsafe_large: bool,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the record manifest
    Manifest {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}

/// Runs a parsed command. `Ok(false)` means a check failed.
pub fn run(cli: &Cli) -> Result<bool, CliError> {
    let (rendered, out) = match &cli.command {
        Command::Verify { suite, grid, format, out } => {
            let stamp = Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true);
            let report = run_suite(*suite, &grid.caps(), stamp)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Markdown => report.to_markdown(),
            };
            (Rendered { text, ok: report.summary.failed == 0 }, out)
        }
        Command::Table { which, grid, format, out } => {
            (render::table(*which, &grid.caps(), *format)?, out)
        }
        Command::Derive { family, params, n, format, out } => {
            (render::derive(family, params, *n, *format)?, out)
        }
        Command::Limits { preset, mu, nu, n, lambda, ys, unsafe_large, format, out } => {
            let req = LimitRequest {
                preset: *preset,
                mu: *mu,
                nu: *nu,
                n: *n,
                lambda: *lambda,
                ys: ys.clone(),
                unsafe_large: *unsafe_large,
            };
            (render::limits(&req, *format)?, out)
        }
        Command::Manifest { format, out } => (render::manifest(*format), out),
    };
    emit(out.as_deref(), &rendered.text)?;
    Ok(rendered.ok)
}
