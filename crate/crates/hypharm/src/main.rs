use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = hypharm::cli::Cli::parse();
    match hypharm::cli::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("hypharm: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
