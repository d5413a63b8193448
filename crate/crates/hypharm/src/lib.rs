//! Command-line front end for `hypharm-core`: verification suites with
//! deterministic JSON reports, table regeneration, `D0` derivation traces and
//! limit probes.

pub mod cli;
mod error;
pub mod render;
pub mod report;
pub mod suites;

pub use error::CliError;
