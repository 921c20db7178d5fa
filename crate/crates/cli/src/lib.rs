//! Command-line front end: fixture files, report documents and the five
//! subcommands.

pub mod cli;
pub mod commands;
pub mod complex;
pub mod error;
pub mod fixtures;
pub mod report;

pub use cli::{run, Outcome};
pub use error::CliError;
