//! File formats, reports and command implementations for the `sedwit` CLI.

pub mod circuit_text;
pub mod commands;
pub mod csv_io;
pub mod error;
pub mod format;

pub use error::{CliError, Result};
