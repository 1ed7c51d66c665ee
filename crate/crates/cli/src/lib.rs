//! Command-line front end: JSON documents, a max-plus expression language,
//! Graphviz export and the command dispatcher.

// Errors carry exact values for diagnostics; they are cold paths.
#![allow(clippy::result_large_err)]

pub mod commands;
pub mod docs;
pub mod dot;
pub mod expr;

pub use commands::{run_command, CliError};
