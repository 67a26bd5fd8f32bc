//! Command-line front end for `phipq`: argument parsing, output encodings,
//! the verification sweep and the timing table.

pub mod app;
pub mod bench;
pub mod commands;
pub mod error;
pub mod render;

pub use app::{run, Cli};
pub use error::CliError;
