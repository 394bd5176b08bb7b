//! File formats, JSON reports and the `prym` command line, on top of
//! [`prym_core`].

pub mod cli;
pub mod error;
pub mod input;
pub mod report;
pub mod run;

pub use error::{CliError, CliResult};
pub use run::{execute, Command, Config, Outcome, Stage};
