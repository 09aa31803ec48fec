//! Command-line frontend for active information analysis.
//!
//! The binary prints one deterministic JSON envelope per invocation and
//! optionally mirrors it (plus command-specific artifacts) to files.
//! Exit codes: 0 success, 1 domain error (bad data, infeasible problem,
//! failed computation), 2 usage error.

pub mod cli;
pub mod dataset;
pub mod errors;
pub mod fitting;
pub mod jsonfmt;
pub mod modes;
pub mod report;
pub mod specparse;
pub mod svg;

pub use cli::{run, Cli};
pub use errors::CliError;
