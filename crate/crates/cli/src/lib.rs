//! Algebra file format and the `vaisman` command line.

pub mod app;
pub mod format;

pub use app::{run, Outcome, EXIT_FAILED, EXIT_INPUT, EXIT_OK};
