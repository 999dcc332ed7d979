//! Support code for the `finedecomp` command-line tool: the JSON file
//! formats and the built-in self-test.

pub mod error;
pub mod format;
pub mod selftest;

pub use error::CliError;
pub use format::{parse_instance, parse_result, render, InstanceFile, ResultFile, Status};
