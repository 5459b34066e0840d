//! Command-line front end: argument definitions, commands and their
//! JSON/CSV/text renderings. The binary is a thin wrapper over [`run`].

pub mod args;
pub mod commands;
pub mod report;

pub use commands::{exit, run, Outcome};

/// JSON Schema for every JSON document the commands print.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");
