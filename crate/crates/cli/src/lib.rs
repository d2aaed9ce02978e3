//! Command-line front end for `poincare-maxwell`: point evaluation,
//! verification suites with JSON/CSV/text reports, and tables for
//! plotting.
//!
//! Reports go to stdout and diagnostics to stderr. For a fixed
//! configuration and seed the report bytes are identical across runs.

pub mod cli;
pub mod config;
pub mod eval;
pub mod numfmt;
pub mod report;
pub mod suites;
