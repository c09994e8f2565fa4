//! Spec files, check suites and reports for the `pseudalg` command.

pub mod report;
pub mod specfile;
pub mod suite;
