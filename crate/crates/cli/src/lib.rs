//! Batch verification harness: named suites, configuration and JSON reports.

pub mod config;
pub mod report;
pub mod suites;

pub use config::{FrameMode, SuiteConfig};
pub use report::{CaseReport, Report, Status};
pub use suites::{run_mc, run_suite, MC_GROUPS, SUITES};
