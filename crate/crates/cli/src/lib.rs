//! Command-line front end: job configuration, runners for each subcommand,
//! the reproduction suite and the line-oriented report.

pub mod config;
pub mod jobs;
pub mod report;
pub mod suite;

pub use config::RunConfig;
pub use jobs::{run_job, run_jobs, Context, JobError, JobKind, VerificationJob};
pub use report::{Entry, Report, Status};
pub use suite::{suite_jobs, run_check, verify_paper_suite, SUITE_CHECKS};
