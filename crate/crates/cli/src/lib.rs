//! Job files, JSON reports and the command-line driver for `matalg-core`.

pub mod job;
pub mod json;
pub mod run;

pub use job::{parse_job, Command, Job, JobError, Overrides};
pub use run::{input_error, run, Outcome};
