//! Verification driver: a registry of checks, a JSON report and a chain cache.

pub mod cache;
pub mod checks;
pub mod fmt;
pub mod report;

pub use checks::{check_ids, check_seed, resolve, run, RunOptions};
pub use report::{CheckResult, Status, VerificationReport};
