//! Std companion to `subcheck-core`: file-facing reports, a multi-threaded
//! search driver, scaling benchmarks, and the `subcheck` CLI.

pub mod bench;
pub mod cli;
pub mod parallel;
pub mod report;

pub use subcheck_core as core;
