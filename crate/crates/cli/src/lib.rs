//! File formats, reports, table generation and self-test suites for the
//! `convexdim` command-line tool.

pub mod commands;
pub mod config;
pub mod random;
pub mod report;
pub mod selftest;
pub mod tables;
