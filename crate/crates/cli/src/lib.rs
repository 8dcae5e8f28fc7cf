//! Verification sweeps, report records and newform classification behind
//! the `epslocal` binary.

pub mod classify_io;
pub mod report;
pub mod suites;
