//! Command-line front end, file formats and acceptance suites for `dsym-core`.

pub mod cli;
pub mod format;
pub mod specfile;
pub mod verify;
