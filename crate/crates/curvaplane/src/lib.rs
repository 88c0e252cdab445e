//! File formats, reports and the command-line interface on top of `curvaplane-core`.

pub mod cli;
pub mod format;
pub mod report;
