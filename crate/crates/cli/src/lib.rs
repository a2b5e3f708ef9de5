//! File formats and command implementations behind the `pargame` binary.

pub mod commands;
pub mod dot;
pub mod format;
pub mod strategy_file;
