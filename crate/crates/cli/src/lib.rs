//! Instance files, subcommands and the benchmark grid behind the `drinfeld`
//! binary.

pub mod bench;
pub mod commands;
pub mod instance;
pub mod report;
