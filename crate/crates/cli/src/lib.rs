//! Front end for `stacky-core`: text parsing, printable certificates, JSON
//! records, and the parallel scan harness that writes CSV catalogs.

pub mod catalog;
pub mod commands;
mod error;
pub mod parse;
pub mod render;
pub mod scan;

pub use error::CliError;
