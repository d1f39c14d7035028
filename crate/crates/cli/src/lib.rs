//! Front end for `toric-nash`: input formats, form syntax, command dispatch
//! and report rendering.

pub mod config;
pub mod error;
pub mod execute;
pub mod form;
pub mod input;
pub mod report;
pub mod valuation;

pub use config::{Command, FormSpec, Format, Input, RunConfig};
pub use error::{CliError, CliResult};
pub use execute::{execute, Outcome};
pub use input::{emit_json, emit_lines, parse_exponents};
