//! One module per subcommand. Each `run` function does the work and returns
//! a `CliResult`; the binary maps that onto process exit codes.

pub mod analyze;
pub mod bandwidth;
pub mod embed;
pub mod extract;
pub mod simulate;

/// Schema tag stamped into every JSON document the tool emits.
pub const REPORT_SCHEMA: u32 = 1;
