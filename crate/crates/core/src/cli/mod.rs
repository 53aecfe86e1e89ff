//! Command-line front end: parsing, instance files, subcommands, reports.

mod commands;
pub mod instance;
pub mod parse;

pub use commands::{dispatch, error_json, exit_code, BUDGET_ENV, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
pub use instance::{InstanceFile, Primes};
pub use parse::{collect_vars, parse_poly, parse_poly_auto};
