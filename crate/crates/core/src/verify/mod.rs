//! Named verification suites, configuration and report emission.

mod check;
mod config;
mod report;
mod suites;

pub use check::{CheckKind, CheckResult, Residual, Status};
pub use config::{Config, ConfigError, Format, Suite};
pub use suites::{list_checks, PlannedCheck, BACKEND_TOL, HEAT_REL_TOL};
pub use report::{run_suite, Report, Summary, Timings, REPORT_VERSION};
