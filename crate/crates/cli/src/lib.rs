//! CSV front end for `scatter-core`: scan specifications, presets for the
//! figure datasets, and the table writer behind the `scatter` binary.

pub mod describe;
pub mod error;
pub mod presets;
pub mod scan;
pub mod spec;
pub mod table;

pub use describe::describe;
pub use error::CliError;
pub use scan::run_scan;
pub use spec::{AxisSpec, Params, Quantity, RawSpec, ScanSpec};
pub use table::{Cell, Table};

/// Resolves a preset by name and runs it.
pub fn run_preset(name: &str) -> Result<Table, CliError> {
    let spec = presets::load(name)?.resolve()?;
    run_scan(&spec)
}
