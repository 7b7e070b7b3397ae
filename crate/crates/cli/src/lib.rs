//! Library side of the `greedy-mis` command: instance directories, run
//! reports, verification suites and sweep tables. Everything here is
//! deterministic given its inputs, so outputs can be diffed byte for byte.

pub mod error;
pub mod fraction;
pub mod instance;
pub mod report;
pub mod sweep;
pub mod verify;

pub use error::{CliError, ExitKind};

/// Version tag written into every structured output.
pub const SCHEMA_VERSION: u32 = 1;

/// Pretty JSON with a trailing newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}
