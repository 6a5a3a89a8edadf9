//! Spec documents and the law-suite runner behind the `sepset` binary.

pub mod document;
pub mod error;
pub mod fixtures;
pub mod model;
pub mod parse;
pub mod registry;
pub mod report;
pub mod runner;

pub use document::SpecDocument;
pub use error::SpecError;
pub use parse::{parse_file, parse_spec};
pub use registry::{LawId, UnknownLawId};
pub use report::{Format, MachineReport, Report, Status};
pub use runner::{effective_bounds, run_checks, RunError};
