//! MPS input and report output.

mod parse;
mod report;
mod write;

pub use parse::{parse_mps, read_mps};
pub use report::{emit_report, text_header, text_row, ReportFormat, ReportInput};
pub use write::write_mps;
