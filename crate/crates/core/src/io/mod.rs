//! Command-line facing input and output.

pub mod parse;
pub mod report;
pub mod svg;

pub use parse::{parse_points, parse_str, InputFormat, InputSource, InputSpec};
pub use report::{emit_report, summary, FitReport, VERSION};
pub use svg::{emit_svg, render_svg};
