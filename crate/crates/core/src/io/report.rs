//! JSON fit report.

use serde::{Deserialize, Serialize};

use crate::eigen::SpectrumClass;
use crate::fit::FitResult;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Serializable view of a [`FitResult`]. Field order is the JSON key order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub n_points: usize,
    pub centroid: [f64; 3],
    pub direction: [f64; 3],
    pub moment: [f64; 3],
    pub eigenvalues: [f64; 3],
    pub mean_square_distance: f64,
    pub rms_distance: f64,
    pub classification: SpectrumClass,
    pub source: String,
    pub version: String,
}

impl FitReport {
    pub fn new(result: &FitResult, source: impl Into<String>) -> Self {
        Self {
            n_points: result.n_points,
            centroid: result.centroid.to_array(),
            direction: result.direction.to_array(),
            moment: result.moment.to_array(),
            eigenvalues: result.eigenvalues,
            mean_square_distance: result.mean_square_distance,
            rms_distance: result.rms_distance,
            classification: result.classification,
            source: source.into(),
            version: VERSION.to_string(),
        }
    }
}

/// Renders the report as JSON. Floats use the shortest representation that
/// round-trips, which never exceeds 17 significant digits.
pub fn emit_report(report: &FitReport, pretty: bool) -> String {
    let out = if pretty {
        serde_json::to_string_pretty(report)
    } else {
        serde_json::to_string(report)
    };
    out.expect("report contains only finite numbers and strings")
}

/// Short human-readable summary.
pub fn summary(report: &FitReport) -> String {
    let fmt3 = |v: [f64; 3]| format!("({:.6}, {:.6}, {:.6})", v[0], v[1], v[2]);
    format!(
        "points:         {}\n\
         centroid:       {}\n\
         direction:      {}\n\
         moment:         {}\n\
         eigenvalues:    {}\n\
         mean sq. dist.: {:.6e}\n\
         rms distance:   {:.6e}\n\
         classification: {}\n",
        report.n_points,
        fmt3(report.centroid),
        fmt3(report.direction),
        fmt3(report.moment),
        fmt3(report.eigenvalues),
        report.mean_square_distance,
        report.rms_distance,
        report.classification,
    )
}
