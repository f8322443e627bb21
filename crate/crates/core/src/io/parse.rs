//! Text point-cloud input: one `x y z` or `x,y,z` triple per line.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::Error;
use crate::geometry::Vec3;
use crate::nonlinearity::PointCloud;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InputFormat {
    Csv,
    Whitespace,
    /// CSV if the first data line contains a comma, whitespace otherwise.
    #[default]
    Auto,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(InputFormat::Csv),
            "ws" | "whitespace" => Ok(InputFormat::Whitespace),
            "auto" => Ok(InputFormat::Auto),
            other => Err(format!(
                "unknown format '{other}' (expected csv, ws or auto)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    Stdin,
    Path(PathBuf),
}

impl InputSource {
    /// `-` means standard input.
    pub fn from_arg(arg: &str) -> Self {
        if arg == "-" {
            InputSource::Stdin
        } else {
            InputSource::Path(PathBuf::from(arg))
        }
    }

    /// Name recorded in reports.
    pub fn name(&self) -> String {
        match self {
            InputSource::Stdin => "-".to_string(),
            InputSource::Path(p) => p.display().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSpec {
    pub source: InputSource,
    pub format: InputFormat,
}

impl InputSpec {
    pub fn new(source: InputSource, format: InputFormat) -> Self {
        Self { source, format }
    }

    pub fn path(path: impl AsRef<Path>) -> Self {
        Self::new(
            InputSource::Path(path.as_ref().to_path_buf()),
            InputFormat::Auto,
        )
    }
}

/// Reads and parses the points named by `spec`.
pub fn parse_points(spec: &InputSpec) -> Result<PointCloud, Error> {
    let text = match &spec.source {
        InputSource::Stdin => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::io("<stdin>", e))?;
            buf
        }
        InputSource::Path(p) => fs::read_to_string(p).map_err(|e| Error::io(p, e))?,
    };
    parse_str(&text, spec.format)
}

/// Parses point-cloud text.
///
/// Blank lines and lines starting with `#` are skipped. The first remaining
/// line is a header if any of its fields is not a number.
pub fn parse_str(text: &str, format: InputFormat) -> Result<PointCloud, Error> {
    let mut format = format;
    let mut seen_first = false;
    let mut points = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if format == InputFormat::Auto {
            format = if line.contains(',') {
                InputFormat::Csv
            } else {
                InputFormat::Whitespace
            };
        }
        let fields = split_fields(line, format);
        let parsed: Vec<Option<f64>> = fields.iter().map(|f| parse_number(f)).collect();

        if !seen_first {
            seen_first = true;
            if parsed.iter().any(Option::is_none) {
                continue;
            }
        }

        if fields.len() != 3 {
            return Err(Error::parse(
                line_no,
                format!("expected 3 fields, found {}", fields.len()),
            ));
        }
        let mut xyz = [0.0; 3];
        for (k, (value, field)) in parsed.iter().zip(&fields).enumerate() {
            xyz[k] = value.ok_or_else(|| {
                Error::parse(
                    line_no,
                    format!("field {} is not a finite number: '{field}'", k + 1),
                )
            })?;
        }
        points.push(Vec3::from(xyz));
    }

    PointCloud::new(points)
}

fn split_fields(line: &str, format: InputFormat) -> Vec<&str> {
    match format {
        InputFormat::Csv => line.split(',').map(str::trim).collect(),
        _ => line.split_whitespace().collect(),
    }
}

/// Plain decimal or scientific notation; rejects inf/nan spellings.
fn parse_number(field: &str) -> Option<f64> {
    let looks_numeric = !field.is_empty()
        && field
            .bytes()
            .all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E'));
    if !looks_numeric {
        return None;
    }
    field.parse::<f64>().ok().filter(|v| v.is_finite())
}
