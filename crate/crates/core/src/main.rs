use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use fit3d::io::{
    emit_report, emit_svg, parse_points, summary, FitReport, InputFormat, InputSource, InputSpec,
};
use fit3d::{fit_line, Error, FitConfig, DEFAULT_REL_TOL};

/// Fit the optimal root-mean-square straight line to a group of 3D points.
#[derive(Debug, Parser)]
#[command(name = "fit3d", version)]
struct Args {
    /// Point file, or `-` for standard input.
    #[arg(long)]
    input: String,

    /// Input format: csv, ws (whitespace) or auto.
    #[arg(long, default_value = "auto")]
    format: InputFormat,

    /// Relative eigenvalue gap treated as a tie.
    #[arg(long = "tol-degeneracy", default_value_t = DEFAULT_REL_TOL, value_parser = positive_f64)]
    tol_degeneracy: f64,

    /// Fail (exit 4) if the best direction is not unique.
    #[arg(long)]
    strict: bool,

    /// Write the JSON report to a file, or `-` for standard output.
    #[arg(long)]
    json: Option<String>,

    /// Write an SVG plot of three projections.
    #[arg(long)]
    svg: Option<PathBuf>,

    /// Indent the JSON report.
    #[arg(long)]
    pretty: bool,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be a positive number, got {s}"))
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::EmptyCloud | Error::NonFinite => 2,
        Error::Io { .. } => 3,
        Error::Degenerate { .. } => 4,
        _ => 1,
    }
}

fn run(args: &Args) -> Result<(), Error> {
    let spec = InputSpec::new(InputSource::from_arg(&args.input), args.format);
    let cloud = parse_points(&spec)?;
    let config = FitConfig::default()
        .with_tolerance(args.tol_degeneracy)
        .strict(args.strict);
    let fit = fit_line(&cloud, &config)?;
    let report = FitReport::new(&fit, spec.source.name());

    let json_to_stdout = args.json.as_deref() == Some("-");
    if !json_to_stdout {
        print!("{}", summary(&report));
        if fit.classification.is_degenerate() {
            eprintln!(
                "warning: {} configuration, the reported direction is not unique",
                fit.classification
            );
        }
    }
    if let Some(target) = &args.json {
        let mut text = emit_report(&report, args.pretty);
        text.push('\n');
        if json_to_stdout {
            io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Error::Io {
                    path: "<stdout>".into(),
                    source: e,
                })?;
        } else {
            fs::write(target, text).map_err(|e| Error::Io {
                path: target.into(),
                source: e,
            })?;
        }
    }
    if let Some(path) = &args.svg {
        emit_svg(&cloud, &fit, path)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("fit3d: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
