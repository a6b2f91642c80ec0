//! JSON and CSV report writers. Both list rows in corpus order with the
//! columns of [`COLUMNS`]; JSON additionally carries the summary.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::run::{Row, RunReport, Summary, COLUMNS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown report format {s:?}; expected json or csv")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("writing JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("writing CSV: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Serialize)]
struct JsonReport<'a> {
    rows: &'a [Row],
    summary: &'a Summary,
}

pub fn write_json<W: Write>(report: &RunReport, mut out: W) -> Result<(), ReportError> {
    let doc = JsonReport {
        rows: &report.rows,
        summary: &report.summary,
    };
    serde_json::to_writer_pretty(&mut out, &doc)?;
    out.write_all(b"\n").map_err(serde_json::Error::io)?;
    Ok(())
}

/// The header is written explicitly so an empty report is still a valid CSV.
pub fn write_csv<W: Write>(rows: &[Row], out: W) -> Result<(), ReportError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(COLUMNS)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_report<W: Write>(
    report: &RunReport,
    format: Format,
    out: W,
) -> Result<(), ReportError> {
    match format {
        Format::Json => write_json(report, out),
        Format::Csv => write_csv(&report.rows, out),
    }
}

/// Writes the report to `path`; IO failures name the path.
pub fn emit_report(report: &RunReport, format: Format, path: &Path) -> Result<(), ReportError> {
    let io_err = |source| ReportError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut out = BufWriter::new(File::create(path).map_err(io_err)?);
    write_report(report, format, &mut out).map_err(|e| match e {
        ReportError::Json(j) if j.is_io() => io_err(io::Error::from(j)),
        other => other,
    })?;
    out.flush().map_err(io_err)
}
