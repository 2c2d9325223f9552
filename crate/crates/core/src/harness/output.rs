//! JSON and CSV emission. CSV files start with a `# schema:` comment line,
//! followed by the fixed header `checker,lhs,rhs,slack,verdict,fingerprint`.

use std::io::Write;

use serde::Serialize;

use super::config::OutputFormat;
use crate::error::{Error, Result};
use crate::inequalities::InequalityReport;

pub const CSV_SCHEMA: &str = "monogamy.reports.csv/v1";
pub const CSV_COLUMNS: [&str; 6] = ["checker", "lhs", "rhs", "slack", "verdict", "fingerprint"];

pub fn write_json<T: Serialize, W: Write>(doc: &T, mut w: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut w, doc).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(w)?;
    Ok(())
}

pub fn write_csv<'a, W: Write>(
    reports: impl IntoIterator<Item = &'a InequalityReport>,
    mut w: W,
) -> Result<()> {
    writeln!(w, "# schema: {CSV_SCHEMA}")?;
    let mut out = csv::Writer::from_writer(w);
    let io = |e: csv::Error| Error::Io(e.to_string());
    out.write_record(CSV_COLUMNS).map_err(io)?;
    for r in reports {
        out.write_record([
            r.name.clone(),
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.slack.to_string(),
            r.verdict.to_string(),
            r.state_fingerprint.clone(),
        ])
        .map_err(io)?;
    }
    out.flush()?;
    Ok(())
}

/// Writes `doc` as JSON, or its reports as CSV.
pub fn emit<'a, T: Serialize, W: Write>(
    doc: &T,
    reports: impl IntoIterator<Item = &'a InequalityReport>,
    format: OutputFormat,
    w: W,
) -> Result<()> {
    match format {
        OutputFormat::Json => write_json(doc, w),
        OutputFormat::Csv => write_csv(reports, w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let reports = [
            InequalityReport::at_most("ckw", 0.5, 1.0, 1e-9, "abcd"),
            InequalityReport::at_most("x,y", 1.0, 1.0, 1e-9, "ef"),
        ];
        let mut buf = Vec::new();
        write_csv(&reports, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# schema: monogamy.reports.csv/v1");
        assert_eq!(lines[1], "checker,lhs,rhs,slack,verdict,fingerprint");
        assert_eq!(lines[2], "ckw,0.5,1,0.5,holds,abcd");
        assert_eq!(lines[3], "\"x,y\",1,1,0,saturated,ef");
    }

    #[test]
    fn json_ends_with_newline() {
        let mut buf = Vec::new();
        write_json(
            &InequalityReport::at_most("a", 0.0, 1.0, 1e-9, ""),
            &mut buf,
        )
        .unwrap();
        assert!(buf.ends_with(b"}\n"));
    }
}
