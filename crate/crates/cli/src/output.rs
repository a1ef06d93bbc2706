use std::fs;
use std::io::Write;
use std::path::Path;

use aztec20v_core::report::{Report, Status};

use crate::{Failure, Format};

pub fn to_csv(report: &Report) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(vec![]);
    let io = |e: csv::Error| Failure { code: 1, message: format!("cannot write CSV: {e}") };
    w.write_record(["model", "n", "k", "value", "status"]).map_err(io)?;
    for r in &report.records {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        };
        w.write_record([r.check.as_str(), r.param("n").unwrap_or(""), r.param("k").unwrap_or(""), &r.lhs, status])
            .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure { code: 1, message: format!("cannot write CSV: {e}") })?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

pub fn render(report: &Report, format: Format) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => to_csv(report)?,
        Format::Text => report.to_text(),
    })
}

pub fn emit(text: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure { code: 2, message: format!("cannot write {}: {e}", p.display()) }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure { code: 1, message: format!("cannot write output: {e}") })
        }
    }
}
