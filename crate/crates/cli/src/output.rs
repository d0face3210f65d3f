//! Rendering of command results as text, JSON or CSV.

use std::time::Duration;

use rowvac::verify::VerificationReport;
use rowvac::{Error, Result};
use serde::Serialize;

use crate::Format;

pub fn json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Error::Invariant(format!("cannot serialize output: {e}")))
}

pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let fail = |e: &dyn std::fmt::Display| Error::Invariant(format!("cannot write csv: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| fail(&e))?;
    for row in rows {
        w.write_record(&row).map_err(|e| fail(&e))?;
    }
    let bytes = w.into_inner().map_err(|e| fail(&e))?;
    String::from_utf8(bytes).map_err(|e| fail(&e))
}

pub fn unsupported(command: &str, format: Format) -> Error {
    Error::Argument(format!("{command} cannot be rendered as {format:?}").to_lowercase())
}

fn millis(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1000.0)
}

pub fn reports(reports: &[VerificationReport], format: Format, timing: bool) -> Result<String> {
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                out.push_str(&format!("{status} {}", r.summary()));
                if timing {
                    out.push_str(&format!(" ({} ms)", millis(r.elapsed)));
                }
                out.push('\n');
                for f in r.failures.iter().take(3) {
                    out.push_str(&format!(
                        "  {}: {} expected {}, got {}\n",
                        f.check, f.input, f.expected, f.actual
                    ));
                }
                if r.failures.len() > 3 {
                    out.push_str(&format!("  ... {} more\n", r.failures.len() - 3));
                }
            }
            Ok(out)
        }
        Format::Json => json(reports),
        Format::Csv => csv(
            &["suite", "type", "rank", "checked", "failures", "elapsed_ms"],
            reports.iter().map(|r| {
                vec![
                    r.suite_name.clone(),
                    r.type_label.clone(),
                    r.rank.to_string(),
                    r.checked_count.to_string(),
                    r.failures.len().to_string(),
                    millis(r.elapsed),
                ]
            }),
        ),
        Format::Dot => Err(unsupported("verify", format)),
    }
}

/// The message printed on standard error for the first failing report.
pub fn first_failure(reports: &[VerificationReport]) -> Option<String> {
    let r = reports.iter().find(|r| !r.passed())?;
    let f = &r.failures[0];
    Some(format!(
        "{} failed on {}: {} at {}: expected {}, got {}",
        r.suite_name, r.type_label, f.check, f.input, f.expected, f.actual
    ))
}
