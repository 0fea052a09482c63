use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::tables::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Result of one check. A failing report always carries a counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check_name: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub summary: String,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    check_name: &'a str,
    params: &'a BTreeMap<String, String>,
    verdict: Verdict,
    summary: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// One JSON object; `elapsed_ms` only when `timings` is set, so that
    /// output is otherwise reproducible byte for byte.
    pub fn to_json(&self, timings: bool) -> String {
        serde_json::to_string(&JsonReport {
            check_name: &self.check_name,
            params: &self.params,
            verdict: self.verdict,
            summary: &self.summary,
            counterexample: self.counterexample.as_ref(),
            elapsed_ms: timings.then_some(self.elapsed.as_millis()),
        })
        .expect("serializable")
    }

    pub fn to_text(&self, timings: bool) -> String {
        let mut line = format!(
            "{:<4} {}",
            self.verdict.to_string().to_uppercase(),
            self.check_name
        );
        if !self.params.is_empty() {
            line.push_str(&format!(" [{}]", self.params_string()));
        }
        if !self.summary.is_empty() {
            line.push_str(": ");
            line.push_str(&self.summary);
        }
        if timings {
            line.push_str(&format!(" ({} ms)", self.elapsed.as_millis()));
        }
        if let Some(c) = &self.counterexample {
            line.push_str(&format!(
                "\n     counterexample: {}\n     expected: {}\n     actual:   {}",
                c.input, c.expected, c.actual
            ));
        }
        line
    }
}

/// Renders a report stream; text and JSON end each report with a newline.
pub fn render_reports(reports: &[CheckReport], format: Format, timings: bool) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&r.to_text(timings));
                out.push('\n');
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            out.push_str(&format!(
                "{} checks, {} passed, {} failed\n",
                reports.len(),
                reports.len() - failed,
                failed
            ));
            out
        }
        Format::Json => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&r.to_json(timings));
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::CRLF)
                .from_writer(Vec::new());
            let mut header = vec![
                "check_name",
                "params",
                "verdict",
                "summary",
                "input",
                "expected",
                "actual",
            ];
            if timings {
                header.push("elapsed_ms");
            }
            w.write_record(&header).expect("in-memory write");
            for r in reports {
                let c = r.counterexample.clone().unwrap_or(Counterexample {
                    input: String::new(),
                    expected: String::new(),
                    actual: String::new(),
                });
                let mut row = vec![
                    r.check_name.clone(),
                    r.params_string(),
                    r.verdict.to_string(),
                    r.summary.clone(),
                    c.input,
                    c.expected,
                    c.actual,
                ];
                if timings {
                    row.push(r.elapsed.as_millis().to_string());
                }
                w.write_record(&row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    }
}
