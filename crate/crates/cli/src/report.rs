//! Tabular command results and their three renderings.
//!
//! Every cell is a string, so integers of any width and rationals (`p/q`)
//! survive JSON and CSV unchanged.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Scalar results as ordered `(key, value)` pairs.
    pub summary: Vec<(String, String)>,
    pub verdict: Option<Verdict>,
}

#[derive(Debug)]
pub struct ReportParseError(pub String);

impl std::fmt::Display for ReportParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ReportParseError {}

const TAG_SUMMARY: &str = "#summary";
const TAG_VERDICT: &str = "#verdict";
const TAG_COMMAND: &str = "#command";

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Report {
            command: command.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            summary: Vec::new(),
            verdict: None,
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.summary.push((key.to_string(), value.to_string()));
    }

    pub fn verdict(&mut self, pass: bool) {
        self.verdict = Some(Verdict::from_bool(pass));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (k, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if k + 1 == cells.len() {
                    s.push_str(cell);
                } else {
                    let _ = write!(s, "{cell:<w$}  ");
                }
            }
            s.push('\n');
            s
        };
        let mut out = format!("command: {}\n", self.command);
        if !self.rows.is_empty() {
            out.push_str(&line(&self.columns));
            for row in &self.rows {
                out.push_str(&line(row));
            }
        }
        for (k, v) in &self.summary {
            let _ = writeln!(out, "{k}: {v}");
        }
        if let Some(v) = self.verdict {
            let _ = writeln!(out, "verdict: {}", v.as_str());
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ReportParseError> {
        serde_json::from_str(text).map_err(|e| ReportParseError(e.to_string()))
    }

    /// Header row of column names, then the data rows, then trailer records
    /// tagged `#summary`, `#verdict` and `#command`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        let result: csv::Result<()> = (|| {
            w.write_record(&self.columns)?;
            for row in &self.rows {
                w.write_record(row)?;
            }
            for (k, v) in &self.summary {
                w.write_record([TAG_SUMMARY, k, v])?;
            }
            if let Some(v) = self.verdict {
                w.write_record([TAG_VERDICT, v.as_str()])?;
            }
            w.write_record([TAG_COMMAND, &self.command])?;
            Ok(())
        })();
        result.expect("writing to memory cannot fail");
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
    }

    pub fn from_csv(text: &str) -> Result<Self, ReportParseError> {
        let err = |m: String| ReportParseError(m);
        let mut r = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .from_reader(text.as_bytes());
        let mut records = r.records();
        let columns: Vec<String> = match records.next() {
            Some(rec) => rec.map_err(|e| err(e.to_string()))?.iter().map(String::from).collect(),
            None => return Err(err("missing header row".into())),
        };
        let mut report = Report {
            command: String::new(),
            columns,
            rows: Vec::new(),
            summary: Vec::new(),
            verdict: None,
        };
        let mut command = None;
        for rec in records {
            let rec = rec.map_err(|e| err(e.to_string()))?;
            let fields: Vec<String> = rec.iter().map(String::from).collect();
            match fields.first().map(String::as_str) {
                Some(TAG_SUMMARY) if fields.len() == 3 => {
                    report.summary.push((fields[1].clone(), fields[2].clone()))
                }
                Some(TAG_VERDICT) if fields.len() == 2 => {
                    report.verdict = Some(match fields[1].as_str() {
                        "pass" => Verdict::Pass,
                        "fail" => Verdict::Fail,
                        other => return Err(err(format!("unknown verdict {other:?}"))),
                    })
                }
                Some(TAG_COMMAND) if fields.len() == 2 => command = Some(fields[1].clone()),
                _ if fields.len() == report.columns.len() => report.rows.push(fields),
                _ => return Err(err(format!("record has {} fields, expected {}", fields.len(), report.columns.len()))),
            }
        }
        report.command = command.ok_or_else(|| err("missing #command record".into()))?;
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("counting", &["lhs", "rhs", "holds"]);
        r.row(vec!["400".into(), "405".into(), "true".into()]);
        r.note("budget", "3/2");
        r.verdict(true);
        r
    }

    #[test]
    fn text_layout() {
        assert_eq!(
            sample().to_text(),
            "command: counting\nlhs  rhs  holds\n400  405  true\nbudget: 3/2\nverdict: pass\n"
        );
    }

    #[test]
    fn csv_has_header_first_and_round_trips() {
        let csv = sample().to_csv();
        assert!(csv.starts_with("lhs,rhs,holds\n"));
        assert_eq!(Report::from_csv(&csv).unwrap(), sample());
    }

    #[test]
    fn json_round_trips() {
        assert_eq!(Report::from_json(&sample().to_json()).unwrap(), sample());
    }
}
