//! Report records and their JSON and text renderings.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub name: String,
    /// Formula the record checks.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub momentum: Option<String>,
    pub data: Value,
}

impl Record {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, status: Status, data: Value) -> Self {
        Record { name: name.into(), anchor: anchor.into(), status, momentum: None, data }
    }

    pub fn at(mut self, momentum: impl Into<String>) -> Self {
        self.momentum = Some(momentum.into());
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub config: Value,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: Value, records: Vec<Record>) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Info => summary.info += 1,
            }
        }
        Report { schema: SCHEMA, tool: "bwf", version: env!("CARGO_PKG_VERSION"), config, records, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let at = r.momentum.as_deref().unwrap_or("-");
            out.push_str(&format!("{} {:<24} {}  [{}]\n", r.status.label(), at, r.name, r.anchor));
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} info\n",
            self.summary.pass, self.summary.fail, self.summary.info
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_and_layout() {
        let records = vec![
            Record::new("a", "x = x", Status::Pass, json!({"z": 1, "a": 2})),
            Record::new("b", "y = 0", Status::Fail, Value::Null).at("(1,2,2;m=4)"),
            Record::new("c", "-", Status::Info, Value::Null),
        ];
        let report = Report::new(json!({"command": "test"}), records);
        assert_eq!(report.summary, Summary { pass: 1, fail: 1, info: 1 });
        assert!(!report.passed());
        let text = report.to_json();
        assert!(text.starts_with("{\n  \"schema\": 1,"));
        assert!(text.find("\"a\": 2").unwrap() < text.find("\"z\": 1").unwrap());
        assert!(report.to_text().contains("FAIL (1,2,2;m=4)"));
    }
}
