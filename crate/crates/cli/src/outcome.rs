use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// What a command produced: named checks, a machine report, and human renderings.
#[derive(Debug, Default)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub report: Value,
    pub text: String,
    /// Header row first.
    pub csv: Option<Vec<Vec<String>>>,
}

impl Outcome {
    pub fn new() -> Outcome {
        Outcome { report: json!({}), ..Default::default() }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) -> &mut Self {
        self.checks.push(Check { name: name.into(), passed, detail: None });
        self
    }

    pub fn check_detail(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> &mut Self {
        self.checks.push(Check { name: name.into(), passed, detail: Some(detail.into()) });
        self
    }

    /// Adds `value` under `key` in the report object.
    pub fn put<T: Serialize>(&mut self, key: &str, value: T) -> &mut Self {
        let v = serde_json::to_value(value).expect("reports serialize");
        self.report.as_object_mut().expect("report is an object").insert(key.to_string(), v);
        self
    }

    pub fn line(&mut self, s: impl AsRef<str>) -> &mut Self {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}
