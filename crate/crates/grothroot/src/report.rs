use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

/// Outcome of one command: echoed inputs, structured results, and every check that ran.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    pub seed: u64,
    /// Human-readable lines; not part of the JSON form.
    #[serde(skip)]
    pub text: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, seed: u64) -> Self {
        Self { command: command.into(), inputs, results: Value::Null, checks: Vec::new(), seed, text: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, details: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, details: details.into() });
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.text {
            out.push_str(l);
            out.push('\n');
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{}  {}: {}\n", tag, c.name, c.details));
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
