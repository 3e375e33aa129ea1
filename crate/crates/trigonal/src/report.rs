//! Structured check reports shared by the CLI and the C ABI.
//!
//! A report is a command name, its parameters, an ordered list of named
//! checks with `pass` / `fail` / `info` status, and a summary that is
//! `fail` exactly when some check failed. Field ordering is deterministic
//! (parameters are kept sorted), so identical runs serialize to identical
//! bytes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    command: String,
    parameters: BTreeMap<String, String>,
    checks: Vec<Check>,
    summary: Status,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            parameters: BTreeMap::new(),
            checks: Vec::new(),
            summary: Status::Pass,
        }
    }

    pub fn set_param(&mut self, key: &str, value: impl fmt::Display) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn with_param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.set_param(key, value);
        self
    }

    /// Appends a check and folds its status into the summary.
    pub fn record(&mut self, name: impl Into<String>, status: Status, details: impl Into<String>) {
        if status == Status::Fail {
            self.summary = Status::Fail;
        }
        self.checks.push(Check {
            name: name.into(),
            status,
            details: details.into(),
        });
    }

    pub fn pass(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.record(name, Status::Pass, details);
    }

    pub fn fail(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.record(name, Status::Fail, details);
    }

    pub fn info(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.record(name, Status::Info, details);
    }

    /// `pass` when `ok`, `fail` otherwise, same details either way.
    pub fn outcome(&mut self, name: impl Into<String>, ok: bool, details: impl Into<String>) {
        self.record(name, if ok { Status::Pass } else { Status::Fail }, details);
    }

    pub fn command(&self) -> &str {
        &self.command
    }

    pub fn parameters(&self) -> &BTreeMap<String, String> {
        &self.parameters
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn passed(&self) -> bool {
        self.summary == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        for (key, value) in &self.parameters {
            writeln!(f, "{key}: {value}")?;
        }
        writeln!(f)?;
        for check in &self.checks {
            if check.details.is_empty() {
                writeln!(f, "{}  {}", check.status, check.name)?;
            } else {
                writeln!(f, "{}  {}: {}", check.status, check.name, check.details)?;
            }
        }
        writeln!(f)?;
        write!(f, "summary: {}", self.summary)
    }
}
