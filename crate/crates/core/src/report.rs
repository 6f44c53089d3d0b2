//! Structured pass/fail records for the verification suites.
//!
//! Reports serialize deterministically: parameters are kept in sorted maps,
//! case order follows execution order (which is itself deterministic), and
//! the only nondeterministic field is the optional timing.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// One verified case inside a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub info: String,
}

/// Rendered evidence for a failing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub location: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    pub cases_total: usize,
    pub details: Vec<Case>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_micros: Option<u64>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            parameters: BTreeMap::new(),
            status: Status::Pass,
            cases_total: 0,
            details: Vec::new(),
            counterexample: None,
            elapsed_micros: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn set_param(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    /// Record a passing case.
    pub fn pass_case(&mut self, name: impl Into<String>, info: impl Into<String>) {
        self.cases_total += 1;
        self.details.push(Case {
            name: name.into(),
            passed: true,
            info: info.into(),
        });
    }

    /// Record a failing case; the first failure pins the counterexample.
    pub fn fail_case(
        &mut self,
        name: impl Into<String>,
        location: BTreeMap<String, String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) {
        self.cases_total += 1;
        let name = name.into();
        let lhs = lhs.into();
        let rhs = rhs.into();
        self.details.push(Case {
            name: name.clone(),
            passed: false,
            info: format!("lhs = {lhs}; rhs = {rhs}"),
        });
        self.status = Status::Fail;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample { location, lhs, rhs });
        }
    }

    /// Record an equality case, failing with both sides rendered when unequal.
    pub fn expect_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        name: impl Into<String>,
        location: BTreeMap<String, String>,
        lhs: &T,
        rhs: &T,
    ) {
        if lhs == rhs {
            self.pass_case(name, String::new());
        } else {
            self.fail_case(name, location, lhs.to_string(), rhs.to_string());
        }
    }

    pub fn error(mut self, message: impl Into<String>) -> Self {
        self.status = Status::Error;
        self.details.push(Case {
            name: "error".into(),
            passed: false,
            info: message.into(),
        });
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    /// Fold a sub-report into an aggregate.
    pub fn absorb(&mut self, sub: &Report) {
        self.cases_total += sub.cases_total;
        match sub.status {
            Status::Pass => {}
            Status::Fail => {
                if self.status == Status::Pass {
                    self.status = Status::Fail;
                }
                if self.counterexample.is_none() {
                    self.counterexample = sub.counterexample.clone();
                }
            }
            Status::Error => self.status = Status::Error,
        }
        let failed = sub.details.iter().filter(|c| !c.passed).count();
        let info = if failed == 0 {
            format!("{} cases", sub.cases_total)
        } else {
            format!("{} cases, {failed} failed", sub.cases_total)
        };
        let params: Vec<String> = sub
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        self.details.push(Case {
            name: format!("{} ({})", sub.check, params.join(" ")),
            passed: sub.status == Status::Pass,
            info,
        });
    }
}

/// Convenience for building counterexample locations.
pub fn location(entries: &[(&str, String)]) -> BTreeMap<String, String> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}
