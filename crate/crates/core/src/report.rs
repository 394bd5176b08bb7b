//! Named pass/fail results collected by the certification routines.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// A randomized test ran out of attempts; neither pass nor fail.
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

/// An ordered list of checks. Every check is mandatory.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertReport {
    pub checks: Vec<Check>,
}

impl CertReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), status, detail: detail.into() });
    }

    pub fn pass_if(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.push(name, Status::from_bool(ok), detail);
    }

    /// Records the outcome of a computation that may itself fail; an
    /// `Inconclusive` error maps to that status, any other error to a failure.
    pub fn record(&mut self, name: &str, outcome: crate::Result<(bool, String)>) {
        match outcome {
            Ok((ok, detail)) => self.pass_if(name, ok, detail),
            Err(crate::Error::Inconclusive) => self.push(name, Status::Inconclusive, "randomized test inconclusive"),
            Err(e) => self.push(name, Status::Fail, e.to_string()),
        }
    }

    pub fn extend(&mut self, other: CertReport) {
        self.checks.extend(other.checks);
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// `Fail` if anything failed, else `Inconclusive` if anything was, else `Pass`.
    pub fn verdict(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.iter().any(|c| c.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status != Status::Pass)
    }
}
