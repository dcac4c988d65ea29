//! Pass/fail reporting for identity verification suites.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Outcome of one verified identity instance.
#[derive(Clone, Debug)]
pub struct Check {
    /// Which identity was checked, e.g. `"gamma degree-sum vs stirling1"`.
    pub name: String,
    /// Parameter values the instance was run at, e.g. `"p=3 m=1"`.
    pub params: String,
    pub pass: bool,
    /// Counterexample description for failures.
    pub detail: Option<String>,
}

/// A batch of checks from one verification suite.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&mut self, name: &str, params: String) {
        self.checks.push(Check {
            name: String::from(name),
            params,
            pass: true,
            detail: None,
        });
    }

    pub fn fail(&mut self, name: &str, params: String, detail: String) {
        self.checks.push(Check {
            name: String::from(name),
            params,
            pass: false,
            detail: Some(detail),
        });
    }

    /// Record an equality check, keeping the counterexample on mismatch.
    pub fn eq<T: PartialEq + fmt::Debug>(&mut self, name: &str, params: String, lhs: T, rhs: T) {
        if lhs == rhs {
            self.ok(name, params);
        } else {
            self.fail(name, params, alloc::format!("{lhs:?} != {rhs:?}"));
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.pass)
    }

    /// Fold another suite's checks into this one.
    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}
