//! Machine-readable check reports shared by the verification entry points.

use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedTier,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub details: String,
}

impl Check {
    pub fn pass(id: impl Into<String>, details: impl Into<String>) -> Check {
        Check { id: id.into(), status: Status::Pass, details: details.into() }
    }
    pub fn fail(id: impl Into<String>, details: impl Into<String>) -> Check {
        Check { id: id.into(), status: Status::Fail, details: details.into() }
    }
    pub fn skipped(id: impl Into<String>, details: impl Into<String>) -> Check {
        Check { id: id.into(), status: Status::SkippedTier, details: details.into() }
    }
    pub fn expect(id: impl Into<String>, ok: bool, details: impl Into<String>) -> Check {
        if ok {
            Check::pass(id, details)
        } else {
            Check::fail(id, details)
        }
    }
}

/// A named bundle of checks.
#[derive(Clone, Debug, Serialize, Default)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Report {
        Report { name: name.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn expect(&mut self, id: impl Into<String>, ok: bool, details: impl Into<String>) {
        self.checks.push(Check::expect(id, ok, details));
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }
}
