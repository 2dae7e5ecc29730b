use std::fmt;

use serde::Serialize;

use crate::arith::WindowDiff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

const MAX_EXAMPLES: usize = 8;

/// Tally of one verification routine.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub inconclusive: usize,
    /// First few failing or uncertified instances.
    pub examples: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            checked: 0,
            failed: 0,
            inconclusive: 0,
            examples: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn status(&self) -> Status {
        if self.failed > 0 {
            Status::Fail
        } else if self.inconclusive > 0 || self.checked == 0 {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(describe());
            }
        }
    }

    pub fn record_uncertified(&mut self, describe: impl FnOnce() -> String) {
        self.checked += 1;
        self.inconclusive += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(format!("uncertified: {}", describe()));
        }
    }

    /// Folds a window comparison into the tally.
    pub fn record_diff(&mut self, diff: &WindowDiff, label: impl Fn() -> String) {
        let bad = diff.mismatched.len() + diff.uncertified.len();
        self.checked += diff.checked;
        self.failed += diff.mismatched.len();
        self.inconclusive += diff.uncertified.len();
        if bad > 0 && self.examples.len() < MAX_EXAMPLES {
            let first = diff.mismatched.first().map(|p| format!("mismatch at {p:?}"));
            let first = first.or_else(|| diff.uncertified.first().map(|p| format!("uncertified at {p:?}")));
            self.examples.push(format!("{}: {}", label(), first.unwrap_or_default()));
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        self.inconclusive += other.inconclusive;
        for e in other.examples {
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(format!("{}: {e}", other.name));
            }
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} checked, {} failed, {} uncertified)",
            self.name,
            self.status(),
            self.checked,
            self.failed,
            self.inconclusive
        )
    }
}
