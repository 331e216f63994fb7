//! Machine-readable pass/fail records for verification runs.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of one assertion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// How many objects the assertion was evaluated on.
    pub cases: usize,
    /// First offending entry, when the assertion fails.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, cases: usize) -> Self {
        Check {
            name: name.into(),
            passed: true,
            cases,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, cases: usize, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            cases,
            witness: Some(witness.into()),
        }
    }

    /// Passes iff `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, cases: usize, witness: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed: witness.is_none(),
            cases,
            witness,
        }
    }
}

/// A list of checks under one heading.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Merges checks sharing a name, summing cases and keeping the first witness.
    pub fn collapsed(&self) -> Report {
        let mut out: Vec<Check> = Vec::new();
        for c in &self.checks {
            match out.iter_mut().find(|o| o.name == c.name) {
                Some(o) => {
                    o.cases += c.cases;
                    if !c.passed && o.passed {
                        o.passed = false;
                        o.witness = c.witness.clone();
                    }
                }
                None => out.push(c.clone()),
            }
        }
        Report {
            title: self.title.clone(),
            checks: out,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "  [{tag}] {} ({} cases)", c.name, c.cases)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
