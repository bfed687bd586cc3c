//! Verification reports: one entry per axiom, with a witness on failure.

use serde::{Deserialize, Serialize};

use crate::exactla::{Matrix, Scalar};

/// Where an identity broke: the basis indices involved and both evaluated sides.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Basis indices, in the order described by `location`.
    pub indices: Vec<usize>,
    pub location: String,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed: true,
            witness: None,
            note: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Witness>, note: Option<String>) -> Check {
        Check {
            name: name.into(),
            passed: false,
            witness,
            note,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Check {
        self.note = Some(note.into());
        self
    }

    /// A result reported for information only, e.g. an identity that is not
    /// a theorem for the structure at hand.
    pub fn is_informational(&self) -> bool {
        self.note.as_deref().is_some_and(|n| n.starts_with("informational"))
    }

    /// Compares two linear maps column by column; the first differing basis
    /// column becomes the witness.
    pub fn maps_equal(name: impl Into<String>, location: &str, lhs: &Matrix, rhs: &Matrix) -> Check {
        Check::maps_equal_at(name, location, &[], lhs, rhs)
    }

    /// Like [`Check::maps_equal`], prefixing the witness indices with `prefix`
    /// (for families of identities indexed by a basis element of the algebra).
    pub fn maps_equal_at(
        name: impl Into<String>,
        location: &str,
        prefix: &[usize],
        lhs: &Matrix,
        rhs: &Matrix,
    ) -> Check {
        let name = name.into();
        if lhs.shape() != rhs.shape() {
            return Check::fail(
                name,
                None,
                Some(format!("shape {:?} vs {:?}", lhs.shape(), rhs.shape())),
            );
        }
        match lhs.first_differing_column(rhs) {
            None => Check::pass(name),
            Some(j) => {
                let mut indices = prefix.to_vec();
                indices.push(j);
                Check::fail(
                    name,
                    Some(Witness {
                        indices,
                        location: location.to_string(),
                        lhs: lhs.column(j),
                        rhs: rhs.column(j),
                    }),
                    None,
                )
            }
        }
    }

    pub fn condition(name: impl Into<String>, ok: bool, note: impl Into<String>) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, None, Some(note.into()))
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Collapses a family of checks into one entry named `name`: it passes iff
    /// all members pass, and otherwise carries the first failure's witness.
    pub fn push_all(&mut self, name: &str, checks: impl IntoIterator<Item = Check>) {
        let mut first_failure = None;
        for c in checks {
            if !c.passed {
                first_failure = Some(c);
                break;
            }
        }
        match first_failure {
            None => self.push(Check::pass(name)),
            Some(c) => {
                let note = match c.note {
                    Some(n) => Some(format!("{}: {n}", c.name)),
                    None if c.name != name => Some(c.name),
                    None => None,
                };
                self.push(Check::fail(name, c.witness, note))
            }
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Like [`Report::all_passed`], ignoring informational results.
    pub fn claims_hold(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.is_informational())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True if the named check exists and passed.
    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        let failed: Vec<&str> = self.failures().map(|c| c.name.as_str()).collect();
        if failed.is_empty() {
            format!("{}: all {} checks pass", self.subject, self.checks.len())
        } else {
            format!("{}: failed {}", self.subject, failed.join(", "))
        }
    }
}
