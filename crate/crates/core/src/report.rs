//! Machine-readable verification reports.
//!
//! Every checker in the crate evaluates an identity exhaustively over tuples
//! of basis indices in lexicographic order and records the first tuple at
//! which the two sides differ.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::linalg::display_vec;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub indices: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, paper_ref: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            paper_ref: paper_ref.into(),
            status: Status::Pass,
            counterexample: None,
            detail: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        counterexample: Counterexample,
    ) -> Self {
        Check {
            status: Status::Fail,
            counterexample: Some(counterexample),
            ..Check::pass(name, paper_ref)
        }
    }

    pub fn skipped(name: impl Into<String>, paper_ref: impl Into<String>, why: impl Into<String>) -> Self {
        Check {
            status: Status::Skipped,
            detail: Some(why.into()),
            ..Check::pass(name, paper_ref)
        }
    }

    /// A pass/fail verdict without vector-valued sides; the counterexample
    /// carries the two compared descriptions.
    pub fn verdict(
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        ok: bool,
        indices: Vec<usize>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        if ok {
            Check::pass(name, paper_ref)
        } else {
            Check::fail(
                name,
                paper_ref,
                Counterexample {
                    indices,
                    lhs: vec![lhs.into()],
                    rhs: vec![rhs.into()],
                },
            )
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Evaluates `sides` on every tuple in `0..dims[0] × 0..dims[1] × …`
    /// (lexicographic) and stops at the first mismatch.
    pub fn exhaustive(
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        dims: &[usize],
        mut sides: impl FnMut(&[usize]) -> (Vec<Scalar>, Vec<Scalar>),
    ) -> Self {
        for idx in tuples(dims) {
            let (lhs, rhs) = sides(&idx);
            if lhs != rhs {
                return Check::fail(
                    name,
                    paper_ref,
                    Counterexample {
                        indices: idx,
                        lhs: display_vec(&lhs),
                        rhs: display_vec(&rhs),
                    },
                );
            }
        }
        Check::pass(name, paper_ref)
    }

    /// Like [`Check::exhaustive`] for membership-style conditions: `test`
    /// returns `None` when the condition holds, or the offending vector.
    pub fn exhaustive_membership(
        name: impl Into<String>,
        paper_ref: impl Into<String>,
        dims: &[usize],
        target: &str,
        mut test: impl FnMut(&[usize]) -> Option<Vec<Scalar>>,
    ) -> Self {
        for idx in tuples(dims) {
            if let Some(v) = test(&idx) {
                return Check::fail(
                    name,
                    paper_ref,
                    Counterexample {
                        indices: idx,
                        lhs: display_vec(&v),
                        rhs: vec![format!("not in {target}")],
                    },
                );
            }
        }
        Check::pass(name, paper_ref)
    }
}

/// All index tuples of the given shape in lexicographic order. An empty
/// shape yields the single empty tuple.
pub fn tuples(dims: &[usize]) -> Box<dyn Iterator<Item = Vec<usize>>> {
    if dims.is_empty() {
        return Box::new(std::iter::once(Vec::new()));
    }
    let ranges: Vec<std::ops::Range<usize>> = dims.iter().map(|&d| 0..d).collect();
    Box::new(ranges.into_iter().multi_cartesian_product())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
    pub checks: Vec<Check>,
    /// Computed facts that are reported but do not affect the verdict.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub informational: Vec<Check>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn inform(&mut self, check: Check) {
        self.informational.push(check);
    }

    /// Appends all checks, notes and warnings of `other`.
    pub fn extend(&mut self, other: VerificationReport) {
        self.notes.extend(other.notes);
        self.warnings.extend(other.warnings);
        self.checks.extend(other.checks);
        self.informational.extend(other.informational);
    }

    /// True when no non-skipped check failed.
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks
            .iter()
            .chain(&self.informational)
            .find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
