//! Named, re-runnable property suites producing deterministic reports.
//!
//! Each check carries the outcome it is expected to have on the model. A
//! report is `MixedWithWitnesses` exactly when some check disagrees with its
//! expectation; `Data` checks are computed and reported but never disagree.
//! Expectations that differ from the literal statement (out-of-hypothesis
//! finite models, corrected formulas) say why in the check's note.

mod dsc;
mod kcubes;
mod maps;
mod thin;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fault::Fault;
use crate::ideal::Ideal;
use crate::verdict::Verdict;

pub use dsc::suite_dsc;
pub use kcubes::suite_kcubes;
pub use maps::suite_maps;
pub use thin::{check_lemma_thin, check_nonthick_bounded, check_all_slowly_oscillating, suite_thin};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Expectation {
    Positive,
    Failure,
    Data,
}

impl Expectation {
    fn from_bool(positive: bool) -> Self {
        if positive {
            Expectation::Positive
        } else {
            Expectation::Failure
        }
    }
}

/// Which of the two ideal balleans a suite runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Variant {
    PointIdeal,
    Iary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub label: String,
    pub statement: String,
    pub expectation: Expectation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn agrees(&self) -> bool {
        match (self.expectation, &self.verdict) {
            (Expectation::Data, _) => true,
            (_, None) => false,
            (Expectation::Positive, Some(v)) => v.is_positive(),
            (Expectation::Failure, Some(v)) => v.is_failure(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum SuiteModel {
    Ballean { ideal: Ideal, variant: Variant },
    Ideal { ideal: Ideal },
    IdealAt { ideal: Ideal, x: u32 },
    Omega { horizon: u32, x: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "camelCase")]
pub enum Overall {
    Holds,
    VerifiedToHorizon { horizon: u32 },
    MixedWithWitnesses { disagreements: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteReport {
    pub suite: &'static str,
    pub model: SuiteModel,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
    /// Whether the model satisfies the hypotheses of the suite's statements.
    pub in_hypothesis: bool,
    pub checks: Vec<Check>,
    pub overall: Overall,
}

impl SuiteReport {
    pub fn check(&self, label: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn is_mixed(&self) -> bool {
        matches!(self.overall, Overall::MixedWithWitnesses { .. })
    }
}

struct Builder {
    checks: Vec<Check>,
}

impl Builder {
    fn new() -> Self {
        Builder { checks: Vec::new() }
    }

    fn push(&mut self, label: &str, statement: &str, expectation: Expectation, verdict: Verdict) -> &mut Check {
        self.checks.push(Check {
            label: label.to_string(),
            statement: statement.to_string(),
            expectation,
            verdict: Some(verdict),
            note: None,
        });
        self.checks.last_mut().expect("just pushed")
    }

    /// Records a computation that may fail; an error leaves no verdict and
    /// counts as a disagreement unless the check is `Data`.
    fn push_result(
        &mut self,
        label: &str,
        statement: &str,
        expectation: Expectation,
        verdict: Result<Verdict, Error>,
    ) -> &mut Check {
        match verdict {
            Ok(v) => self.push(label, statement, expectation, v),
            Err(e) => {
                let check = self.unavailable(label, statement, &e.to_string());
                check.expectation = expectation;
                check
            }
        }
    }

    fn unavailable(&mut self, label: &str, statement: &str, note: &str) -> &mut Check {
        self.checks.push(Check {
            label: label.to_string(),
            statement: statement.to_string(),
            expectation: Expectation::Data,
            verdict: None,
            note: Some(note.to_string()),
        });
        self.checks.last_mut().expect("just pushed")
    }

    fn finish(self, suite: &'static str, model: SuiteModel, fault: Option<Fault>, in_hypothesis: bool) -> SuiteReport {
        let disagreements: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.agrees())
            .map(|c| c.label.clone())
            .collect();
        let horizon = self
            .checks
            .iter()
            .filter_map(|c| match c.verdict {
                Some(Verdict::VerifiedToHorizon { horizon, .. }) => Some(horizon),
                _ => None,
            })
            .min();
        let overall = if !disagreements.is_empty() {
            Overall::MixedWithWitnesses { disagreements }
        } else if let Some(horizon) = horizon {
            Overall::VerifiedToHorizon { horizon }
        } else {
            Overall::Holds
        };
        SuiteReport {
            suite,
            model,
            fault,
            in_hypothesis,
            checks: self.checks,
            overall,
        }
    }
}

trait NoteExt {
    fn note(&mut self, note: &str);
}

impl NoteExt for Check {
    fn note(&mut self, note: &str) {
        self.note = Some(note.to_string());
    }
}
