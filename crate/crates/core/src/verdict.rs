//! Three-valued check results with replayable witnesses.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::finset::FinSet;

/// Whether a check quantified over everything or only over a truncation window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Scope {
    Exhaustive,
    Horizon(u32),
}

impl Scope {
    /// The weaker of two scopes: combining evidence from a horizon window with
    /// anything yields horizon evidence.
    pub fn meet(self, other: Scope) -> Scope {
        match (self, other) {
            (Scope::Exhaustive, s) | (s, Scope::Exhaustive) => s,
            (Scope::Horizon(a), Scope::Horizon(b)) => Scope::Horizon(a.min(b)),
        }
    }
}

/// Machine-readable value attached to witnesses and evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Datum {
    Point(u32),
    Set(FinSet),
    Family(Vec<FinSet>),
    Tuple(Vec<Datum>),
    Count(u64),
    Flag(bool),
    Text(String),
}

impl Datum {
    pub fn pair(a: Datum, b: Datum) -> Datum {
        Datum::Tuple(alloc::vec![a, b])
    }
}

/// Conversion of points and radii into [`Datum`] for reports.
pub trait Describe {
    fn describe(&self) -> Datum;
}

impl Describe for u32 {
    fn describe(&self) -> Datum {
        Datum::Point(*self)
    }
}

impl Describe for FinSet {
    fn describe(&self) -> Datum {
        Datum::Set(*self)
    }
}

impl<A: Describe, B: Describe> Describe for (A, B) {
    fn describe(&self) -> Datum {
        Datum::pair(self.0.describe(), self.1.describe())
    }
}

impl<T: Describe> Describe for [T] {
    fn describe(&self) -> Datum {
        Datum::Tuple(self.iter().map(Describe::describe).collect())
    }
}

impl<T: Describe> Describe for Vec<T> {
    fn describe(&self) -> Datum {
        self.as_slice().describe()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum WitnessKind {
    EmptyFamily,
    NotDownwardClosed,
    NotUnionClosed,
    Improper,
    CenterOutsideBall,
    Asymmetric,
    NoMultiplicativeBound,
    ChainNotMonotone,
    Unbounded,
    NotLarge,
    NotThick,
    NotSmall,
    NotThin,
    NotSlowlyOscillating,
    NotCoarse,
    NotEffectivelyProper,
    NotInjective,
    NotSurjective,
    BallIdentityFails,
    SetMismatch,
    CountMismatch,
    PartitionMismatch,
    ImageShape,
    EquivalenceBroken,
    EscapeMissing,
    IsolatedPoints,
    Disconnected,
    UnexpectedOutcome,
}

/// A counterexample: its kind plus labelled data sufficient to replay it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub fields: Vec<(&'static str, Datum)>,
}

impl Witness {
    pub fn new(kind: WitnessKind) -> Self {
        Witness {
            kind,
            fields: Vec::new(),
        }
    }

    #[must_use]
    pub fn with(mut self, label: &'static str, value: Datum) -> Self {
        self.fields.push((label, value));
        self
    }

    pub fn field(&self, label: &str) -> Option<&Datum> {
        self.fields
            .iter()
            .find_map(|(l, v)| (*l == label).then_some(v))
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.fields.len() + 1))?;
        map.serialize_entry("kind", &self.kind)?;
        for (label, value) in &self.fields {
            map.serialize_entry(label, value)?;
        }
        map.end()
    }
}

/// Labelled data backing a positive verdict (witness radii, tables).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Evidence(pub Vec<(&'static str, Datum)>);

impl Evidence {
    pub fn none() -> Self {
        Evidence(Vec::new())
    }

    pub fn of(label: &'static str, value: Datum) -> Self {
        Evidence(alloc::vec![(label, value)])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&Datum> {
        self.0.iter().find_map(|(l, v)| (*l == label).then_some(v))
    }
}

impl Serialize for Evidence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (label, value) in &self.0 {
            map.serialize_entry(label, value)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "camelCase")]
pub enum Verdict {
    /// Proved by exhausting a finite model.
    Holds {
        #[serde(skip_serializing_if = "Evidence::is_empty")]
        evidence: Evidence,
    },
    /// No counterexample inside the horizon window; evidence only.
    VerifiedToHorizon {
        horizon: u32,
        #[serde(skip_serializing_if = "Evidence::is_empty")]
        evidence: Evidence,
    },
    FailsWithWitness { witness: Box<Witness> },
}

impl Verdict {
    pub fn positive(scope: Scope, evidence: Evidence) -> Verdict {
        match scope {
            Scope::Exhaustive => Verdict::Holds { evidence },
            Scope::Horizon(horizon) => Verdict::VerifiedToHorizon { horizon, evidence },
        }
    }

    pub fn pass(scope: Scope) -> Verdict {
        Verdict::positive(scope, Evidence::none())
    }

    pub fn fail(witness: Witness) -> Verdict {
        Verdict::FailsWithWitness {
            witness: Box::new(witness),
        }
    }

    pub fn from_bool(ok: bool, scope: Scope, witness: impl FnOnce() -> Witness) -> Verdict {
        if ok {
            Verdict::pass(scope)
        } else {
            Verdict::fail(witness())
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.is_failure()
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, Verdict::FailsWithWitness { .. })
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::FailsWithWitness { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn evidence(&self) -> Option<&Evidence> {
        match self {
            Verdict::Holds { evidence } | Verdict::VerifiedToHorizon { evidence, .. } => {
                Some(evidence)
            }
            Verdict::FailsWithWitness { .. } => None,
        }
    }

    /// Conjunction: the first failure wins, otherwise the weaker scope.
    pub fn and(self, other: Verdict) -> Verdict {
        match (&self, &other) {
            (Verdict::FailsWithWitness { .. }, _) => self,
            (_, Verdict::FailsWithWitness { .. }) => other,
            _ => Verdict::pass(self.scope().meet(other.scope())),
        }
    }

    fn scope(&self) -> Scope {
        match self {
            Verdict::VerifiedToHorizon { horizon, .. } => Scope::Horizon(*horizon),
            _ => Scope::Exhaustive,
        }
    }
}
