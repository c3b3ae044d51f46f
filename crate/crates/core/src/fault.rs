//! Seeded formula mutations for exercising the theorem suites.
//!
//! Each variant corrupts exactly one formula. A healthy suite run must flag
//! at least one check as disagreeing when its model carries the fault.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Fault {
    /// Point-ideal hyperballs use `A \ K ⊆ Z` instead of `A \ K ⊊ Z`.
    ExpPointIdealNonStrict,
    /// I-ary hyperballs admit the empty set.
    ExpIaryAllowsEmpty,
    /// Point-ideal balls keep only radius points at or above the centre,
    /// breaking symmetry.
    PointIdealOneSided,
    /// Point-ideal balls around a point of the radius omit the point itself.
    PointIdealDropsCenter,
    /// Cartesian balls around the zero function collapse to `{0}`.
    CartesianIsolatesZero,
    /// Cartesian balls only remove radius points, never add them.
    CartesianDropsAdditions,
    /// The k-cube embedding puts its even point two above the odd minimum.
    KcubeShiftedEven,
    /// The k-cube radius map sends `[0, b]` to `[0, 2b]` instead of `[0, 2b + 1]`.
    KcubeShrunkRadius,
    /// Quotient cosets relate `Y, Z` when `Y ∪ Z ∈ I` rather than `Y △ Z ∈ I`.
    QuotientByUnion,
}

impl Fault {
    pub const ALL: [Fault; 9] = [
        Fault::ExpPointIdealNonStrict,
        Fault::ExpIaryAllowsEmpty,
        Fault::PointIdealOneSided,
        Fault::PointIdealDropsCenter,
        Fault::CartesianIsolatesZero,
        Fault::CartesianDropsAdditions,
        Fault::KcubeShiftedEven,
        Fault::KcubeShrunkRadius,
        Fault::QuotientByUnion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fault::ExpPointIdealNonStrict => "expPointIdealNonStrict",
            Fault::ExpIaryAllowsEmpty => "expIaryAllowsEmpty",
            Fault::PointIdealOneSided => "pointIdealOneSided",
            Fault::PointIdealDropsCenter => "pointIdealDropsCenter",
            Fault::CartesianIsolatesZero => "cartesianIsolatesZero",
            Fault::CartesianDropsAdditions => "cartesianDropsAdditions",
            Fault::KcubeShiftedEven => "kcubeShiftedEven",
            Fault::KcubeShrunkRadius => "kcubeShrunkRadius",
            Fault::QuotientByUnion => "quotientByUnion",
        }
    }

    pub fn from_name(name: &str) -> Option<Fault> {
        Fault::ALL.into_iter().find(|f| f.name() == name)
    }
}

pub(crate) fn active(fault: Option<Fault>, which: Fault) -> bool {
    fault == Some(which)
}
