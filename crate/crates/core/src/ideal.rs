//! Ground sets and ideals of subsets.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::finset::FinSet;
use crate::verdict::{Datum, Scope, Verdict, Witness, WitnessKind};

/// Largest finite ground set; powerset sweeps are `2^20` at most.
pub const MAX_FINITE: u32 = 20;
/// Largest horizon window on the naturals.
pub const MAX_HORIZON: u32 = 32;

/// The support `X` of a ballean.
///
/// On the naturals only the window `[0, horizon)` is ever enumerated, and
/// interval radii `[0, n]` are restricted to `n < horizon / 2` so that a
/// set reaching the top of the window is never swallowed by a single radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum GroundSet {
    Finite(u32),
    Naturals { horizon: u32 },
}

impl GroundSet {
    pub fn check(self) -> Result<(), Error> {
        match self {
            GroundSet::Finite(size) if !(1..=MAX_FINITE).contains(&size) => Err(Error::GroundSize {
                size,
                max: MAX_FINITE,
            }),
            GroundSet::Naturals { horizon } if !(2..=MAX_HORIZON).contains(&horizon) => {
                Err(Error::HorizonSize {
                    horizon,
                    max: MAX_HORIZON,
                })
            }
            _ => Ok(()),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, GroundSet::Finite(_))
    }

    /// Number of enumerated elements: the size, or the horizon.
    pub fn window_size(self) -> u32 {
        match self {
            GroundSet::Finite(n) => n,
            GroundSet::Naturals { horizon } => horizon,
        }
    }

    pub fn window(self) -> FinSet {
        FinSet::range(0, self.window_size())
    }

    /// Number of interval radii `[0, n]` in the cofinal chain on the naturals.
    pub fn radius_horizon(self) -> u32 {
        match self {
            GroundSet::Finite(n) => n,
            GroundSet::Naturals { horizon } => (horizon / 2).max(1),
        }
    }

    pub fn scope(self) -> Scope {
        match self {
            GroundSet::Finite(_) => Scope::Exhaustive,
            GroundSet::Naturals { horizon } => Scope::Horizon(horizon),
        }
    }

    /// Every subset of the window, ascending.
    pub fn subsets(self) -> Result<Vec<FinSet>, Error> {
        let n = self.window_size();
        if n > MAX_FINITE {
            return Err(Error::WindowTooLarge { size: n });
        }
        Ok(self.window().subsets().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DescriptionRepr", into = "DescriptionRepr")]
pub enum IdealDescription {
    Principal(FinSet),
    SizeBelow(u32),
    GeneratedBy(Vec<FinSet>),
    Explicit(Vec<FinSet>),
    FrechetOnNaturals,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
enum DescriptionRepr {
    Principal(FinSet),
    SizeBelow(u32),
    GeneratedBy(Vec<FinSet>),
    Explicit(Vec<FinSet>),
    Frechet(bool),
}

impl TryFrom<DescriptionRepr> for IdealDescription {
    type Error = String;

    fn try_from(repr: DescriptionRepr) -> Result<Self, String> {
        Ok(match repr {
            DescriptionRepr::Principal(s) => IdealDescription::Principal(s),
            DescriptionRepr::SizeBelow(k) => IdealDescription::SizeBelow(k),
            DescriptionRepr::GeneratedBy(b) => IdealDescription::GeneratedBy(b),
            DescriptionRepr::Explicit(f) => IdealDescription::Explicit(f),
            DescriptionRepr::Frechet(true) => IdealDescription::FrechetOnNaturals,
            DescriptionRepr::Frechet(false) => {
                return Err(String::from("\"frechet\" must be true"));
            }
        })
    }
}

impl From<IdealDescription> for DescriptionRepr {
    fn from(d: IdealDescription) -> Self {
        match d {
            IdealDescription::Principal(s) => DescriptionRepr::Principal(s),
            IdealDescription::SizeBelow(k) => DescriptionRepr::SizeBelow(k),
            IdealDescription::GeneratedBy(b) => DescriptionRepr::GeneratedBy(b),
            IdealDescription::Explicit(f) => DescriptionRepr::Explicit(f),
            IdealDescription::FrechetOnNaturals => DescriptionRepr::Frechet(true),
        }
    }
}

/// A family of subsets of the ground set, described structurally.
///
/// Construction only checks that the description fits the ground set;
/// [`Ideal::validate`] decides whether the family really is a proper ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ideal {
    pub ground: GroundSet,
    #[serde(rename = "ideal")]
    pub description: IdealDescription,
}

impl Ideal {
    pub fn new(ground: GroundSet, description: IdealDescription) -> Result<Ideal, Error> {
        ground.check()?;
        let window = ground.window();
        let fits = |s: &FinSet| {
            if s.is_subset(window) {
                Ok(())
            } else {
                Err(Error::OutsideGround { set: *s })
            }
        };
        let description = match description {
            IdealDescription::Principal(s) => {
                fits(&s)?;
                IdealDescription::Principal(s)
            }
            IdealDescription::GeneratedBy(basis) => {
                basis.iter().try_for_each(fits)?;
                IdealDescription::GeneratedBy(basis)
            }
            IdealDescription::Explicit(mut family) => {
                family.iter().try_for_each(fits)?;
                family.sort_unstable();
                family.dedup();
                IdealDescription::Explicit(family)
            }
            IdealDescription::FrechetOnNaturals if ground.is_finite() => {
                return Err(Error::FrechetOnFiniteGround);
            }
            other => other,
        };
        Ok(Ideal {
            ground,
            description,
        })
    }

    pub fn principal(ground: GroundSet, generator: FinSet) -> Result<Ideal, Error> {
        Ideal::new(ground, IdealDescription::Principal(generator))
    }

    /// The finite ideal of all subsets of `0..size` avoiding `x`.
    pub fn maximal(size: u32, x: u32) -> Result<Ideal, Error> {
        let ground = GroundSet::Finite(size);
        Ideal::principal(ground, ground.window().without(x))
    }

    pub fn frechet(horizon: u32) -> Result<Ideal, Error> {
        Ideal::new(
            GroundSet::Naturals { horizon },
            IdealDescription::FrechetOnNaturals,
        )
    }

    /// Membership of `set` in the family.
    pub fn contains(&self, set: FinSet) -> bool {
        match &self.description {
            IdealDescription::Principal(s) => set.is_subset(*s),
            IdealDescription::SizeBelow(k) => set.len() < *k,
            IdealDescription::GeneratedBy(basis) => {
                set.is_subset(basis.iter().fold(FinSet::EMPTY, |acc, b| acc | *b))
            }
            IdealDescription::Explicit(family) => family.binary_search(&set).is_ok(),
            IdealDescription::FrechetOnNaturals => true,
        }
    }

    pub fn scope(&self) -> Scope {
        self.ground.scope()
    }

    /// Members lying inside the ground window, ascending.
    fn window_family(&self) -> Result<Vec<FinSet>, Error> {
        match &self.description {
            IdealDescription::Explicit(family) => Ok(family.clone()),
            IdealDescription::Principal(s) => Ok(s.subsets().collect()),
            _ => Ok(self
                .ground
                .subsets()?
                .into_iter()
                .filter(|s| self.contains(*s))
                .collect()),
        }
    }

    /// Checks downward closure, union closure and properness, in that order.
    ///
    /// Witnesses are the least offending set or pair in canonical order.
    pub fn validate(&self) -> Verdict {
        let scope = Scope::Exhaustive;
        let structural = matches!(
            self.description,
            IdealDescription::Principal(_)
                | IdealDescription::GeneratedBy(_)
                | IdealDescription::FrechetOnNaturals
        );
        if !self.ground.is_finite() && structural {
            return Verdict::pass(scope);
        }
        if let (false, IdealDescription::SizeBelow(k)) = (self.ground.is_finite(), &self.description)
        {
            // Finite sets of every size exist in the naturals, so only k <= 1 survives.
            return match *k {
                0 => Verdict::fail(Witness::new(WitnessKind::EmptyFamily)),
                1 => Verdict::pass(scope),
                k => {
                    let half = k.div_ceil(2);
                    Verdict::fail(
                        Witness::new(WitnessKind::NotUnionClosed)
                            .with("left", Datum::Set(FinSet::range(0, half)))
                            .with("right", Datum::Set(FinSet::range(half, k.min(64)))),
                    )
                }
            };
        }
        let Ok(family) = self.window_family() else {
            return Verdict::pass(self.scope());
        };
        let member = |s: FinSet| family.binary_search(&s).is_ok();
        if family.is_empty() {
            return Verdict::fail(Witness::new(WitnessKind::EmptyFamily));
        }
        for &a in &family {
            for x in a.iter() {
                let sub = a.without(x);
                if !member(sub) {
                    return Verdict::fail(
                        Witness::new(WitnessKind::NotDownwardClosed)
                            .with("member", Datum::Set(a))
                            .with("subset", Datum::Set(sub)),
                    );
                }
            }
        }
        let top = family.iter().fold(FinSet::EMPTY, |acc, s| acc | *s);
        if !member(top) {
            for (i, &a) in family.iter().enumerate() {
                for &b in &family[i + 1..] {
                    if !member(a | b) {
                        return Verdict::fail(
                            Witness::new(WitnessKind::NotUnionClosed)
                                .with("left", Datum::Set(a))
                                .with("right", Datum::Set(b)),
                        );
                    }
                }
            }
        }
        if self.ground.is_finite() && member(self.ground.window()) {
            return Verdict::fail(
                Witness::new(WitnessKind::Improper).with("ground", Datum::Set(self.ground.window())),
            );
        }
        Verdict::pass(scope)
    }

    /// Rewrites a valid ideal to `Principal(∪I)`; the Frechet ideal is kept.
    ///
    /// Invalid descriptions are rejected with the validator's witness.
    pub fn normalize(&self) -> Result<Ideal, Error> {
        if let Verdict::FailsWithWitness { witness } = self.validate() {
            return Err(Error::InvalidIdeal { witness });
        }
        if self.description == IdealDescription::FrechetOnNaturals {
            return Ok(self.clone());
        }
        let cover = self.cover();
        Ideal::principal(self.ground, cover)
    }

    /// Union of all members inside the window.
    pub fn cover(&self) -> FinSet {
        match &self.description {
            IdealDescription::Principal(s) => *s,
            IdealDescription::GeneratedBy(basis) => {
                basis.iter().fold(FinSet::EMPTY, |acc, b| acc | *b)
            }
            IdealDescription::FrechetOnNaturals => self.ground.window(),
            _ => self
                .window_family()
                .map(|f| f.iter().fold(FinSet::EMPTY, |acc, s| acc | *s))
                .unwrap_or(FinSet::EMPTY),
        }
    }

    /// Radii of the balleans built on this ideal, ascending.
    ///
    /// For the Frechet ideal these are the intervals `[0, n]`, a cofinal
    /// chain; otherwise every member (the ideal is finite).
    pub fn radii(&self) -> Vec<FinSet> {
        match &self.description {
            IdealDescription::FrechetOnNaturals => (0..self.ground.radius_horizon())
                .map(FinSet::interval_to)
                .collect(),
            _ => self.window_family().unwrap_or_default(),
        }
    }

    pub fn radii_form_chain(&self) -> bool {
        self.description == IdealDescription::FrechetOnNaturals
    }

    /// Points not covered by the ideal: the principal ultrafilters containing
    /// the dual filter. `A ∈ I` iff `A` misses every one of them.
    pub fn hat(&self) -> Result<FinSet, Error> {
        if !self.ground.is_finite() {
            return Err(Error::FiniteGroundRequired);
        }
        Ok(self.ground.window() - self.cover())
    }

    /// Least number of maximal ideals intersecting to this ideal.
    pub fn iota(&self) -> Result<u32, Error> {
        Ok(self.hat()?.len())
    }

    pub fn is_maximal(&self) -> bool {
        self.iota().is_ok_and(|n| n == 1)
    }

    /// Every member inside the window, ascending. Errors for windows too large
    /// to enumerate.
    pub fn members(&self) -> Result<Vec<FinSet>, Error> {
        self.window_family()
    }

    pub(crate) fn require_valid(&self) -> Result<(), Error> {
        match self.validate() {
            Verdict::FailsWithWitness { witness } => Err(Error::InvalidIdeal { witness }),
            _ => Ok(()),
        }
    }

    pub(crate) fn require_radius(&self, radius: FinSet) -> Result<(), Error> {
        if self.contains(radius) {
            Ok(())
        } else {
            Err(Error::RadiusNotInIdeal { radius })
        }
    }
}

/// Every valid ideal on a finite ground of `size` points: `Principal(S)` for
/// each proper `S`, ascending.
pub fn all_finite_ideals(size: u32) -> Result<Vec<Ideal>, Error> {
    let ground = GroundSet::Finite(size);
    ground.check()?;
    let window = ground.window();
    window
        .subsets()
        .filter(|s| *s != window)
        .map(|s| Ideal::principal(ground, s))
        .collect()
}

impl From<Witness> for Error {
    fn from(witness: Witness) -> Self {
        Error::InvalidIdeal {
            witness: Box::new(witness),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(xs: &[u32]) -> FinSet {
        FinSet::from_elements(xs.iter().copied())
    }

    fn finite(n: u32, d: IdealDescription) -> Ideal {
        Ideal::new(GroundSet::Finite(n), d).unwrap()
    }

    #[test]
    fn membership_examples() {
        let p = finite(4, IdealDescription::Principal(set(&[0, 1])));
        assert!(p.contains(set(&[1])));
        let sb = finite(8, IdealDescription::SizeBelow(2));
        assert!(!sb.contains(set(&[3, 5])));
        let g = finite(4, IdealDescription::GeneratedBy(vec![set(&[0]), set(&[2])]));
        assert!(g.contains(set(&[0, 2])));
        let fr = Ideal::frechet(12).unwrap();
        assert!(fr.contains(set(&[0, 5, 11])));
    }

    #[test]
    fn generated_by_matches_closure_enumeration() {
        let basis = [set(&[0]), set(&[2])];
        let ideal = finite(4, IdealDescription::GeneratedBy(basis.to_vec()));
        // Close the basis under subsets and pairwise unions until stable.
        let mut closure: Vec<FinSet> = vec![FinSet::EMPTY];
        closure.extend(basis);
        loop {
            let mut next = closure.clone();
            for &a in &closure {
                for x in a.iter() {
                    next.push(a.without(x));
                }
                for &b in &closure {
                    next.push(a | b);
                }
            }
            next.sort_unstable();
            next.dedup();
            if next == closure {
                break;
            }
            closure = next;
        }
        for s in GroundSet::Finite(4).subsets().unwrap() {
            assert_eq!(ideal.contains(s), closure.contains(&s), "{s}");
        }
    }

    #[test]
    fn validator_reports_union_witness() {
        let ideal = finite(
            3,
            IdealDescription::Explicit(vec![FinSet::EMPTY, set(&[0]), set(&[1])]),
        );
        let w = ideal.validate().witness().cloned().unwrap();
        assert_eq!(w.kind, WitnessKind::NotUnionClosed);
        assert_eq!(w.field("left"), Some(&Datum::Set(set(&[0]))));
        assert_eq!(w.field("right"), Some(&Datum::Set(set(&[1]))));
    }

    #[test]
    fn validator_accepts_principal_family() {
        let ideal = finite(3, IdealDescription::Explicit(set(&[0, 1]).subsets().collect()));
        assert!(matches!(ideal.validate(), Verdict::Holds { .. }));
    }

    #[test]
    fn validator_reports_improper_family() {
        let ground = GroundSet::Finite(3);
        let ideal = finite(3, IdealDescription::Explicit(ground.subsets().unwrap()));
        let w = ideal.validate().witness().cloned().unwrap();
        assert_eq!(w.kind, WitnessKind::Improper);
        assert_eq!(w.field("ground"), Some(&Datum::Set(ground.window())));
    }

    #[test]
    fn validator_reports_downward_witness() {
        let ideal = finite(3, IdealDescription::Explicit(vec![FinSet::EMPTY, set(&[0, 1])]));
        let w = ideal.validate().witness().cloned().unwrap();
        assert_eq!(w.kind, WitnessKind::NotDownwardClosed);
        assert_eq!(w.field("subset"), Some(&Datum::Set(set(&[1]))));
    }

    #[test]
    fn empty_family_is_rejected() {
        let ideal = finite(3, IdealDescription::SizeBelow(0));
        assert_eq!(
            ideal.validate().witness().map(|w| w.kind),
            Some(WitnessKind::EmptyFamily)
        );
    }

    #[test]
    fn normalize_examples() {
        let g = finite(4, IdealDescription::GeneratedBy(vec![set(&[0]), set(&[1])]));
        assert_eq!(
            g.normalize().unwrap().description,
            IdealDescription::Principal(set(&[0, 1]))
        );
        let p = finite(4, IdealDescription::Principal(set(&[2])));
        assert_eq!(p.normalize().unwrap(), p);
        let all_proper = finite(4, IdealDescription::SizeBelow(4));
        match all_proper.normalize() {
            Err(Error::InvalidIdeal { witness }) => {
                assert_eq!(witness.kind, WitnessKind::NotUnionClosed)
            }
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn size_below_on_naturals() {
        let ground = GroundSet::Naturals { horizon: 8 };
        assert!(Ideal::new(ground, IdealDescription::SizeBelow(1))
            .unwrap()
            .validate()
            .is_positive());
        assert!(Ideal::new(ground, IdealDescription::SizeBelow(2))
            .unwrap()
            .validate()
            .is_failure());
        assert!(Ideal::frechet(8).unwrap().validate().is_positive());
    }

    #[test]
    fn hat_and_iota_examples() {
        let p = Ideal::principal(GroundSet::Finite(4), set(&[0, 1])).unwrap();
        assert_eq!(p.hat().unwrap(), set(&[2, 3]));
        assert_eq!(p.iota().unwrap(), 2);
        let m = Ideal::maximal(5, 3).unwrap();
        assert_eq!(m.hat().unwrap(), set(&[3]));
        assert_eq!(m.iota().unwrap(), 1);
        assert!(m.is_maximal());
        let z = Ideal::principal(GroundSet::Finite(3), FinSet::EMPTY).unwrap();
        assert_eq!(z.hat().unwrap(), set(&[0, 1, 2]));
        assert_eq!(z.iota().unwrap(), 3);
        assert_eq!(
            Ideal::frechet(6).unwrap().hat(),
            Err(Error::FiniteGroundRequired)
        );
    }

    #[test]
    fn frechet_radii_are_initial_intervals() {
        let fr = Ideal::frechet(10).unwrap();
        assert_eq!(
            fr.radii(),
            (0..5).map(FinSet::interval_to).collect::<Vec<_>>()
        );
        assert!(fr.radii_form_chain());
    }

    #[test]
    fn construction_rejects_bad_grounds() {
        assert!(Ideal::principal(GroundSet::Finite(0), FinSet::EMPTY).is_err());
        assert!(Ideal::principal(GroundSet::Finite(3), set(&[3])).is_err());
        assert_eq!(
            Ideal::new(GroundSet::Finite(3), IdealDescription::FrechetOnNaturals),
            Err(Error::FrechetOnFiniteGround)
        );
    }

    #[test]
    fn all_finite_ideals_count() {
        assert_eq!(all_finite_ideals(4).unwrap().len(), 15);
    }
}
