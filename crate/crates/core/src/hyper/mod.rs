//! Hyperballeans on `P(X)`: closed-form hyperballs for ideal balleans, the
//! generic comprehension oracle, their subballeans and component counts.

mod dsc;
mod generic;

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::ballean::{bounding_radius, Ballean, ElementBallean, SubBallean};
use crate::error::Error;
use crate::fault::{self, Fault};
use crate::finset::FinSet;
use crate::ideal::Ideal;
use crate::verdict::Scope;

pub use dsc::{are_close, dsc, dsc_with, DscMethod, Flavor};
pub use generic::{exp_ball_generic, ExpBallean};

/// Which closed form a [`HyperBallean`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum HyperRule {
    /// `exp(X_I)`.
    PointIdeal,
    /// `exp(X_{I-ary})`.
    Iary,
    /// The Cartesian ballean `C(X, I)` on characteristic functions, read as sets.
    Cartesian,
}

/// `exp B(A, K)` for `exp(X_I)`: `{A}` when `A ∩ K = ∅`, otherwise every `Z`
/// with `A \ K ⊊ Z ⊆ A ∪ K`.
pub fn exp_ball_point_ideal(ideal: &Ideal, center: FinSet, radius: FinSet) -> Result<Vec<FinSet>, Error> {
    closed_form(ideal, HyperRule::PointIdeal, center, radius)
}

/// `exp B(A, K)` for `exp(X_{I-ary})`: `{∅}` at `∅`, otherwise every
/// non-empty `Z` with `A \ K ⊆ Z ⊆ A ∪ K`.
pub fn exp_ball_iary(ideal: &Ideal, center: FinSet, radius: FinSet) -> Result<Vec<FinSet>, Error> {
    closed_form(ideal, HyperRule::Iary, center, radius)
}

/// The Cartesian ball: every `Z` with `A \ K ⊆ Z ⊆ A ∪ K`, i.e. `A △ Z ⊆ K`.
pub fn cartesian_ball(ideal: &Ideal, center: FinSet, radius: FinSet) -> Result<Vec<FinSet>, Error> {
    closed_form(ideal, HyperRule::Cartesian, center, radius)
}

fn closed_form(ideal: &Ideal, rule: HyperRule, center: FinSet, radius: FinSet) -> Result<Vec<FinSet>, Error> {
    ideal.require_radius(radius)?;
    if !center.is_subset(ideal.ground.window()) {
        return Err(Error::OutsideGround { set: center });
    }
    Ok(hyper_ball(rule, None, center, radius))
}

fn hyper_contains(rule: HyperRule, fault: Option<Fault>, a: FinSet, k: FinSet, z: FinSet) -> bool {
    let between = (a ^ z).is_subset(k);
    match rule {
        HyperRule::PointIdeal => {
            if a.is_disjoint(k) {
                z == a
            } else if fault::active(fault, Fault::ExpPointIdealNonStrict) {
                between
            } else {
                between && !z.is_disjoint(k)
            }
        }
        HyperRule::Iary => {
            if a.is_empty() {
                z.is_empty()
            } else {
                between && (!z.is_empty() || fault::active(fault, Fault::ExpIaryAllowsEmpty))
            }
        }
        HyperRule::Cartesian => {
            if a.is_empty() && fault::active(fault, Fault::CartesianIsolatesZero) {
                z.is_empty()
            } else if fault::active(fault, Fault::CartesianDropsAdditions) {
                between && z.is_subset(a)
            } else {
                between
            }
        }
    }
}

/// Members of a closed-form hyperball, ascending: `(A \ K) ∪ Y` for the
/// admissible `Y ⊆ K`.
fn hyper_ball(rule: HyperRule, fault: Option<Fault>, a: FinSet, k: FinSet) -> Vec<FinSet> {
    let outside = a - k;
    k.subsets()
        .map(|y| outside | y)
        .filter(|&z| hyper_contains(rule, fault, a, k, z))
        .collect()
}

/// `exp(X_I)`, `exp(X_{I-ary})` or `C(X, I)` with constant-time membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperBallean {
    ideal: Ideal,
    rule: HyperRule,
    fault: Option<Fault>,
    radii: Vec<FinSet>,
    chain: bool,
}

impl HyperBallean {
    pub fn new(ideal: &Ideal, rule: HyperRule) -> Result<Self, Error> {
        Self::with_fault(ideal, rule, None)
    }

    /// Membership is constant-time for any window; only [`Ballean::points`]
    /// enumerates `P(window)`, so large windows belong under a scanning
    /// [`SubBallean`].
    pub fn with_fault(ideal: &Ideal, rule: HyperRule, fault: Option<Fault>) -> Result<Self, Error> {
        ideal.require_valid()?;
        Ok(HyperBallean {
            ideal: ideal.clone(),
            rule,
            fault,
            radii: ideal.radii(),
            chain: ideal.radii_form_chain(),
        })
    }

    /// Replaces the enumerated radii, e.g. by a longer cofinal chain of
    /// members for windowed map checks.
    pub fn with_radii(mut self, radii: Vec<FinSet>, chain: bool) -> Result<Self, Error> {
        if let Some(&radius) = radii.iter().find(|r| !self.ideal.contains(**r)) {
            return Err(Error::RadiusNotInIdeal { radius });
        }
        self.radii = radii;
        self.chain = chain;
        Ok(self)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn rule(&self) -> HyperRule {
        self.rule
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }
}

impl Ballean for HyperBallean {
    type Point = FinSet;
    type Radius = FinSet;

    fn points(&self) -> Vec<FinSet> {
        self.ideal.ground.window().subsets().collect()
    }

    fn radii(&self) -> Vec<FinSet> {
        self.radii.clone()
    }

    fn in_support(&self, point: FinSet) -> bool {
        point.is_subset(self.ideal.ground.window())
    }

    fn contains(&self, center: FinSet, radius: &FinSet, y: FinSet) -> bool {
        self.in_support(y) && hyper_contains(self.rule, self.fault, center, *radius, y)
    }

    fn ball(&self, center: FinSet, radius: &FinSet) -> Vec<FinSet> {
        hyper_ball(self.rule, self.fault, center, *radius)
    }

    fn scope(&self) -> Scope {
        self.ideal.scope()
    }

    fn radii_form_chain(&self) -> bool {
        self.chain
    }
}

/// `exp*(B) = exp(B) \ {∅}`.
pub fn exp_star<E: Ballean<Point = FinSet>>(exp: E) -> Result<SubBallean<E>, Error> {
    let support = exp.points().into_iter().filter(|s| !s.is_empty()).collect();
    SubBallean::new(exp, support)
}

/// Non-empty bounded subsets of `base`, ascending.
pub fn flat_support<B: ElementBallean>(base: &B) -> Vec<FinSet> {
    base.support_set()
        .subsets()
        .filter(|s| !s.is_empty() && bounding_radius(base, &s.to_vec()).is_some())
        .collect()
}

/// `B^♭`: the subballean of `exp(B)` on the non-empty bounded sets of `base`.
pub fn flat<E: Ballean<Point = FinSet>, B: ElementBallean>(exp: E, base: &B) -> Result<SubBallean<E>, Error> {
    SubBallean::new(exp, flat_support(base))
}

/// The macrocube `K(X, I)`: the Cartesian ballean restricted to `I`.
pub fn macrocube(ideal: &Ideal) -> Result<SubBallean<HyperBallean>, Error> {
    macrocube_with(ideal, None)
}

pub fn macrocube_with(ideal: &Ideal, fault: Option<Fault>) -> Result<SubBallean<HyperBallean>, Error> {
    let cart = HyperBallean::with_fault(ideal, HyperRule::Cartesian, fault)?;
    let support = cart
        .points()
        .into_iter()
        .filter(|s| ideal.contains(*s))
        .collect();
    SubBallean::new(cart, support)
}
