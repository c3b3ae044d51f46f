use alloc::vec::Vec;

use super::Ballean;
use crate::error::Error;
use crate::fault::{self, Fault};
use crate::finset::FinSet;
use crate::ideal::{GroundSet, Ideal};
use crate::verdict::Scope;

fn check_point(ground: GroundSet, x: u32) -> Result<(), Error> {
    if ground.window().contains(x) {
        Ok(())
    } else {
        Err(Error::OutsideSupport { point: x })
    }
}

/// `B(x, A)` in the point-ideal ballean: `A` when `x ∈ A`, else `{x}`.
pub fn ball_point_ideal(ideal: &Ideal, x: u32, radius: FinSet) -> Result<FinSet, Error> {
    ideal.require_radius(radius)?;
    check_point(ideal.ground, x)?;
    Ok(point_ideal_ball(x, radius, None))
}

/// `B(x, A) = {x} ∪ A` in the I-ary ballean.
pub fn ball_iary(ideal: &Ideal, x: u32, radius: FinSet) -> Result<FinSet, Error> {
    ideal.require_radius(radius)?;
    check_point(ideal.ground, x)?;
    Ok(iary_ball(x, radius, None))
}

fn point_ideal_ball(x: u32, radius: FinSet, fault: Option<Fault>) -> FinSet {
    if !radius.contains(x) {
        FinSet::singleton(x)
    } else if fault::active(fault, Fault::PointIdealDropsCenter) {
        radius.without(x)
    } else if fault::active(fault, Fault::PointIdealOneSided) {
        radius.iter().filter(|&a| a >= x).collect()
    } else {
        radius
    }
}

fn iary_ball(x: u32, radius: FinSet, _fault: Option<Fault>) -> FinSet {
    radius.with(x)
}

/// Shared shape of the two ideal balleans: a ground window and radius family.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IdealShape {
    ground: GroundSet,
    radii: Vec<FinSet>,
    chain: bool,
    fault: Option<Fault>,
}

impl IdealShape {
    fn of(ideal: &Ideal, fault: Option<Fault>) -> Result<Self, Error> {
        ideal.require_valid()?;
        Ok(IdealShape {
            ground: ideal.ground,
            radii: ideal.radii(),
            chain: ideal.radii_form_chain(),
            fault,
        })
    }
}

/// `X_I`: balls are `{x}` unless the centre lies in the radius `A ∈ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointIdealBallean(IdealShape);

impl PointIdealBallean {
    pub fn new(ideal: &Ideal) -> Result<Self, Error> {
        Self::with_fault(ideal, None)
    }

    pub fn with_fault(ideal: &Ideal, fault: Option<Fault>) -> Result<Self, Error> {
        Ok(PointIdealBallean(IdealShape::of(ideal, fault)?))
    }

    /// A point-ideal ballean whose radii are an arbitrary family on a
    /// finite ground, as used for satellites. Axioms are not implied.
    pub fn from_family(ground: GroundSet, mut radii: Vec<FinSet>) -> Result<Self, Error> {
        ground.check()?;
        if let Some(&set) = radii.iter().find(|s| !s.is_subset(ground.window())) {
            return Err(Error::OutsideGround { set });
        }
        radii.sort_unstable();
        radii.dedup();
        Ok(PointIdealBallean(IdealShape {
            ground,
            radii,
            chain: false,
            fault: None,
        }))
    }

    pub fn ground(&self) -> GroundSet {
        self.0.ground
    }

    pub fn radius_family(&self) -> &[FinSet] {
        &self.0.radii
    }
}

/// `X_{I-ary}`: balls are `{x} ∪ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IaryBallean(IdealShape);

impl IaryBallean {
    pub fn new(ideal: &Ideal) -> Result<Self, Error> {
        Self::with_fault(ideal, None)
    }

    pub fn with_fault(ideal: &Ideal, fault: Option<Fault>) -> Result<Self, Error> {
        Ok(IaryBallean(IdealShape::of(ideal, fault)?))
    }

    pub fn ground(&self) -> GroundSet {
        self.0.ground
    }
}

macro_rules! ideal_ballean {
    ($ty:ty, $ball:ident) => {
        impl Ballean for $ty {
            type Point = u32;
            type Radius = FinSet;

            fn points(&self) -> Vec<u32> {
                self.0.ground.window().to_vec()
            }

            fn radii(&self) -> Vec<FinSet> {
                self.0.radii.clone()
            }

            fn in_support(&self, point: u32) -> bool {
                self.0.ground.window().contains(point)
            }

            fn contains(&self, center: u32, radius: &FinSet, y: u32) -> bool {
                self.in_support(y) && $ball(center, *radius, self.0.fault).contains(y)
            }

            fn ball(&self, center: u32, radius: &FinSet) -> Vec<u32> {
                ($ball(center, *radius, self.0.fault) & self.0.ground.window()).to_vec()
            }

            fn scope(&self) -> Scope {
                self.0.ground.scope()
            }

            fn radii_form_chain(&self) -> bool {
                self.0.chain
            }
        }
    };
}

ideal_ballean!(PointIdealBallean, point_ideal_ball);
ideal_ballean!(IaryBallean, iary_ball);
