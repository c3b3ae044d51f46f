//! The ballean abstraction and the checks defined on any ballean.
//!
//! A [`Ballean`] exposes an enumerable support, an enumerable family of
//! radii and a ball-membership predicate. Every property check quantifies
//! over exactly those enumerations, so a check on a finite model is a proof
//! by exhaustion and a check on a horizon window is evidence only.

mod checks;
mod ideal_balleans;
mod sub;

use alloc::vec::Vec;
use core::fmt::Debug;

use crate::finset::FinSet;
use crate::verdict::{Describe, Scope};

pub use checks::{
    ball_of_set, bounding_radius, component, components, is_bounded, is_large, is_slowly_oscillating,
    is_small, is_thick, is_thin, radii_leq, verify_axioms, BallCache,
};
pub use ideal_balleans::{ball_iary, ball_point_ideal, IaryBallean, PointIdealBallean};
pub use sub::{bounded_family, make_satellite, make_subballean, SubBallean};

pub trait Ballean {
    type Point: Copy + Ord + Debug + Describe;
    type Radius: Clone + Debug + Describe;

    /// The (windowed) support, ascending.
    fn points(&self) -> Vec<Self::Point>;

    /// The enumerated radii, ascending. When [`Ballean::radii_form_chain`]
    /// holds they are a monotone chain declared cofinal; otherwise they are
    /// the whole radius set of a finite model.
    fn radii(&self) -> Vec<Self::Radius>;

    fn in_support(&self, point: Self::Point) -> bool;

    /// Whether `y ∈ B(center, radius)`.
    fn contains(&self, center: Self::Point, radius: &Self::Radius, y: Self::Point) -> bool;

    /// `B(center, radius)`, ascending.
    fn ball(&self, center: Self::Point, radius: &Self::Radius) -> Vec<Self::Point> {
        self.points()
            .into_iter()
            .filter(|&y| self.contains(center, radius, y))
            .collect()
    }

    fn scope(&self) -> Scope;

    fn radii_form_chain(&self) -> bool {
        false
    }
}

macro_rules! forward_ballean {
    ($($ty:ty),*) => {$(
        impl<B: Ballean + ?Sized> Ballean for $ty {
            type Point = B::Point;
            type Radius = B::Radius;

            fn points(&self) -> Vec<Self::Point> {
                (**self).points()
            }
            fn radii(&self) -> Vec<Self::Radius> {
                (**self).radii()
            }
            fn in_support(&self, point: Self::Point) -> bool {
                (**self).in_support(point)
            }
            fn contains(&self, center: Self::Point, radius: &Self::Radius, y: Self::Point) -> bool {
                (**self).contains(center, radius, y)
            }
            fn ball(&self, center: Self::Point, radius: &Self::Radius) -> Vec<Self::Point> {
                (**self).ball(center, radius)
            }
            fn scope(&self) -> Scope {
                (**self).scope()
            }
            fn radii_form_chain(&self) -> bool {
                (**self).radii_form_chain()
            }
        }
    )*};
}

forward_ballean!(&B, alloc::boxed::Box<B>);

/// Balleans whose points are ground elements; balls can be read as [`FinSet`]s.
pub trait ElementBallean: Ballean<Point = u32> {
    fn ball_set(&self, x: u32, radius: &Self::Radius) -> FinSet {
        FinSet::from_elements(self.ball(x, radius))
    }

    /// `B(A, radius)`: the union of the balls centred in `A`.
    fn ball_of_finset(&self, set: FinSet, radius: &Self::Radius) -> FinSet {
        set.iter()
            .fold(FinSet::EMPTY, |acc, x| acc | self.ball_set(x, radius))
    }

    fn support_set(&self) -> FinSet {
        FinSet::from_elements(self.points())
    }
}

impl<B: Ballean<Point = u32> + ?Sized> ElementBallean for B {}
