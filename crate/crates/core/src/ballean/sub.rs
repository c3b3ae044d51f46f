use alloc::vec::Vec;

use super::{bounding_radius, Ballean, PointIdealBallean};
use crate::error::Error;
use crate::finset::FinSet;
use crate::ideal::GroundSet;
use crate::verdict::{Describe, Scope};

/// `B_Y(y, α) = B(y, α) ∩ Y`.
#[derive(Clone, Debug)]
pub struct SubBallean<B: Ballean> {
    base: B,
    support: Vec<B::Point>,
    scan: bool,
}

impl<B: Ballean> SubBallean<B> {
    /// Intersects base balls with `support`.
    pub fn new(base: B, mut support: Vec<B::Point>) -> Result<Self, Error>
    where
        B::Point: Describe,
    {
        support.sort_unstable();
        support.dedup();
        if let Some(&p) = support.iter().find(|&&p| !base.in_support(p)) {
            return Err(outside(p));
        }
        Ok(SubBallean {
            base,
            support,
            scan: false,
        })
    }

    /// Like [`SubBallean::new`] but computes balls by scanning the support
    /// with the base membership predicate, for bases whose full balls are
    /// much larger than the support.
    pub fn scanning(base: B, support: Vec<B::Point>) -> Result<Self, Error> {
        let mut sub = SubBallean::new(base, support)?;
        sub.scan = true;
        Ok(sub)
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn support(&self) -> &[B::Point] {
        &self.support
    }
}

fn outside<P: Describe>(p: P) -> Error {
    match p.describe() {
        crate::verdict::Datum::Point(point) => Error::OutsideSupport { point },
        _ => Error::OutsideSupport { point: u32::MAX },
    }
}

impl<B: Ballean> Ballean for SubBallean<B> {
    type Point = B::Point;
    type Radius = B::Radius;

    fn points(&self) -> Vec<B::Point> {
        self.support.clone()
    }

    fn radii(&self) -> Vec<B::Radius> {
        self.base.radii()
    }

    fn in_support(&self, point: B::Point) -> bool {
        self.support.binary_search(&point).is_ok()
    }

    fn contains(&self, center: B::Point, radius: &B::Radius, y: B::Point) -> bool {
        self.in_support(y) && self.base.contains(center, radius, y)
    }

    fn ball(&self, center: B::Point, radius: &B::Radius) -> Vec<B::Point> {
        if self.scan {
            self.support
                .iter()
                .copied()
                .filter(|&y| self.base.contains(center, radius, y))
                .collect()
        } else {
            self.base
                .ball(center, radius)
                .into_iter()
                .filter(|&y| self.in_support(y))
                .collect()
        }
    }

    fn scope(&self) -> Scope {
        self.base.scope()
    }

    fn radii_form_chain(&self) -> bool {
        self.base.radii_form_chain()
    }
}

pub fn make_subballean<B: Ballean>(base: B, support: Vec<B::Point>) -> Result<SubBallean<B>, Error> {
    SubBallean::new(base, support)
}

/// `♭(X)`: every bounded subset of a finite element ballean, ascending.
pub fn bounded_family<B: Ballean<Point = u32>>(b: &B) -> Result<Vec<FinSet>, Error> {
    if b.scope() != Scope::Exhaustive {
        return Err(Error::FiniteGroundRequired);
    }
    let support = FinSet::from_elements(b.points());
    if support.len() > crate::ideal::MAX_FINITE {
        return Err(Error::WindowTooLarge {
            size: support.len(),
        });
    }
    Ok(support
        .subsets()
        .filter(|s| bounding_radius(b, &s.to_vec()).is_some())
        .collect())
}

/// The satellite: the point-ideal ballean whose radii are `♭(X)`.
///
/// `♭(X)` need not be union-closed on a finite model, so the result is
/// built from the raw family and its axioms are left for the caller to check.
pub fn make_satellite<B: Ballean<Point = u32>>(b: &B) -> Result<PointIdealBallean, Error> {
    let family = bounded_family(b)?;
    let support = FinSet::from_elements(b.points());
    if family.last() == Some(&support) {
        return Err(Error::ImproperSatellite);
    }
    let size = support.max().map_or(0, |m| m + 1);
    PointIdealBallean::from_family(GroundSet::Finite(size), family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballean::{verify_axioms, IaryBallean, PointIdealBallean};
    use alloc::vec;
    use crate::ideal::Ideal;

    fn set(xs: &[u32]) -> FinSet {
        FinSet::from_elements(xs.iter().copied())
    }

    #[test]
    fn subballean_intersects_balls() {
        let i = Ideal::principal(GroundSet::Finite(4), set(&[0, 1])).unwrap();
        let xa = IaryBallean::new(&i).unwrap();
        let full = SubBallean::new(&xa, xa.points()).unwrap();
        assert_eq!(full.ball(3, &set(&[0])), xa.ball(3, &set(&[0])));
        let on_cover = SubBallean::new(&xa, vec![0, 1]).unwrap();
        assert_eq!(on_cover.ball(1, &set(&[0])), [0, 1]);
        let single = SubBallean::new(&xa, vec![2]).unwrap();
        for r in single.radii() {
            assert_eq!(single.ball(2, &r), [2]);
        }
        assert!(SubBallean::new(&xa, vec![7]).is_err());
        let xi = PointIdealBallean::new(&i).unwrap();
        assert!(verify_axioms(&SubBallean::new(&xi, vec![0, 1, 3]).unwrap()).is_positive());
    }

    #[test]
    fn satellite_of_bounded_ballean_is_improper() {
        let i = Ideal::principal(GroundSet::Finite(3), set(&[0, 1])).unwrap();
        let xi = PointIdealBallean::new(&i).unwrap();
        let cover = SubBallean::new(&xi, vec![0, 1]).unwrap();
        assert_eq!(make_satellite(&cover).unwrap_err(), Error::ImproperSatellite);
        let sat = make_satellite(&xi).unwrap();
        // Bounded sets of X_I: subsets of the cover plus singletons.
        assert_eq!(
            sat.radius_family(),
            [FinSet::EMPTY, set(&[0]), set(&[1]), set(&[0, 1]), set(&[2])]
        );
    }
}
