use alloc::vec::Vec;

use super::BalleanMap;
use crate::ballean::Ballean;
use crate::finset::FinSet;
use crate::verdict::Scope;

/// `B₁ × B₂` with componentwise radii: `(y₁, y₂) ∈ B((x₁, x₂), (α₁, α₂))`
/// iff `yᵢ ∈ B(xᵢ, αᵢ)` for both coordinates. Every radius pair is enumerated.
#[derive(Clone, Debug)]
pub struct ProductBallean<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Ballean, B: Ballean> ProductBallean<A, B> {
    pub fn new(left: A, right: B) -> Self {
        ProductBallean { left, right }
    }
}

fn pairs<P: Clone, Q: Clone>(ps: Vec<P>, qs: Vec<Q>) -> Vec<(P, Q)> {
    ps.into_iter()
        .flat_map(|p| qs.iter().map(move |q| (p.clone(), q.clone())))
        .collect()
}

impl<A: Ballean, B: Ballean> Ballean for ProductBallean<A, B> {
    type Point = (A::Point, B::Point);
    type Radius = (A::Radius, B::Radius);

    fn points(&self) -> Vec<Self::Point> {
        pairs(self.left.points(), self.right.points())
    }

    fn radii(&self) -> Vec<Self::Radius> {
        pairs(self.left.radii(), self.right.radii())
    }

    fn in_support(&self, (a, b): Self::Point) -> bool {
        self.left.in_support(a) && self.right.in_support(b)
    }

    fn contains(&self, (a, b): Self::Point, (r, s): &Self::Radius, (y, z): Self::Point) -> bool {
        self.left.contains(a, r, y) && self.right.contains(b, s, z)
    }

    fn ball(&self, (a, b): Self::Point, (r, s): &Self::Radius) -> Vec<Self::Point> {
        pairs(self.left.ball(a, r), self.right.ball(b, s))
    }

    fn scope(&self) -> Scope {
        self.left.scope().meet(self.right.scope())
    }
}

type SetPair = (FinSet, FinSet);
pub type RingMap<B> = BalleanMap<ProductBallean<B, B>, B, fn(SetPair) -> FinSet>;

/// `(f, g) ↦ f △ g`: addition in the Boolean ring of characteristic functions.
pub fn ring_sum<B: Ballean<Point = FinSet> + Clone>(b: B) -> RingMap<B> {
    BalleanMap::new("symmetricDifference", ProductBallean::new(b.clone(), b.clone()), b, |(y, z)| y ^ z)
}

/// `(f, g) ↦ f ∩ g`: multiplication in the Boolean ring.
pub fn ring_intersection<B: Ballean<Point = FinSet> + Clone>(b: B) -> RingMap<B> {
    BalleanMap::new("intersection", ProductBallean::new(b.clone(), b.clone()), b, |(y, z)| y & z)
}
