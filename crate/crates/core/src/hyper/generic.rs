use alloc::vec::Vec;

use crate::ballean::{Ballean, ElementBallean};
use crate::finset::FinSet;
use crate::verdict::Scope;

/// `exp(B)` for an arbitrary element ballean, straight from the
/// comprehension `C ∈ exp B(A, α) ⟺ A ⊆ B(C, α) and C ⊆ B(A, α)`.
///
/// Serves as the oracle for the closed forms in [`super::HyperBallean`].
#[derive(Clone, Debug)]
pub struct ExpBallean<B> {
    base: B,
}

impl<B: ElementBallean> ExpBallean<B> {
    pub fn new(base: B) -> Self {
        ExpBallean { base }
    }

    pub fn base(&self) -> &B {
        &self.base
    }
}

impl<B: ElementBallean> Ballean for ExpBallean<B> {
    type Point = FinSet;
    type Radius = B::Radius;

    fn points(&self) -> Vec<FinSet> {
        self.base.support_set().subsets().collect()
    }

    fn radii(&self) -> Vec<B::Radius> {
        self.base.radii()
    }

    fn in_support(&self, point: FinSet) -> bool {
        point.iter().all(|x| self.base.in_support(x))
    }

    fn contains(&self, center: FinSet, radius: &B::Radius, y: FinSet) -> bool {
        self.in_support(y)
            && y.is_subset(self.base.ball_of_finset(center, radius))
            && center.is_subset(self.base.ball_of_finset(y, radius))
    }

    fn ball(&self, center: FinSet, radius: &B::Radius) -> Vec<FinSet> {
        self.base
            .ball_of_finset(center, radius)
            .subsets()
            .filter(|&c| center.is_subset(self.base.ball_of_finset(c, radius)))
            .collect()
    }

    fn scope(&self) -> Scope {
        self.base.scope()
    }

    fn radii_form_chain(&self) -> bool {
        self.base.radii_form_chain()
    }
}

/// The hyperball `exp B(A, α)` by brute force over subsets of `B(A, α)`.
pub fn exp_ball_generic<B: ElementBallean>(base: B, center: FinSet, radius: &B::Radius) -> Vec<FinSet> {
    ExpBallean::new(base).ball(center, radius)
}
