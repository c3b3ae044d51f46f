//! Maps between balleans and the morphism hierarchy: coarse, effectively
//! proper, embeddings, asymorphisms and coarse equivalences.
//!
//! Radius searches run in ascending enumeration order and every point sweep
//! is ascending, so the reported witness is the canonical least one.

mod named;
mod product;

use alloc::vec::Vec;

use crate::ballean::{is_large, Ballean};
use crate::error::Error;
use crate::verdict::{Datum, Describe, Evidence, Scope, Verdict, Witness, WitnessKind};

pub use named::{
    complement_map, complement_of_bounded_escape, complement_of_bounded_map, exp_lift, flat_lift, identity_map, principal_filter,
    principal_members,
};
pub use product::{ring_intersection, ring_sum, ProductBallean};

pub struct BalleanMap<D: Ballean, C: Ballean, F> {
    pub name: &'static str,
    pub domain: D,
    pub codomain: C,
    f: F,
}

impl<D, C, F> BalleanMap<D, C, F>
where
    D: Ballean,
    C: Ballean,
    F: Fn(D::Point) -> C::Point,
{
    pub fn new(name: &'static str, domain: D, codomain: C, f: F) -> Self {
        BalleanMap {
            name,
            domain,
            codomain,
            f,
        }
    }

    pub fn apply(&self, x: D::Point) -> C::Point {
        (self.f)(x)
    }

    /// `f(X)`, ascending.
    pub fn image(&self) -> Vec<C::Point> {
        let mut out: Vec<C::Point> = self.domain.points().into_iter().map(&self.f).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn scope(&self) -> Scope {
        self.domain.scope().meet(self.codomain.scope())
    }

    /// For every domain radius `α` the least codomain radius `β` with
    /// `f(B(x, α)) ⊆ B(f(x), β)` for all `x`.
    pub fn is_coarse(&self) -> Verdict {
        let targets = self.codomain.radii();
        let mut table = Vec::new();
        for alpha in self.domain.radii() {
            let mut viable: Vec<usize> = (0..targets.len()).collect();
            for x in self.domain.points() {
                let fx = self.apply(x);
                for y in self.domain.ball(x, &alpha) {
                    let fy = self.apply(y);
                    let last = viable.last().copied();
                    viable.retain(|&b| self.codomain.contains(fx, &targets[b], fy));
                    if viable.is_empty() {
                        let mut w = Witness::new(WitnessKind::NotCoarse)
                            .with("map", Datum::Text(self.name.into()))
                            .with("alpha", alpha.describe())
                            .with("point", x.describe())
                            .with("member", y.describe());
                        if let Some(b) = last {
                            w = w.with("beta", targets[b].describe());
                        }
                        return Verdict::fail(w);
                    }
                }
            }
            table.push(Datum::pair(alpha.describe(), targets[viable[0]].describe()));
        }
        Verdict::positive(self.scope(), Evidence::of("radii", Datum::Tuple(table)))
    }

    /// For every codomain radius `α` the least domain radius `β` with
    /// `f⁻¹(B(f(x), α)) ⊆ B(x, β)` for all `x`.
    pub fn is_effectively_proper(&self) -> Verdict {
        let points = self.domain.points();
        let images: Vec<C::Point> = points.iter().map(|&p| self.apply(p)).collect();
        let targets = self.domain.radii();
        let mut table = Vec::new();
        for alpha in self.codomain.radii() {
            let mut viable: Vec<usize> = (0..targets.len()).collect();
            for (xi, &x) in points.iter().enumerate() {
                for (yi, &y) in points.iter().enumerate() {
                    if !self.codomain.contains(images[xi], &alpha, images[yi]) {
                        continue;
                    }
                    let last = viable.last().copied();
                    viable.retain(|&b| self.domain.contains(x, &targets[b], y));
                    if viable.is_empty() {
                        let mut w = Witness::new(WitnessKind::NotEffectivelyProper)
                            .with("map", Datum::Text(self.name.into()))
                            .with("alpha", alpha.describe())
                            .with("point", x.describe())
                            .with("preimage", y.describe());
                        if let Some(b) = last {
                            w = w.with("beta", targets[b].describe());
                        }
                        return Verdict::fail(w);
                    }
                }
            }
            table.push(Datum::pair(alpha.describe(), targets[viable[0]].describe()));
        }
        Verdict::positive(self.scope(), Evidence::of("radii", Datum::Tuple(table)))
    }

    pub fn is_injective(&self) -> Verdict {
        let mut pairs: Vec<(C::Point, D::Point)> = self
            .domain
            .points()
            .into_iter()
            .map(|p| (self.apply(p), p))
            .collect();
        pairs.sort_unstable();
        match pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            Some(w) => Verdict::fail(
                Witness::new(WitnessKind::NotInjective)
                    .with("left", w[0].1.describe())
                    .with("right", w[1].1.describe())
                    .with("image", w[0].0.describe()),
            ),
            None => Verdict::pass(self.scope()),
        }
    }

    pub fn is_surjective(&self) -> Verdict {
        let image = self.image();
        match self
            .codomain
            .points()
            .into_iter()
            .find(|p| image.binary_search(p).is_err())
        {
            Some(p) => Verdict::fail(Witness::new(WitnessKind::NotSurjective).with("missed", p.describe())),
            None => Verdict::pass(self.scope()),
        }
    }

    pub fn is_coarse_embedding(&self) -> Verdict {
        self.is_coarse().and(self.is_effectively_proper())
    }

    pub fn is_asymorphism(&self) -> Verdict {
        self.is_injective()
            .and(self.is_surjective())
            .and(self.is_coarse_embedding())
    }

    pub fn is_asymorphic_embedding(&self) -> Verdict {
        self.is_injective().and(self.is_coarse_embedding())
    }

    pub fn is_coarse_equivalence(&self) -> Verdict {
        self.is_coarse_embedding()
            .and(is_large(&self.codomain, &self.image()))
    }

    /// Checks `f(B(x, α)) = B(f(x), ψ(α)) ∩ f(X)` for every `α` in `chain`
    /// and every point, then re-checks that `f` is a coarse embedding, as
    /// the identity implies when `chain` and `ψ(chain)` are cofinal.
    pub fn check_radius_transport<P>(&self, chain: &[D::Radius], psi: P) -> Result<Verdict, Error>
    where
        P: Fn(&D::Radius) -> C::Radius,
    {
        if self.is_injective().is_failure() {
            return Err(Error::NotInjective);
        }
        let image = self.image();
        for alpha in chain {
            let beta = psi(alpha);
            for x in self.domain.points() {
                let fx = self.apply(x);
                let mut lhs: Vec<C::Point> = self.domain.ball(x, alpha).into_iter().map(&self.f).collect();
                lhs.sort_unstable();
                let rhs: Vec<C::Point> = image
                    .iter()
                    .copied()
                    .filter(|&z| self.codomain.contains(fx, &beta, z))
                    .collect();
                if lhs != rhs {
                    return Ok(Verdict::fail(
                        Witness::new(WitnessKind::BallIdentityFails)
                            .with("map", Datum::Text(self.name.into()))
                            .with("alpha", alpha.describe())
                            .with("psiAlpha", beta.describe())
                            .with("point", x.describe())
                            .with("imageOfBall", lhs.describe())
                            .with("ballOnImage", rhs.describe()),
                    ));
                }
            }
        }
        let embedding = self.is_coarse_embedding();
        if let Some(w) = embedding.witness() {
            return Ok(Verdict::fail(
                Witness::new(WitnessKind::UnexpectedOutcome)
                    .with("claim", Datum::Text("radius transport implies coarse embedding".into()))
                    .with("embeddingFailure", Datum::Text(alloc::format!("{:?}", w.kind))),
            ));
        }
        Ok(Verdict::pass(self.scope()))
    }
}
