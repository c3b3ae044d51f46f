//! The `κ = ω` instance of the k-cube embeddings: `exp(ω_K)` into
//! `exp(ω_{K-ary})` through odd/even coding, and the copies `U_{≥x}` of the
//! Cartesian ballean inside `exp(ω_K)`. `K` is the ideal of finite sets, so
//! every subset of a window is a radius and `[0, n]` is the cofinal chain.
//!
//! All checks run on windows `[0, h)` and report `VerifiedToHorizon`.

use alloc::vec::Vec;

use crate::ballean::{Ballean, SubBallean};
use crate::error::Error;
use crate::fault::{self, Fault};
use crate::finset::FinSet;
use crate::hyper::{HyperBallean, HyperRule};
use crate::ideal::{Ideal, MAX_HORIZON};
use crate::maps::BalleanMap;
use crate::verdict::{Datum, Describe, Evidence, Scope, Verdict, Witness, WitnessKind};

const EVENS: u64 = 0x5555_5555_5555_5555;

fn evens(s: FinSet) -> FinSet {
    FinSet::from_bits(s.bits() & EVENS)
}

fn odds(s: FinSet) -> FinSet {
    FinSet::from_bits(s.bits() & !EVENS)
}

/// Point-ideal hyperball membership over the finite-set ideal.
fn near_point_ideal(a: FinSet, k: FinSet, z: FinSet) -> bool {
    if a.is_disjoint(k) {
        z == a
    } else {
        (a ^ z).is_subset(k) && !z.is_disjoint(k)
    }
}

/// I-ary hyperball membership over the finite-set ideal.
fn near_iary(a: FinSet, k: FinSet, z: FinSet) -> bool {
    if a.is_empty() {
        z.is_empty()
    } else {
        !z.is_empty() && (a ^ z).is_subset(k)
    }
}

fn point_ideal_ball(a: FinSet, k: FinSet) -> Vec<FinSet> {
    let outside = a - k;
    k.subsets()
        .map(|y| outside | y)
        .filter(|&z| near_point_ideal(a, k, z))
        .collect()
}

fn check_horizon(h: u32, max: u32) -> Result<(), Error> {
    if h == 0 {
        return Err(Error::WindowTooSmall { size: h });
    }
    if h > max {
        return Err(Error::HorizonSize { horizon: h, max });
    }
    Ok(())
}

/// `f(F) = {y_F} ∪ φ(F)` with `φ(n) = 2n + 1` and `y_F = 2 min F`, so that
/// `y_F + 1 = min φ(F)`; `f(∅) = ∅`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OmegaEmbedding {
    fault: Option<Fault>,
}

impl OmegaEmbedding {
    pub fn new() -> Self {
        OmegaEmbedding::default()
    }

    pub fn with_fault(fault: Option<Fault>) -> Self {
        OmegaEmbedding { fault }
    }

    pub fn phi(n: u32) -> u32 {
        2 * n + 1
    }

    /// `y_F`, the single even point of `f(F)`.
    pub fn even_point(&self, set: FinSet) -> Option<u32> {
        let shift = if fault::active(self.fault, Fault::KcubeShiftedEven) { 2 } else { 0 };
        set.min().map(|m| 2 * m + shift)
    }

    pub fn embed(&self, set: FinSet) -> FinSet {
        match self.even_point(set) {
            Some(y) => set.map(Self::phi).with(y),
            None => FinSet::EMPTY,
        }
    }

    /// `ψ([0, α]) = [0, φ(α)]`.
    pub fn radius(&self, alpha: u32) -> FinSet {
        if fault::active(self.fault, Fault::KcubeShrunkRadius) {
            FinSet::interval_to(2 * alpha)
        } else {
            FinSet::interval_to(Self::phi(alpha))
        }
    }

    /// The `F` with `f(F) = z`, if `z ∈ S`.
    pub fn preimage(&self, z: FinSet) -> Option<FinSet> {
        let f = odds(z).map(|o| (o - 1) / 2);
        (self.embed(f) == z).then_some(f)
    }
}

/// `f(exp B_K(A, [0, α])) = exp B_{K-ary}(f(A), [0, φ(α)]) ∩ S` for every
/// `A ⊆ [0, h)` and `α < h`.
///
/// `S` is the image of `f`. The right side is computed from the I-ary
/// predicate over the members of `S` inside `f(A) ∪ [0, φ(α)]`, i.e. over
/// `f(F)` for `F ⊆ A ∪ [0, α]`, independently of the left side.
pub fn check_embedding_identity(h: u32, fault: Option<Fault>) -> Result<Verdict, Error> {
    check_horizon(h, MAX_HORIZON)?;
    let f = OmegaEmbedding::with_fault(fault);
    for a in FinSet::interval_to(h - 1).subsets() {
        let fa = f.embed(a);
        for alpha in 0..h {
            let radius = FinSet::interval_to(alpha);
            let big = f.radius(alpha);
            let mut lhs: Vec<FinSet> = point_ideal_ball(a, radius).into_iter().map(|z| f.embed(z)).collect();
            lhs.sort_unstable();
            let mut rhs: Vec<FinSet> = (a | radius)
                .subsets()
                .map(|z| f.embed(z))
                .filter(|&z| near_iary(fa, big, z))
                .collect();
            rhs.sort_unstable();
            if lhs != rhs {
                return Ok(Verdict::fail(
                    Witness::new(WitnessKind::BallIdentityFails)
                        .with("a", a.describe())
                        .with("alpha", Datum::Point(alpha))
                        .with("imageOfBall", Datum::Family(lhs))
                        .with("ballOnImage", Datum::Family(rhs)),
                ));
            }
        }
    }
    Ok(Verdict::pass(Scope::Horizon(h)))
}

/// For non-empty `Z` with `A \ [0, α] ⊆ Z ⊆ A ∪ [0, α]`:
/// `Z ≠ A \ [0, α]` iff `y_Z ≤ φ(α)`.
///
/// The hypothesis only sees `T = A \ [0, α]`, so quantifying over every
/// tail `T ⊆ (α, h)` and every `Y ⊆ [0, α]` with `Z = T ∪ Y` covers every `A`.
pub fn check_parity_lemma(h: u32, fault: Option<Fault>) -> Result<Verdict, Error> {
    check_horizon(h, MAX_HORIZON)?;
    let f = OmegaEmbedding::with_fault(fault);
    let window = FinSet::interval_to(h - 1);
    for alpha in 0..h {
        let head = FinSet::interval_to(alpha);
        for tail in (window - head).subsets() {
            for y in head.subsets() {
                let z = tail | y;
                let Some(yz) = f.even_point(z) else { continue };
                if (z != tail) != (yz <= OmegaEmbedding::phi(alpha)) {
                    return Ok(Verdict::fail(
                        Witness::new(WitnessKind::UnexpectedOutcome)
                            .with("alpha", Datum::Point(alpha))
                            .with("tail", tail.describe())
                            .with("z", z.describe())
                            .with("evenPoint", Datum::Point(yz)),
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass(Scope::Horizon(h)))
}

/// Every non-empty `F ⊆ [0, h)` has `f(F)` made of odd points plus exactly
/// one even point, its minimum, directly below the least odd point.
pub fn check_image_shape(h: u32, fault: Option<Fault>) -> Result<Verdict, Error> {
    check_horizon(h, MAX_HORIZON)?;
    let f = OmegaEmbedding::with_fault(fault);
    for set in FinSet::interval_to(h - 1).subsets().skip(1) {
        let image = f.embed(set);
        let even = evens(image);
        let ok = even.len() == 1
            && even.min() == image.min()
            && odds(image).min() == even.min().map(|e| e + 1);
        if !ok {
            return Ok(Verdict::fail(
                Witness::new(WitnessKind::ImageShape)
                    .with("set", set.describe())
                    .with("image", image.describe()),
            ));
        }
    }
    Ok(Verdict::pass(Scope::Horizon(h)))
}

/// Subsets of `[0, 2h)` made of odd points plus one even minimum, versus
/// the members of `S` among them: the shape alone does not pin `S` down,
/// since the even point must also sit directly below the least odd point.
pub fn image_shape_gap(h: u32) -> Result<(u64, u64), Error> {
    check_horizon(h, 10)?;
    let f = OmegaEmbedding::new();
    let (mut shaped, mut members) = (0, 0);
    for z in FinSet::interval_to(2 * h - 1).subsets().skip(1) {
        let even = evens(z);
        if even.len() == 1 && even.min() == z.min() {
            shaped += 1;
            members += u64::from(f.preimage(z).is_some());
        }
    }
    Ok((shaped, members))
}

/// `exp(ω_K)` on `[0, h)` with the chain `[0, n]`, `n < h`.
fn omega_domain(h: u32) -> Result<HyperBallean, Error> {
    let chain = (0..h).map(FinSet::interval_to).collect();
    HyperBallean::new(&Ideal::frechet(h)?, HyperRule::PointIdeal)?.with_radii(chain, true)
}

/// The odd/even coding as a map from `exp(ω_K)` on `[0, h)` onto its image
/// in `exp(ω_{K-ary})` on `[0, 2h)`.
pub fn omega_embedding_map(
    h: u32,
    fault: Option<Fault>,
) -> Result<BalleanMap<HyperBallean, SubBallean<HyperBallean>, impl Fn(FinSet) -> FinSet>, Error> {
    check_horizon(h, MAX_HORIZON / 2)?;
    let f = OmegaEmbedding::with_fault(fault);
    let domain = omega_domain(h)?;
    let chain = (0..2 * h).map(FinSet::interval_to).collect();
    let target = HyperBallean::new(&Ideal::frechet(2 * h)?, HyperRule::Iary)?.with_radii(chain, true)?;
    let mut image: Vec<FinSet> = domain.points().into_iter().map(|a| f.embed(a)).collect();
    image.sort_unstable();
    let codomain = SubBallean::scanning(target, image)?;
    Ok(BalleanMap::new("omegaEmbedding", domain, codomain, move |a| f.embed(a)))
}

/// Radius transport with `ψ([0, β]) = [0, φ(β)]`, followed by the coarse
/// embedding re-check.
pub fn omega_radius_transport(h: u32, fault: Option<Fault>) -> Result<Verdict, Error> {
    let m = omega_embedding_map(h, fault)?;
    let f = OmegaEmbedding::with_fault(fault);
    let chain = m.domain.radii();
    m.check_radius_transport(&chain, |r| f.radius(FinSet::max(*r).unwrap_or(0)))
}

/// The copy `f(X) = g(X) ∪ {x}` of the Cartesian ballean on `[0, d)` inside
/// `U_{≥x}` on the window `[0, w)`, with `d = w - x - 1` and `g` the
/// order-preserving shift `n ↦ n + x + 1` onto `(x, w)`. Needs `d ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FilterCopy {
    pub x: u32,
    pub window: u32,
}

impl FilterCopy {
    pub fn new(x: u32, window: u32) -> Result<Self, Error> {
        if window > crate::ideal::MAX_FINITE {
            return Err(Error::WindowTooLarge { size: window });
        }
        if window < x + 3 {
            return Err(Error::WindowTooSmall { size: window });
        }
        Ok(FilterCopy { x, window })
    }

    pub fn domain_size(self) -> u32 {
        self.window - self.x - 1
    }

    pub fn g(self, n: u32) -> u32 {
        n + self.x + 1
    }

    pub fn embed(self, set: FinSet) -> FinSet {
        set.map(|n| self.g(n)).with(self.x)
    }

    /// `ψ(K) = g(K) ∪ {x}`.
    pub fn radius(self, k: FinSet) -> FinSet {
        self.embed(k)
    }

    /// `U_{≥x}` inside the window, ascending.
    pub fn filter(self) -> Vec<FinSet> {
        upper_filter(self.x, self.window)
    }

    pub fn map(self) -> Result<BalleanMap<HyperBallean, SubBallean<HyperBallean>, impl Fn(FinSet) -> FinSet>, Error> {
        let d = self.domain_size();
        let chain = (0..d).map(FinSet::interval_to).collect();
        let domain = HyperBallean::new(&Ideal::frechet(d)?, HyperRule::Cartesian)?.with_radii(chain, true)?;
        let chain = (0..self.window).map(FinSet::interval_to).collect();
        let target = HyperBallean::new(&Ideal::frechet(self.window)?, HyperRule::PointIdeal)?.with_radii(chain, true)?;
        let codomain = SubBallean::scanning(target, self.filter())?;
        Ok(BalleanMap::new("filterCopy", domain, codomain, move |a| self.embed(a)))
    }
}

/// `{A ⊆ [0, w) : min A = x}`, ascending.
pub fn upper_filter(x: u32, w: u32) -> Vec<FinSet> {
    if x >= w {
        return Vec::new();
    }
    FinSet::range(x + 1, w)
        .subsets()
        .map(|s| s.with(x))
        .collect()
}

/// The ball identity `f(B_C(X, K)) = exp B_K(f(X), ψ(K)) ∩ U_{≥x}` for
/// every `X, K ⊆ [0, d)`.
pub fn check_filter_copy_identity(copy: FilterCopy) -> Result<Verdict, Error> {
    let d = copy.domain_size();
    let all = FinSet::interval_to(d - 1);
    let filter = copy.filter();
    for set in all.subsets() {
        let fx = copy.embed(set);
        for k in all.subsets() {
            let mut lhs: Vec<FinSet> = k.subsets().map(|y| copy.embed((set - k) | y)).collect();
            lhs.sort_unstable();
            let psi = copy.radius(k);
            let rhs: Vec<FinSet> = filter
                .iter()
                .copied()
                .filter(|&z| near_point_ideal(fx, psi, z))
                .collect();
            if lhs != rhs {
                return Ok(Verdict::fail(
                    Witness::new(WitnessKind::BallIdentityFails)
                        .with("x", set.describe())
                        .with("k", k.describe())
                        .with("imageOfBall", Datum::Family(lhs))
                        .with("ballOnImage", Datum::Family(rhs)),
                ));
            }
        }
    }
    Ok(Verdict::pass(Scope::Horizon(copy.window)))
}

/// Cofinality of `ψ` on `U_{≥x}`: for every centre `X ∈ U_{≥x}` and radius
/// `K' ⊆ [0, w)`, `exp B_K(X, K') ∩ U_{≥x} ⊆ exp B_K(X, ψ(g⁻¹(K' ∩ (x, w)))) ∩ U_{≥x}`.
pub fn check_filter_copy_cofinality(copy: FilterCopy) -> Result<Verdict, Error> {
    let filter = copy.filter();
    let window = FinSet::interval_to(copy.window - 1);
    let above = FinSet::range(copy.x + 1, copy.window);
    for &center in &filter {
        for k in window.subsets() {
            let pulled = (k & above).map(|n| n - copy.x - 1);
            let psi = copy.radius(pulled);
            if let Some(&z) = filter
                .iter()
                .find(|&&z| near_point_ideal(center, k, z) && !near_point_ideal(center, psi, z))
            {
                return Ok(Verdict::fail(
                    Witness::new(WitnessKind::UnexpectedOutcome)
                        .with("center", center.describe())
                        .with("radius", k.describe())
                        .with("member", z.describe()),
                ));
            }
        }
    }
    Ok(Verdict::pass(Scope::Horizon(copy.window)))
}

/// `U_{≥x} ∈ exp B_K(U_{≥y}, [x, y])` on the window: every member of either
/// family lies in the `[x, y]`-hyperball of some member of the other.
pub fn check_copies_close(x: u32, y: u32, w: u32) -> Result<Verdict, Error> {
    if x >= y || y >= w {
        return Err(Error::WindowTooSmall { size: w });
    }
    let radius = FinSet::range(x, y + 1);
    let (ux, uy) = (upper_filter(x, w), upper_filter(y, w));
    let covered = |from: &[FinSet], to: &[FinSet]| {
        from.iter()
            .copied()
            .find(|&a| !to.iter().any(|&b| near_point_ideal(b, radius, a)))
    };
    if let Some(a) = covered(&ux, &uy).or_else(|| covered(&uy, &ux)) {
        return Ok(Verdict::fail(
            Witness::new(WitnessKind::UnexpectedOutcome)
                .with("x", Datum::Point(x))
                .with("y", Datum::Point(y))
                .with("uncovered", a.describe()),
        ));
    }
    Ok(Verdict::positive(
        Scope::Horizon(w),
        Evidence::of("radius", radius.describe()),
    ))
}

/// `{U_{≥x} : x < w}` partitions the non-empty subsets of `[0, w)`.
pub fn check_filter_partition(w: u32) -> Result<Verdict, Error> {
    if w > crate::ideal::MAX_FINITE {
        return Err(Error::WindowTooLarge { size: w });
    }
    let mut all: Vec<FinSet> = (0..w).flat_map(|x| upper_filter(x, w)).collect();
    let total = all.len();
    all.sort_unstable();
    all.dedup();
    let expected = (1u64 << w) - 1;
    if total != all.len() || all.len() as u64 != expected {
        return Ok(Verdict::fail(
            Witness::new(WitnessKind::PartitionMismatch)
                .with("members", Datum::Count(total as u64))
                .with("distinct", Datum::Count(all.len() as u64))
                .with("expected", Datum::Count(expected)),
        ));
    }
    Ok(Verdict::pass(Scope::Horizon(w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u32]) -> FinSet {
        FinSet::from_elements(xs.iter().copied())
    }

    #[test]
    fn embedding_examples() {
        let f = OmegaEmbedding::new();
        assert_eq!(f.embed(set(&[0])), set(&[0, 1]));
        assert_eq!(f.embed(set(&[2, 5])), set(&[4, 5, 11]));
        assert_eq!(f.embed(FinSet::EMPTY), FinSet::EMPTY);
        assert_eq!(f.preimage(set(&[4, 5, 11])), Some(set(&[2, 5])));
        assert_eq!(f.preimage(set(&[0, 3])), None);
        assert_eq!(f.radius(2), set(&[0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn omega_checks_hold_on_small_windows() {
        for h in 1..=8 {
            assert!(check_embedding_identity(h, None).unwrap().is_positive(), "{h}");
            assert!(check_parity_lemma(h, None).unwrap().is_positive());
            assert!(check_image_shape(h, None).unwrap().is_positive());
        }
        assert!(omega_radius_transport(6, None).unwrap().is_positive());
    }

    #[test]
    fn omega_faults_are_caught() {
        let shifted = Some(Fault::KcubeShiftedEven);
        assert!(check_image_shape(4, shifted).unwrap().is_failure());
        let shrunk = Some(Fault::KcubeShrunkRadius);
        assert!(check_embedding_identity(4, shrunk).unwrap().is_failure());
        assert!(omega_radius_transport(4, shrunk).unwrap().is_failure());
    }

    #[test]
    fn loose_image_description_overcounts() {
        let (shaped, members) = image_shape_gap(3).unwrap();
        // Subsets of [0, 6) with one even minimum versus the seven f(F).
        assert_eq!(members, 7);
        assert!(shaped > members);
    }

    #[test]
    fn filter_copy_checks() {
        let copy = FilterCopy::new(1, 6).unwrap();
        assert_eq!(copy.domain_size(), 4);
        assert_eq!(copy.embed(FinSet::EMPTY), set(&[1]));
        assert!(check_filter_copy_identity(copy).unwrap().is_positive());
        assert!(check_filter_copy_cofinality(copy).unwrap().is_positive());
        let m = copy.map().unwrap();
        assert!(m.is_asymorphism().is_positive());
        let chain = m.domain.radii();
        assert!(m.check_radius_transport(&chain, |k| copy.radius(*k)).unwrap().is_positive());
        assert!(check_copies_close(0, 1, 6).unwrap().is_positive());
        assert!(check_filter_partition(6).unwrap().is_positive());
        assert_eq!(FilterCopy::new(4, 6).unwrap_err(), Error::WindowTooSmall { size: 6 });
    }
}
