use alloc::vec::Vec;

use super::BalleanMap;
use crate::ballean::{Ballean, ElementBallean, SubBallean};
use crate::error::Error;
use crate::finset::FinSet;
use crate::hyper::{exp_ball_point_ideal, flat_support, ExpBallean};
use crate::ideal::Ideal;
use crate::verdict::{Datum, Describe, Evidence, Verdict, Witness, WitnessKind};

pub fn identity_map<D, C>(domain: D, codomain: C) -> BalleanMap<D, C, fn(D::Point) -> D::Point>
where
    D: Ballean,
    C: Ballean<Point = D::Point>,
{
    BalleanMap::new("identity", domain, codomain, core::convert::identity)
}

/// `exp f: A ↦ f(A)` between the hyperballeans of the element balleans.
pub fn exp_lift<'a, D, C, F>(
    m: &'a BalleanMap<D, C, F>,
) -> BalleanMap<ExpBallean<&'a D>, ExpBallean<&'a C>, impl Fn(FinSet) -> FinSet + 'a>
where
    D: ElementBallean,
    C: ElementBallean,
    F: Fn(u32) -> u32,
{
    BalleanMap::new(
        "exp",
        ExpBallean::new(&m.domain),
        ExpBallean::new(&m.codomain),
        move |a: FinSet| a.map(|x| m.apply(x)),
    )
}

/// `f^♭`: `exp f` restricted to the non-empty bounded sets on both sides.
pub fn flat_lift<'a, D, C, F>(
    m: &'a BalleanMap<D, C, F>,
) -> Result<
    BalleanMap<SubBallean<ExpBallean<&'a D>>, SubBallean<ExpBallean<&'a C>>, impl Fn(FinSet) -> FinSet + 'a>,
    Error,
>
where
    D: ElementBallean,
    C: ElementBallean,
    F: Fn(u32) -> u32,
{
    let source = flat_support(&m.domain);
    let target = flat_support(&m.codomain);
    let lift = move |a: FinSet| a.map(|x| m.apply(x));
    if let Some(&set) = source.iter().find(|&&a| target.binary_search(&lift(a)).is_err()) {
        return Err(Error::UnboundedImage { set });
    }
    Ok(BalleanMap::new(
        "flat",
        SubBallean::new(ExpBallean::new(&m.domain), source)?,
        SubBallean::new(ExpBallean::new(&m.codomain), target)?,
        lift,
    ))
}

/// `C: x ↦ X \ {x}` from a finite element ballean into its hyperballean.
pub fn complement_map<B: ElementBallean>(
    b: &B,
) -> BalleanMap<&B, ExpBallean<&B>, impl Fn(u32) -> FinSet> {
    let window = b.support_set();
    BalleanMap::new("complement", b, ExpBallean::new(b), move |x| window.without(x))
}

/// `CB: A ↦ X \ A` on the non-empty bounded sets; restricted to singletons
/// it is [`complement_map`].
pub fn complement_of_bounded_map<B: ElementBallean>(
    b: &B,
) -> Result<BalleanMap<SubBallean<ExpBallean<&B>>, ExpBallean<&B>, impl Fn(FinSet) -> FinSet>, Error> {
    let window = b.support_set();
    Ok(BalleanMap::new(
        "complementOfBounded",
        SubBallean::new(ExpBallean::new(b), flat_support(b))?,
        ExpBallean::new(b),
        move |a| window - a,
    ))
}

/// Replays the construction showing `CB` is not effectively proper on an
/// unbounded thin ballean, for its satellite `X_I` and a codomain radius `V`
/// with at least two points: for every domain radius `W` pick the least
/// `A_W = {m} ∈ I` missing `W ∪ V`; then the `V`-hyperball around `X \ A_W`
/// pulls back to several bounded sets while `B^♭(A_W, W) = {A_W}`.
///
/// On a finite model no `A_W` exists once `W` covers the ideal, and the
/// witness names that radius.
pub fn complement_of_bounded_escape(ideal: &Ideal, v: FinSet) -> Result<Verdict, Error> {
    ideal.require_radius(v)?;
    if v.len() < 2 {
        return Err(Error::RadiusNotInIdeal { radius: v });
    }
    let window = ideal.ground.window();
    let mut table = Vec::new();
    for w in ideal.radii() {
        let Some(m) = (window - (w | v))
            .iter()
            .find(|&m| ideal.contains(FinSet::singleton(m)))
        else {
            return Ok(Verdict::fail(
                Witness::new(WitnessKind::EscapeMissing)
                    .with("v", v.describe())
                    .with("w", w.describe()),
            ));
        };
        let a = FinSet::singleton(m);
        let preimages: Vec<FinSet> = exp_ball_point_ideal(ideal, window - a, v)?
            .into_iter()
            .map(|z| window - z)
            .filter(|p| !p.is_empty() && ideal.contains(*p))
            .collect();
        let near = exp_ball_point_ideal(ideal, a, w)?;
        let escaping = preimages.iter().filter(|p| !near.contains(p)).count();
        if escaping == 0 {
            return Ok(Verdict::fail(
                Witness::new(WitnessKind::UnexpectedOutcome)
                    .with("w", w.describe())
                    .with("a", a.describe())
                    .with("preimages", preimages.describe()),
            ));
        }
        table.push(Datum::Tuple(alloc::vec![
            w.describe(),
            a.describe(),
            Datum::Count(preimages.len() as u64),
        ]));
    }
    Ok(Verdict::positive(ideal.scope(), Evidence::of("escapes", Datum::Tuple(table))))
}

/// `U_x`: every subset of the window containing `x`, ascending.
pub fn principal_filter(window: FinSet, x: u32) -> Vec<FinSet> {
    window.subsets().filter(|s| s.contains(x)).collect()
}

/// `I_x`: the members of the ideal containing `x`, ascending.
pub fn principal_members(ideal: &Ideal, x: u32) -> Result<Vec<FinSet>, Error> {
    Ok(ideal
        .members()?
        .into_iter()
        .filter(|s| s.contains(x))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballean::{IaryBallean, PointIdealBallean};
    use crate::ideal::{all_finite_ideals, GroundSet};

    fn set(xs: &[u32]) -> FinSet {
        FinSet::from_elements(xs.iter().copied())
    }

    #[test]
    fn complement_is_asymorphism_onto_image_for_point_ideal() {
        for n in 2..=4 {
            for ideal in all_finite_ideals(n).unwrap() {
                let xi = PointIdealBallean::new(&ideal).unwrap();
                let c = complement_map(&xi);
                assert!(c.is_asymorphic_embedding().is_positive(), "{ideal:?}");
                let radii = xi.radii();
                assert!(c.check_radius_transport(&radii, |r| *r).unwrap().is_positive());
            }
        }
    }

    #[test]
    fn complement_on_one_point() {
        let i = Ideal::new(GroundSet::Finite(1), crate::ideal::IdealDescription::Explicit(alloc::vec![FinSet::EMPTY])).unwrap();
        let xi = PointIdealBallean::new(&i).unwrap();
        assert_eq!(complement_map(&xi).apply(0), FinSet::EMPTY);
    }

    #[test]
    fn complement_of_bounded_escape_needs_unbounded_model() {
        // On finite models the top radius leaves no room for `A_W`, and the
        // map really is effectively proper.
        for n in 3..=5 {
            for ideal in all_finite_ideals(n).unwrap() {
                let xi = PointIdealBallean::new(&ideal).unwrap();
                let cb = complement_of_bounded_map(&xi).unwrap();
                assert!(cb.is_effectively_proper().is_positive(), "{ideal:?}");
            }
        }
        let i = Ideal::principal(GroundSet::Finite(5), set(&[0, 1, 2])).unwrap();
        let w = complement_of_bounded_escape(&i, set(&[0, 1])).unwrap();
        assert_eq!(w.witness().unwrap().kind, WitnessKind::EscapeMissing);
        assert_eq!(w.witness().unwrap().field("w"), Some(&set(&[2]).describe()));

        let fr = Ideal::frechet(10).unwrap();
        let v = complement_of_bounded_escape(&fr, set(&[0, 1])).unwrap();
        assert!(matches!(v, Verdict::VerifiedToHorizon { horizon: 10, .. }), "{v:?}");
        assert!(complement_of_bounded_escape(&fr, set(&[0])).is_err());
    }

    #[test]
    fn exp_lift_of_identity_is_coarse_not_asymorphism() {
        let i = Ideal::principal(GroundSet::Finite(3), set(&[0, 1])).unwrap();
        let id = identity_map(PointIdealBallean::new(&i).unwrap(), IaryBallean::new(&i).unwrap());
        let j = exp_lift(&id);
        assert_eq!(j.apply(set(&[0, 2])), set(&[0, 2]));
        assert!(j.is_coarse().is_positive());
        assert!(j.is_asymorphism().is_failure());
        let flat = flat_lift(&id).unwrap();
        assert!(flat.is_coarse().is_positive());
    }

    #[test]
    fn filters_and_members() {
        assert_eq!(principal_filter(set(&[0, 1, 2]), 0), [set(&[0]), set(&[0, 1]), set(&[0, 2]), set(&[0, 1, 2])]);
        let i = Ideal::principal(GroundSet::Finite(3), set(&[0, 1])).unwrap();
        assert_eq!(principal_members(&i, 0).unwrap(), [set(&[0]), set(&[0, 1])]);
    }
}
