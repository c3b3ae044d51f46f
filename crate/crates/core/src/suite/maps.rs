use alloc::format;
use alloc::vec::Vec;

use super::{Builder, Expectation, NoteExt, SuiteModel, SuiteReport};
use crate::ballean::{is_large, ElementBallean, IaryBallean, PointIdealBallean, SubBallean};
use crate::error::Error;
use crate::fault::Fault;
use crate::finset::FinSet;
use crate::hyper::{exp_star, macrocube_with, HyperBallean, HyperRule};
use crate::ideal::Ideal;
use crate::maps::{exp_lift, flat_lift, identity_map, principal_filter, principal_members, ring_intersection, ring_sum, BalleanMap};
use crate::verdict::{Datum, Describe, Evidence, Verdict, Witness, WitnessKind};

/// Largest ground for the maps suite.
pub const MAX_MAPS_GROUND: u32 = 6;
/// Largest ground for the ring operations, whose product has `4^n` points.
const MAX_RING_GROUND: u32 = 4;
/// Grounds up to this size lift every self-map; larger ones a fixed family.
const MAX_ALL_MAPS_GROUND: u32 = 3;
const MAX_LIFT_GROUND: u32 = 4;

/// Self-maps of `[0, n)` as value tables: all of them for small `n`,
/// otherwise the identity, the constants, the adjacent transpositions and
/// the cycle.
fn self_maps(n: u32) -> Vec<Vec<u32>> {
    if n <= MAX_ALL_MAPS_GROUND {
        let total = (n as usize).pow(n);
        return (0..total)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let v = (code % n as usize) as u32;
                        code /= n as usize;
                        v
                    })
                    .collect()
            })
            .collect();
    }
    let mut out = alloc::vec![(0..n).collect::<Vec<u32>>()];
    out.extend((0..n).map(|c| alloc::vec![c; n as usize]));
    for i in 0..n - 1 {
        let mut t: Vec<u32> = (0..n).collect();
        t.swap(i as usize, i as usize + 1);
        out.push(t);
    }
    out.push((0..n).map(|i| (i + 1) % n).collect());
    out
}

/// Which of the lift equivalences a map breaks.
#[derive(Default)]
struct LiftFailures {
    /// `coarse(f) ⇔ coarse(exp f)` or the same for coarse embeddings.
    exp: Option<Witness>,
    /// `f` coarse (embedding) but `f^♭` undefined or not.
    flat_forward: Option<Witness>,
    /// `f^♭` coarse (embedding) but `f` not.
    flat_converse: Option<Witness>,
}

fn lift_witness(table: &[u32], base: (bool, bool), other: (bool, bool), flat_defined: bool) -> Witness {
    Witness::new(WitnessKind::EquivalenceBroken)
        .with("map", table.to_vec().describe())
        .with("coarse", Datum::Flag(base.0))
        .with("embedding", Datum::Flag(base.1))
        .with("liftCoarse", Datum::Flag(other.0))
        .with("liftEmbedding", Datum::Flag(other.1))
        .with("flatDefined", Datum::Flag(flat_defined))
}

/// `coarse(f) ⇔ coarse(exp f) ⇔ coarse(f^♭)` and the same for coarse
/// embeddings, for one map between two element balleans.
fn lift_failures<D, C>(d: &D, c: &C, table: &[u32]) -> Result<LiftFailures, Error>
where
    D: ElementBallean,
    C: ElementBallean,
{
    let m = BalleanMap::new("f", d, c, |x: u32| table[x as usize]);
    let e = exp_lift(&m);
    let base = (m.is_coarse().is_positive(), m.is_coarse_embedding().is_positive());
    let exp = (e.is_coarse().is_positive(), e.is_coarse_embedding().is_positive());
    // A non-coarse map may send bounded sets to unbounded ones; then `f^♭`
    // is not well-defined, which the equivalence allows.
    let flat = match flat_lift(&m) {
        Ok(f) => Some((f.is_coarse().is_positive(), f.is_coarse_embedding().is_positive())),
        Err(Error::UnboundedImage { .. }) => None,
        Err(e) => return Err(e),
    };
    let lifted = flat.unwrap_or((false, false));
    let mut out = LiftFailures::default();
    if base != exp {
        out.exp = Some(lift_witness(table, base, exp, flat.is_some()));
    }
    if (base.0 && !lifted.0) || (base.1 && !lifted.1) {
        out.flat_forward = Some(lift_witness(table, base, lifted, flat.is_some()));
    }
    if (lifted.0 && !base.0) || (lifted.1 && !base.1) {
        out.flat_converse = Some(lift_witness(table, base, lifted, flat.is_some()));
    }
    Ok(out)
}

/// Sweeps every self-map between every pair of the two element balleans
/// and returns the three lift verdicts, each with its least failing map.
fn check_morphism_lifts(ideal: &Ideal, fault: Option<Fault>) -> Result<[Verdict; 3], Error> {
    let n = ideal.ground.window_size();
    if n > MAX_LIFT_GROUND {
        return Err(Error::WindowTooLarge { size: n });
    }
    let xi = PointIdealBallean::with_fault(ideal, fault)?;
    let xa = IaryBallean::with_fault(ideal, fault)?;
    let maps = self_maps(n);
    let mut first = LiftFailures::default();
    for table in &maps {
        for found in [
            lift_failures(&xi, &xi, table)?,
            lift_failures(&xi, &xa, table)?,
            lift_failures(&xa, &xi, table)?,
            lift_failures(&xa, &xa, table)?,
        ] {
            first.exp = first.exp.or(found.exp);
            first.flat_forward = first.flat_forward.or(found.flat_forward);
            first.flat_converse = first.flat_converse.or(found.flat_converse);
        }
    }
    let verdict = |w: Option<Witness>| match w {
        Some(w) => Verdict::fail(w),
        None => Verdict::positive(ideal.scope(), Evidence::of("maps", Datum::Count(maps.len() as u64))),
    };
    Ok([verdict(first.exp), verdict(first.flat_forward), verdict(first.flat_converse)])
}

pub fn suite_maps(ideal: &Ideal, x: u32, fault: Option<Fault>) -> Result<SuiteReport, Error> {
    if !ideal.ground.is_finite() {
        return Err(Error::FiniteGroundRequired);
    }
    ideal.require_valid()?;
    let n = ideal.ground.window_size();
    if n > MAX_MAPS_GROUND {
        return Err(Error::WindowTooLarge { size: n });
    }
    let window = ideal.ground.window();
    if !window.contains(x) {
        return Err(Error::OutsideSupport { point: x });
    }
    let cover = ideal.cover();
    // Away from these two extremes some x ∉ ∪I gets the I-ary ball {x} ∪ K
    // while its point-ideal ball stays {x}.
    let gap = !cover.is_empty() && cover != window;
    let gap_note = "on a finite model the failure needs some F ∈ I non-empty and some x ∉ ∪I: ∪I ∉ {∅, X}";
    let covered = cover.contains(x);
    let mut out = Builder::new();

    let xi = PointIdealBallean::with_fault(ideal, fault)?;
    let xa = IaryBallean::with_fault(ideal, fault)?;
    let exp_point = HyperBallean::with_fault(ideal, HyperRule::PointIdeal, fault)?;
    let exp_iary = HyperBallean::with_fault(ideal, HyperRule::Iary, fault)?;
    let cartesian = HyperBallean::with_fault(ideal, HyperRule::Cartesian, fault)?;

    let id = identity_map(&xi, &xa);
    out.push("identityCoarse", "id: X_I → X_I-ary is coarse", Expectation::Positive, id.is_coarse());
    out.push(
        "identityNotProper",
        "id: X_I → X_I-ary is not effectively proper",
        Expectation::from_bool(!gap),
        id.is_effectively_proper(),
    )
    .note(gap_note);

    let j = identity_map(&exp_point, &exp_iary);
    out.push("expIdentityCoarse", "j = exp id: exp(X_I) → exp(X_I-ary) is coarse", Expectation::Positive, j.is_coarse());
    out.push(
        "expIdentityNotAsymorphism",
        "j = exp id: exp(X_I) → exp(X_I-ary) is not an asymorphism",
        Expectation::from_bool(!gap),
        j.is_asymorphism(),
    )
    .note(gap_note);

    let jc = identity_map(&exp_iary, &cartesian);
    out.push("cartesianIdentityCoarse", "j: exp(X_I-ary) → C(X, I) is coarse", Expectation::Positive, jc.is_coarse());
    let check = out.push(
        "cartesianIdentityNotAsymorphism",
        "j: exp(X_I-ary) → C(X, I) is not an asymorphism",
        Expectation::from_bool(cover.is_empty()),
        jc.is_asymorphism(),
    );
    if cover.is_empty() {
        check.note("for I = {∅} the component of ∅ in C(X, I) is {∅} as well");
    }

    let flat = flat_lift(&id);
    let flat_coarse = flat.as_ref().map(|f| f.is_coarse()).map_err(Clone::clone);
    let flat_asym = flat.as_ref().map(|f| f.is_asymorphism()).map_err(Clone::clone);
    out.push_result("flatIdentityCoarse", "i = id^♭: X_I^♭ → X_I-ary^♭ is coarse", Expectation::Positive, flat_coarse);
    out.push_result(
        "flatIdentityNotAsymorphism",
        "i = id^♭: X_I^♭ → X_I-ary^♭ is not an asymorphism",
        Expectation::Positive,
        flat_asym,
    )
    .note("on a finite model both flat supports are I \\ {∅} plus singletons and ∪I is a radius meeting every A \\ K, so i is an asymorphism; the failure needs A = K ∪ {m} with m outside every fixed radius");

    // j restricted to U_x and I_x.
    let ux = principal_filter(window, x);
    let ix = principal_members(ideal, x)?;
    let outside_note = "x ∉ ∪I: I_x is empty, so the restriction has no cofinal radii";
    let expected = if covered { Expectation::Positive } else { Expectation::Data };
    let on_ux = identity_map(
        SubBallean::new(&exp_point, ux.clone())?,
        SubBallean::new(&exp_iary, ux.clone())?,
    );
    let note_outside = |check: &mut super::Check| {
        if !covered {
            check.note(outside_note);
        }
    };
    note_outside(out.push(
        "filterAsymorphism",
        "j↾U_x is an asymorphism between the subballeans on U_x",
        expected,
        on_ux.is_asymorphism(),
    ));
    if covered {
        out.push_result(
            "filterBallIdentity",
            "exp B_I(C, A) ∩ U_x = exp B_I-ary(C, A) ∩ U_x for A ∈ I_x",
            Expectation::Positive,
            on_ux.check_radius_transport(&ix, |r| *r),
        );
    } else {
        out.unavailable("filterBallIdentity", "exp B_I(C, A) ∩ U_x = exp B_I-ary(C, A) ∩ U_x for A ∈ I_x", outside_note);
    }
    note_outside(out.push(
        "filterLargeInCartesian",
        "U_x is large in C(X, I), with radius {x}",
        expected,
        is_large(&cartesian, &ux),
    ));
    let into_cartesian = identity_map(SubBallean::new(&exp_point, ux.clone())?, &cartesian);
    note_outside(out.push(
        "filterEquivalentToCartesian",
        "j↾U_x is a coarse equivalence into C(X, I)",
        expected,
        into_cartesian.is_coarse_equivalence(),
    ));
    let star = exp_star(&exp_iary)?;
    let into_star = identity_map(SubBallean::new(&exp_point, ux)?, &star);
    note_outside(out.push(
        "filterEquivalentToExpStar",
        "j↾U_x is a coarse equivalence into exp*(X_I-ary)",
        expected,
        into_star.is_coarse_equivalence(),
    ));

    if covered {
        let on_ix = identity_map(
            SubBallean::new(&exp_point, ix.clone())?,
            SubBallean::new(&exp_iary, ix.clone())?,
        );
        out.push(
            "idealAsymorphism",
            "j↾I_x is an asymorphism between the subballeans of X_I^♭ and X_I-ary^♭",
            Expectation::Positive,
            on_ix.is_asymorphism(),
        );
        let cube = macrocube_with(ideal, fault)?;
        let into_cube = identity_map(SubBallean::new(&exp_point, ix.clone())?, &cube);
        out.push(
            "idealEquivalentToMacrocube",
            "j↾I_x is a coarse equivalence into K(X, I)",
            Expectation::Positive,
            into_cube.is_coarse_equivalence(),
        );
        let flat_iary: Vec<FinSet> = ideal.members()?.into_iter().filter(|s| !s.is_empty()).collect();
        let into_flat = identity_map(SubBallean::new(&exp_point, ix)?, SubBallean::new(&exp_iary, flat_iary)?);
        out.push(
            "idealEquivalentToFlatIary",
            "j↾I_x is a coarse equivalence into X_I-ary^♭",
            Expectation::Positive,
            into_flat.is_coarse_equivalence(),
        );
    } else {
        for label in ["idealAsymorphism", "idealEquivalentToMacrocube", "idealEquivalentToFlatIary"] {
            out.unavailable(label, "restrictions of j to I_x", outside_note);
        }
    }

    if n <= MAX_RING_GROUND {
        out.push(
            "ringSumCoarse",
            "(f, g) ↦ f △ g is coarse on C(X, I) with componentwise radii",
            Expectation::Positive,
            ring_sum(&cartesian).is_coarse(),
        );
        out.push(
            "ringProductCoarse",
            "(f, g) ↦ f ∩ g is coarse on C(X, I) with componentwise radii",
            Expectation::Positive,
            ring_intersection(&cartesian).is_coarse(),
        );
        out.push(
            "expIaryRingSum",
            "(f, g) ↦ f △ g on exp(X_I-ary)",
            Expectation::Data,
            ring_sum(&exp_iary).is_coarse(),
        )
        .note("the failure for exp(X_I-ary) is asserted without a witness; reported as found");
        out.push(
            "expIaryRingProduct",
            "(f, g) ↦ f ∩ g on exp(X_I-ary)",
            Expectation::Data,
            ring_intersection(&exp_iary).is_coarse(),
        )
        .note("the failure for exp(X_I-ary) is asserted without a witness; reported as found");
    } else {
        out.unavailable("ringSumCoarse", "ring operations on C(X, I)", "ground above the product sweep limit");
    }

    if n <= MAX_LIFT_GROUND {
        let family = if n <= MAX_ALL_MAPS_GROUND { "all self-maps" } else { "a family of self-maps" };
        match check_morphism_lifts(ideal, fault) {
            Ok([exp, forward, converse]) => {
                out.push(
                    "morphismLiftExp",
                    &format!("coarse(f) ⇔ coarse(exp f), likewise for coarse embeddings, over {family}"),
                    Expectation::Positive,
                    exp,
                );
                out.push(
                    "morphismLiftFlat",
                    &format!("coarse(f) ⇒ f^♭ well-defined and coarse, likewise for coarse embeddings, over {family}"),
                    Expectation::Positive,
                    forward,
                );
                out.push(
                    "morphismLiftFlatConverse",
                    &format!("coarse(f^♭) ⇒ coarse(f), likewise for coarse embeddings, over {family}"),
                    Expectation::Data,
                    converse,
                )
                .note("on a finite model ∪I is a top radius of the bounded sets, so f^♭ can be a coarse embedding while f is not");
            }
            Err(e) => {
                out.push_result("morphismLiftExp", "morphism lifts", Expectation::Positive, Err(e));
            }
        }
    } else {
        out.unavailable("morphismLiftExp", "morphism lifts", "ground above the lift sweep limit");
    }

    Ok(out.finish("maps", SuiteModel::IdealAt { ideal: ideal.clone(), x }, fault, false))
}
