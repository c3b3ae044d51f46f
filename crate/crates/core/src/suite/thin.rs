use alloc::vec::Vec;

use super::{Builder, Expectation, NoteExt, SuiteModel, SuiteReport, Variant};
use crate::ballean::{
    bounding_radius, components, is_slowly_oscillating, is_thick, is_thin, make_satellite, verify_axioms,
    ElementBallean, IaryBallean, PointIdealBallean, SubBallean,
};
use crate::error::Error;
use crate::fault::Fault;
use crate::finset::FinSet;
use crate::hyper::ExpBallean;
use crate::ideal::Ideal;
use crate::maps::{complement_map, identity_map};
use crate::verdict::{Datum, Describe, Evidence, Verdict, Witness, WitnessKind};

/// Largest support the thin suite enumerates subsets and functions of.
pub const MAX_THIN_SUPPORT: u32 = 12;
/// Largest support for the non-thick hyperballean connectivity check.
const MAX_MESHY_SUPPORT: u32 = 10;

fn require_small<B: ElementBallean>(b: &B) -> Result<FinSet, Error> {
    let support = b.support_set();
    if support.len() > MAX_THIN_SUPPORT {
        return Err(Error::WindowTooLarge { size: support.len() });
    }
    Ok(support)
}

/// Every non-thick subset is bounded; the witness is the least non-thick
/// unbounded set.
pub fn check_nonthick_bounded<B: ElementBallean>(b: &B) -> Result<Verdict, Error> {
    let support = require_small(b)?;
    for set in support.subsets().skip(1) {
        let points = set.to_vec();
        if is_thick(b, &points).is_failure() && bounding_radius(b, &points).is_none() {
            return Ok(Verdict::fail(
                Witness::new(WitnessKind::Unbounded)
                    .with("set", set.describe())
                    .with("thick", Datum::Flag(false)),
            ));
        }
    }
    Ok(Verdict::pass(b.scope()))
}

/// Every `{0,1}`-valued function is slowly oscillating. The parity function
/// (ones on the even points) is tried first, then every function in
/// ascending order of its ones-set.
pub fn check_all_slowly_oscillating<B: ElementBallean>(b: &B) -> Result<Verdict, Error> {
    let support = require_small(b)?;
    let parity: Vec<u32> = support.iter().filter(|p| p % 2 == 0).collect();
    if let Some(w) = is_slowly_oscillating(b, &parity).witness() {
        return Ok(Verdict::fail(
            w.clone().with("function", Datum::Text("parity".into())),
        ));
    }
    for ones in support.subsets() {
        if let Some(w) = is_slowly_oscillating(b, &ones.to_vec()).witness() {
            return Ok(Verdict::fail(w.clone()));
        }
    }
    Ok(Verdict::pass(b.scope()))
}

/// For every `Y` with at least two points: `C(Y)` is bounded in `exp(B)` iff
/// some radius gives every `y ∈ Y` a non-singleton ball.
pub fn check_lemma_thin<B: ElementBallean>(b: &B) -> Result<Verdict, Error> {
    let support = require_small(b)?;
    let exp = ExpBallean::new(b);
    let radii = b.radii();
    for y in support.subsets().filter(|s| s.len() >= 2) {
        let mut images: Vec<FinSet> = y.iter().map(|p| support.without(p)).collect();
        images.sort_unstable();
        let bounded = bounding_radius(&exp, &images).is_some();
        let spread = radii
            .iter()
            .any(|r| y.iter().all(|p| b.ball(p, r).len() > 1));
        if bounded != spread {
            return Ok(Verdict::fail(
                Witness::new(WitnessKind::UnexpectedOutcome)
                    .with("y", y.describe())
                    .with("imageBounded", Datum::Flag(bounded))
                    .with("nonSingletonBalls", Datum::Flag(spread)),
            ));
        }
    }
    Ok(Verdict::pass(b.scope()))
}

/// Points whose ball is a singleton at every radius; for them the one-point
/// case of the lemma fails, which connectedness rules out.
fn check_no_isolated_points<B: ElementBallean>(b: &B) -> Verdict {
    let radii = b.radii();
    let isolated: Vec<u32> = b
        .points()
        .into_iter()
        .filter(|&p| radii.iter().all(|r| b.ball(p, r).len() == 1))
        .collect();
    if isolated.is_empty() {
        Verdict::pass(b.scope())
    } else {
        Verdict::fail(Witness::new(WitnessKind::IsolatedPoints).with("points", isolated.describe()))
    }
}

/// The subballean of `exp(B)` on the non-empty non-thick sets is connected.
fn check_meshy_connected<B: ElementBallean>(b: &B) -> Result<Verdict, Error> {
    let support = b.support_set();
    if support.len() > MAX_MESHY_SUPPORT {
        return Err(Error::WindowTooLarge { size: support.len() });
    }
    let meshy: Vec<FinSet> = support
        .subsets()
        .skip(1)
        .filter(|s| is_thick(b, &s.to_vec()).is_failure())
        .collect();
    let sub = SubBallean::scanning(ExpBallean::new(b), meshy)?;
    let classes = components(&sub);
    if classes.len() <= 1 {
        return Ok(Verdict::pass(b.scope()));
    }
    Ok(Verdict::fail(
        Witness::new(WitnessKind::Disconnected)
            .with("components", Datum::Count(classes.len() as u64))
            .with(
                "representatives",
                Datum::Family(classes.iter().map(|c| c[0]).collect()),
            ),
    ))
}

/// `B` coincides with its satellite: the identity onto the point-ideal
/// ballean of bounded sets is an asymorphism.
fn check_satellite<B: ElementBallean>(b: &B) -> Result<Verdict, Error> {
    let satellite = make_satellite(b)?;
    let sub = SubBallean::new(&satellite, b.points())?;
    Ok(identity_map(b, sub).is_asymorphism())
}

fn radius_of(v: &Verdict) -> Option<&Datum> {
    v.witness().and_then(|w| w.field("radius"))
}

fn run<B: ElementBallean<Radius = FinSet>>(
    b: &B,
    ideal: &Ideal,
    variant: Variant,
    in_hypothesis: bool,
) -> Builder {
    let mut out = Builder::new();
    let n = ideal.ground.window_size();
    let cover = ideal.cover();

    let symmetric = variant == Variant::PointIdeal || n < 2 || cover.is_empty();
    let axioms = out.push(
        "axioms",
        "balls contain their centre, are symmetric and upper multiplicative",
        Expectation::from_bool(symmetric),
        verify_axioms(b),
    );
    if !symmetric {
        axioms.note("I-ary balls {x} ∪ A are not symmetric once some member A is non-empty: a ∈ B(x, A) but x ∉ B(a, A) for a ∈ A, x ∉ A");
    }

    let expected = if in_hypothesis {
        Expectation::from_bool(variant == Variant::PointIdeal)
    } else {
        Expectation::Data
    };
    let finite_note = "finite model: outside the unbounded connected hypothesis; computed as data";
    let items = [
        ("thin", "(i) the ballean is thin", Ok(is_thin(b, &b.points()))),
        (
            "nonThickBounded",
            "(iii) every non-thick subset is bounded",
            check_nonthick_bounded(b),
        ),
        (
            "complementAsymorphism",
            "(v) C: x ↦ X \\ {x} is an asymorphism onto C(X)",
            Ok(complement_map(b).is_asymorphic_embedding()),
        ),
        (
            "slowlyOscillating",
            "(vi) every {0,1}-valued function is slowly oscillating",
            check_all_slowly_oscillating(b),
        ),
    ];
    let mut polarities = Vec::new();
    let mut thin_radius = None;
    let mut oscillation_radius = None;
    for (label, statement, verdict) in items {
        if let Ok(v) = &verdict {
            polarities.push((label, v.is_positive()));
            match label {
                "thin" => thin_radius = radius_of(v).cloned(),
                "slowlyOscillating" => oscillation_radius = radius_of(v).cloned(),
                _ => {}
            }
        }
        let check = out.push_result(label, statement, expected, verdict);
        if !in_hypothesis {
            check.note(finite_note);
        }
    }

    let consistent = polarities.windows(2).all(|w| w[0].1 == w[1].1);
    let verdict = if consistent && polarities.len() == 4 {
        Verdict::pass(b.scope())
    } else {
        Verdict::fail(
            polarities.iter().fold(Witness::new(WitnessKind::EquivalenceBroken), |w, (l, p)| {
                w.with(l, Datum::Flag(*p))
            }),
        )
    };
    let check = out.push(
        "equivalence",
        "(i), (iii), (v) and (vi) all hold or all fail",
        if in_hypothesis { Expectation::Positive } else { Expectation::Data },
        verdict,
    );
    if !in_hypothesis {
        check.note(finite_note);
    }

    // When (i) and (vi) both fail they should fail at the same radius, with
    // the parity function witnessing (vi).
    let common = match (&thin_radius, &oscillation_radius) {
        (Some(a), Some(c)) if a == c => Verdict::positive(b.scope(), Evidence::of("radius", a.clone())),
        (Some(a), Some(c)) => Verdict::fail(
            Witness::new(WitnessKind::UnexpectedOutcome)
                .with("thinRadius", a.clone())
                .with("oscillationRadius", c.clone()),
        ),
        _ => Verdict::fail(Witness::new(WitnessKind::UnexpectedOutcome).with("bothFail", Datum::Flag(false))),
    };
    out.push(
        "commonWitness",
        "the thinness and slow-oscillation failures share their radius",
        if in_hypothesis && variant == Variant::Iary {
            Expectation::Positive
        } else {
            Expectation::Data
        },
        common,
    );

    out.push_result(
        "lemmaThin",
        "for |Y| ≥ 2: C(Y) is bounded in exp(B) iff some radius gives every y ∈ Y a non-singleton ball",
        if variant == Variant::PointIdeal { Expectation::Positive } else { Expectation::Data },
        check_lemma_thin(b),
    );
    out.push(
        "noIsolatedPoints",
        "no point has a singleton ball at every radius (the one-point case of the lemma)",
        Expectation::Data,
        check_no_isolated_points(b),
    )
    .note("connectedness excludes isolated points; finite models and horizon windows have them");

    if ideal.ground.is_finite() {
        let check = out.push_result(
            "satelliteCoincides",
            "(ii) the ballean coincides with its satellite",
            Expectation::Data,
            check_satellite(b),
        );
        check.note("only meaningful on unbounded connected balleans");
    } else {
        out.unavailable(
            "satelliteCoincides",
            "(ii) the ballean coincides with its satellite",
            "the bounded family of a horizon window is not the satellite's ideal",
        );
    }
    let check = out.push_result(
        "meshyConnected",
        "(iv) the hyperballean of non-empty non-thick sets is connected",
        Expectation::Data,
        check_meshy_connected(b),
    );
    check.note("only meaningful on unbounded connected balleans");
    out
}

pub fn suite_thin(ideal: &Ideal, variant: Variant, fault: Option<Fault>) -> Result<SuiteReport, Error> {
    let in_hypothesis = !ideal.ground.is_finite();
    let out = match variant {
        Variant::PointIdeal => {
            let b = PointIdealBallean::with_fault(ideal, fault)?;
            require_small(&b)?;
            run(&b, ideal, variant, in_hypothesis)
        }
        Variant::Iary => {
            let b = IaryBallean::with_fault(ideal, fault)?;
            require_small(&b)?;
            run(&b, ideal, variant, in_hypothesis)
        }
    };
    Ok(out.finish(
        "thin",
        SuiteModel::Ballean {
            ideal: ideal.clone(),
            variant,
        },
        fault,
        in_hypothesis,
    ))
}
