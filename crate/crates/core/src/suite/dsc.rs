use alloc::format;
use alloc::vec::Vec;

use super::{Builder, Expectation, NoteExt, SuiteModel, SuiteReport};
use crate::ballean::{component, components, verify_axioms, Ballean};
use crate::error::Error;
use crate::fault::Fault;
use crate::finset::FinSet;
use crate::hyper::{dsc_with, DscMethod, Flavor, HyperBallean, HyperRule};
use crate::ideal::Ideal;
use crate::quotient::quotient_cosets_with;
use crate::verdict::{Datum, Describe, Evidence, Scope, Verdict, Witness, WitnessKind};

/// Largest ground on which the suite runs.
pub const MAX_DSC_GROUND: u32 = 10;
/// Largest ground for the axiom and ball-size sweeps over every radius pair.
const MAX_AXIOM_GROUND: u32 = 5;

fn count_check(counts: &[(&'static str, u64)], scope: Scope) -> Verdict {
    if counts.windows(2).all(|w| w[0].1 == w[1].1) {
        Verdict::positive(scope, Evidence::of("count", Datum::Count(counts[0].1)))
    } else {
        Verdict::fail(
            counts
                .iter()
                .fold(Witness::new(WitnessKind::CountMismatch), |w, (m, c)| w.with(m, Datum::Count(*c))),
        )
    }
}

fn equal_counts(left: (&'static str, u64), right: (&'static str, u64)) -> Verdict {
    count_check(&[left, right], Scope::Exhaustive)
}

fn flavor_name(f: Flavor) -> &'static str {
    match f {
        Flavor::PointIdeal => "pointIdeal",
        Flavor::Iary => "iary",
        Flavor::Cartesian => "cartesian",
        Flavor::ExpStarPointIdeal => "expStarPointIdeal",
        Flavor::ExpStarIary => "expStarIary",
    }
}

/// `|B(A, K)| = 2^|K|` for every Cartesian ball.
fn check_cartesian_ball_sizes(c: &HyperBallean) -> Verdict {
    for k in c.radii() {
        for a in c.points() {
            let size = c.ball(a, &k).len() as u64;
            if size != 1 << k.len() {
                return Verdict::fail(
                    Witness::new(WitnessKind::CountMismatch)
                        .with("center", a.describe())
                        .with("radius", k.describe())
                        .with("size", Datum::Count(size)),
                );
            }
        }
    }
    Verdict::pass(Scope::Exhaustive)
}

pub fn suite_dsc(ideal: &Ideal, fault: Option<Fault>) -> Result<SuiteReport, Error> {
    if !ideal.ground.is_finite() {
        return Err(Error::FiniteGroundRequired);
    }
    ideal.require_valid()?;
    let n = ideal.ground.window_size();
    if n > MAX_DSC_GROUND {
        return Err(Error::WindowTooLarge { size: n });
    }
    let mut out = Builder::new();
    let cover = ideal.cover();
    let iota = ideal.iota()?;
    let nonempty_cover = !cover.is_empty();

    let cartesian = HyperBallean::with_fault(ideal, HyperRule::Cartesian, fault)?;
    let exp_point = HyperBallean::with_fault(ideal, HyperRule::PointIdeal, fault)?;
    let exp_iary = HyperBallean::with_fault(ideal, HyperRule::Iary, fault)?;

    if n <= MAX_AXIOM_GROUND {
        for (label, h) in [
            ("axioms.cartesian", &cartesian),
            ("axioms.pointIdeal", &exp_point),
            ("axioms.iary", &exp_iary),
        ] {
            out.push(label, "the closed-form hyperballs satisfy the ballean axioms", Expectation::Positive, verify_axioms(h));
        }
        out.push(
            "cartesianBallSizes",
            "every Cartesian ball B(A, K) has 2^|K| members",
            Expectation::Positive,
            check_cartesian_ball_sizes(&cartesian),
        );
    } else {
        out.unavailable("axioms", "the closed-form hyperballs satisfy the ballean axioms", "ground above the axiom sweep limit");
    }

    // Closeness in C(X, I) is Y △ Z ∈ I: the components are the cosets.
    let cosets = quotient_cosets_with(ideal, fault)?;
    let classes = components(&cartesian);
    let same = classes.as_slice() == cosets.classes();
    out.push(
        "closenessIsSymmetricDifference",
        "components of C(X, I) are the cosets Y △ Z ∈ I",
        Expectation::Positive,
        Verdict::from_bool(same, Scope::Exhaustive, || {
            Witness::new(WitnessKind::PartitionMismatch)
                .with("components", Datum::Count(classes.len() as u64))
                .with("cosets", Datum::Count(cosets.len() as u64))
        }),
    );
    let zero = component(&cartesian, FinSet::EMPTY);
    let members = ideal.members()?;
    out.push(
        "zeroComponentIsIdeal",
        "the component of ∅ in C(X, I) is I",
        Expectation::Positive,
        Verdict::from_bool(zero == members, Scope::Exhaustive, || {
            Witness::new(WitnessKind::SetMismatch).with("component", Datum::Family(zero.clone()))
        }),
    );

    let mut direct = Vec::new();
    for flavor in [
        Flavor::Cartesian,
        Flavor::Iary,
        Flavor::ExpStarIary,
        Flavor::PointIdeal,
        Flavor::ExpStarPointIdeal,
    ] {
        let counts: Result<Vec<(&'static str, u64)>, Error> = [DscMethod::Components, DscMethod::Quotient, DscMethod::Crt]
            .into_iter()
            .map(|m| dsc_with(ideal, flavor, m, fault).map(|c| (m.name(), c)))
            .collect();
        let counts = counts?;
        direct.push((flavor, counts[0].1));
        let point = matches!(flavor, Flavor::PointIdeal | Flavor::ExpStarPointIdeal);
        let label = format!("methodsAgree.{}", flavor_name(flavor));
        let check = out.push(
            &label,
            "components, quotient cosets and 2^ι count the same components",
            Expectation::from_bool(!(point && nonempty_cover)),
            count_check(&counts, Scope::Exhaustive),
        );
        if point && nonempty_cover {
            check.note("a non-empty set missing ∪I is isolated in exp(X_I) on a finite model, so the direct count is 2^(ι+1), not 2^ι + 1");
        }
    }
    let get = |f: Flavor| direct.iter().find(|(g, _)| *g == f).map(|(_, c)| *c).unwrap_or(0);

    let isolated = if nonempty_cover { 1u64 << (iota + 1) } else { 1u64 << n };
    out.push(
        "pointIdealComponents",
        "exp(X_I) has 2^(ι+1) components (2^|X| when ∪I = ∅) on a finite model",
        Expectation::Positive,
        equal_counts(("components", get(Flavor::PointIdeal)), ("formula", isolated)),
    );
    out.push(
        "finiteCase",
        "dsc(C(X, I)) = 2^ι",
        Expectation::Positive,
        equal_counts(("components", get(Flavor::Cartesian)), ("formula", 1 << iota)),
    );
    let check = out.push(
        "expIsCartesianPlusOne",
        "dsc(exp(X_I-ary)) = dsc(C(X, I)) + 1 when I ≠ {∅}",
        Expectation::Positive,
        equal_counts(
            ("exp", get(Flavor::Iary)),
            ("cartesianPlusOne", get(Flavor::Cartesian) + u64::from(nonempty_cover)),
        ),
    );
    if !nonempty_cover {
        check.note("for I = {∅} the isolated ∅ is already the coset {∅}: no +1");
    }
    for (label, full, star) in [
        ("expIsExpStarPlusOne.iary", Flavor::Iary, Flavor::ExpStarIary),
        ("expIsExpStarPlusOne.pointIdeal", Flavor::PointIdeal, Flavor::ExpStarPointIdeal),
    ] {
        out.push(
            label,
            "dsc(exp(B)) = dsc(exp*(B)) + 1",
            Expectation::Positive,
            equal_counts(("exp", get(full)), ("expStarPlusOne", get(star) + 1)),
        );
    }
    out.push(
        "maximalIffTwo",
        "dsc(C(X, I)) = 2 iff I is maximal",
        Expectation::Positive,
        Verdict::from_bool((get(Flavor::Cartesian) == 2) == ideal.is_maximal(), Scope::Exhaustive, || {
            Witness::new(WitnessKind::UnexpectedOutcome)
                .with("count", Datum::Count(get(Flavor::Cartesian)))
                .with("maximal", Datum::Flag(ideal.is_maximal()))
        }),
    );

    // Q_exp(X_I)(A) = Q_exp(X_I-ary)(A) for every non-empty A.
    let point_classes = components(&exp_point);
    let iary_classes = components(&exp_iary);
    let check = out.push(
        "sameComponentsForExpFlavors",
        "exp(X_I) and exp(X_I-ary) have the same components",
        Expectation::from_bool(!nonempty_cover),
        Verdict::from_bool(point_classes == iary_classes, Scope::Exhaustive, || {
            let a = cover
                .subsets()
                .next()
                .map(|_| (ideal.ground.window() - cover).min().map(FinSet::singleton).unwrap_or(FinSet::EMPTY))
                .unwrap_or(FinSet::EMPTY);
            Witness::new(WitnessKind::PartitionMismatch)
                .with("set", a.describe())
                .with("pointIdealComponent", Datum::Family(component(&exp_point, a)))
                .with("iaryComponent", Datum::Family(component(&exp_iary, a)))
        }),
    );
    if nonempty_cover {
        check.note("enlarging the radius to K ∪ {x, y} needs every point in some member of I, which fails on finite models");
    }

    Ok(out.finish("dsc", SuiteModel::Ideal { ideal: ideal.clone() }, fault, false))
}
