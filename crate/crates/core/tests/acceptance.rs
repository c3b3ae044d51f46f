//! One line per acceptance criterion. Criteria whose literal statement is
//! false on the models we can enumerate print FAIL; the run still succeeds
//! when every failure is exactly the documented one, and aborts otherwise.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ballean_core::ballean::{verify_axioms, Ballean, IaryBallean, PointIdealBallean};
use ballean_core::error::Error;
use ballean_core::fault::Fault;
use ballean_core::hyper::{
    dsc, exp_ball_generic, exp_ball_iary, exp_ball_point_ideal, exp_star, flat, macrocube, DscMethod, Flavor,
    HyperBallean, HyperRule,
};
use ballean_core::ideal::{all_finite_ideals, Ideal};
use ballean_core::kcube::{check_embedding_identity, check_image_shape, check_parity_lemma};
use ballean_core::maps::identity_map;
use ballean_core::suite::{suite_dsc, suite_kcubes, suite_maps, suite_thin, SuiteReport, Variant};
use ballean_core::verdict::WitnessKind;

struct Outcome {
    pass: bool,
    detail: String,
    /// `Some(reason)` when the literal criterion is known to fail and the
    /// observed failures match that analysis exactly.
    documented: Option<&'static str>,
}

impl Outcome {
    fn pass(detail: String) -> Self {
        Outcome { pass: true, detail, documented: None }
    }

    fn fail(detail: String) -> Self {
        Outcome { pass: false, detail, documented: None }
    }
}

fn ideals(sizes: std::ops::RangeInclusive<u32>) -> Result<Vec<Ideal>, Error> {
    let mut out = Vec::new();
    for n in sizes {
        out.extend(all_finite_ideals(n)?);
    }
    Ok(out)
}

fn criterion1() -> Result<Outcome, Error> {
    let mut balls = 0u64;
    for ideal in ideals(1..=4)? {
        let xi = PointIdealBallean::new(&ideal)?;
        let xa = IaryBallean::new(&ideal)?;
        for k in ideal.members()? {
            for a in ideal.ground.window().subsets() {
                let closed = exp_ball_point_ideal(&ideal, a, k)?;
                if closed != exp_ball_generic(&xi, a, &k) {
                    return Ok(Outcome::fail(format!("point-ideal hyperball differs on {ideal:?}, A={a:?}, K={k:?}")));
                }
                let closed = exp_ball_iary(&ideal, a, k)?;
                if closed != exp_ball_generic(&xa, a, &k) {
                    return Ok(Outcome::fail(format!("I-ary hyperball differs on {ideal:?}, A={a:?}, K={k:?}")));
                }
                balls += 2;
            }
        }
    }
    Ok(Outcome::pass(format!("{balls} hyperballs equal the brute-force oracle")))
}

const FLAVORS: [Flavor; 5] = [
    Flavor::PointIdeal,
    Flavor::Iary,
    Flavor::Cartesian,
    Flavor::ExpStarPointIdeal,
    Flavor::ExpStarIary,
];

fn criterion2() -> Result<Outcome, Error> {
    let (mut models, mut disagreements, mut plus_one) = (0u32, 0u32, 0u32);
    let mut unexplained = Vec::new();
    for ideal in ideals(1..=10)? {
        models += 1;
        let n = ideal.ground.window_size();
        let cover_empty = ideal.cover().is_empty();
        let mut count = |flavor| -> Result<u64, Error> {
            let quotient = dsc(&ideal, flavor, DscMethod::Quotient)?;
            let mut agree = dsc(&ideal, flavor, DscMethod::Crt)? == quotient;
            let mut direct = quotient;
            if n <= 4 {
                direct = dsc(&ideal, flavor, DscMethod::Components)?;
                agree &= direct == quotient;
            }
            if !agree {
                // exp(X_I) isolates every non-empty set outside the cover.
                let explained = !cover_empty && matches!(flavor, Flavor::PointIdeal | Flavor::ExpStarPointIdeal);
                disagreements += 1;
                if !explained {
                    unexplained.push(format!("{flavor:?} methods disagree on {ideal:?}"));
                }
            }
            Ok(direct)
        };
        let counts: Vec<u64> = FLAVORS.iter().map(|&f| count(f)).collect::<Result<_, _>>()?;
        let cartesian = counts[2];
        let iota = ideal.iota()?;
        if cartesian != 1 << iota {
            unexplained.push(format!("Cartesian count {cartesian} != 2^{iota} on {ideal:?}"));
        }
        for (flavor, exp) in [(Flavor::PointIdeal, counts[0]), (Flavor::Iary, counts[1])] {
            if exp == cartesian + 1 {
                continue;
            }
            plus_one += 1;
            // With I = {∅} the isolated ∅ is already one of the 2^n cosets;
            // the point-ideal flavor also isolates sets outside the cover.
            let explained = cover_empty || (flavor == Flavor::PointIdeal && n <= 4);
            if !explained {
                unexplained.push(format!("{flavor:?}: exp {exp} != Cartesian {cartesian} + 1 on {ideal:?}"));
            }
        }
    }
    let detail = format!(
        "{models} models: {disagreements} method disagreements, {plus_one} exp = Cartesian + 1 failures"
    );
    if let Some(first) = unexplained.first() {
        return Ok(Outcome::fail(format!("{detail}; unexplained: {first}")));
    }
    if disagreements == 0 && plus_one == 0 {
        return Ok(Outcome::pass(detail));
    }
    Ok(Outcome {
        pass: false,
        detail,
        documented: Some("exp(X_I) isolates non-empty sets outside a non-empty cover; +1 needs I != {∅}"),
    })
}

fn criterion3() -> Result<Outcome, Error> {
    let mut models: Vec<Ideal> = ideals(1..=8)?
        .into_iter()
        .filter(|i| {
            let cover = i.cover();
            !cover.is_empty() && cover != i.ground.window()
        })
        .collect();
    models.push(Ideal::frechet(12)?);
    for ideal in &models {
        let xi = PointIdealBallean::new(ideal)?;
        let xa = IaryBallean::new(ideal)?;
        let id = identity_map(&xi, &xa);
        let coarse = id.is_coarse();
        let proper = id.is_effectively_proper();
        if !coarse.is_positive() || !proper.is_failure() {
            return Ok(Outcome::fail(format!("{ideal:?}: coarse {coarse:?}, proper {proper:?}")));
        }
    }
    Ok(Outcome::pass(format!(
        "{} models: id coarse, not effectively proper (witnessed)",
        models.len()
    )))
}

fn criterion4() -> Result<Outcome, Error> {
    let mut runs = 0;
    for ideal in ideals(1..=4)? {
        for x in ideal.cover().iter() {
            let report = suite_maps(&ideal, x, None)?;
            for label in ["filterAsymorphism", "filterLargeInCartesian", "idealAsymorphism"] {
                let ok = report
                    .check(label)
                    .and_then(|c| c.verdict.as_ref())
                    .is_some_and(|v| v.is_positive());
                if !ok {
                    return Ok(Outcome::fail(format!("{label} on {ideal:?}, x={x}")));
                }
            }
            runs += 1;
        }
    }
    Ok(Outcome::pass(format!("{runs} (ideal, x) pairs with x in the cover")))
}

fn criterion5() -> Result<Outcome, Error> {
    let checks = [
        ("ball identity", check_embedding_identity(12, None)?),
        ("parity step", check_parity_lemma(12, None)?),
        ("image shape", check_image_shape(12, None)?),
    ];
    for (name, verdict) in &checks {
        if !verdict.is_positive() {
            return Ok(Outcome::fail(format!("{name}: {verdict:?}")));
        }
    }
    Ok(Outcome::pass("all A ⊆ [0,12), α < 12 and non-empty F ⊆ [0,12)".into()))
}

fn criterion6() -> Result<Outcome, Error> {
    let fr = Ideal::frechet(10)?;
    let xi = suite_thin(&fr, Variant::PointIdeal, None)?;
    let xa = suite_thin(&fr, Variant::Iary, None)?;
    let verdict = |r: &SuiteReport, label: &str| r.check(label).and_then(|c| c.verdict.clone());
    for label in ["thin", "nonThickBounded", "complementAsymorphism", "slowlyOscillating"] {
        if !verdict(&xi, label).is_some_and(|v| v.is_positive()) {
            return Ok(Outcome::fail(format!("X_I does not pass {label}")));
        }
    }
    for label in ["thin", "slowlyOscillating"] {
        if !verdict(&xa, label).is_some_and(|v| v.is_failure()) {
            return Ok(Outcome::fail(format!("X_I-ary does not fail {label}")));
        }
    }
    if !verdict(&xa, "commonWitness").is_some_and(|v| v.is_positive()) {
        return Ok(Outcome::fail("X_I-ary failures lack a common witness".into()));
    }
    if xi.is_mixed() || xa.is_mixed() {
        return Ok(Outcome::fail("a thin report is internally inconsistent".into()));
    }
    Ok(Outcome::pass("Frechet horizon 10: X_I thin, X_I-ary not, common witness".into()))
}

fn criterion7() -> Result<Outcome, Error> {
    let models = ideals(2..=4)?;
    let mut missed = Vec::new();
    for fault in Fault::ALL {
        let mut detected = suite_kcubes(8, 1, Some(fault))?.is_mixed();
        for ideal in &models {
            if detected {
                break;
            }
            detected = suite_thin(ideal, Variant::PointIdeal, Some(fault))?.is_mixed()
                || suite_thin(ideal, Variant::Iary, Some(fault))?.is_mixed()
                || suite_dsc(ideal, Some(fault))?.is_mixed();
            for x in 0..ideal.ground.window_size() {
                detected = detected || suite_maps(ideal, x, Some(fault))?.is_mixed();
            }
        }
        if !detected {
            missed.push(fault.name());
        }
    }
    let total = Fault::ALL.len();
    if missed.is_empty() && total >= 6 {
        Ok(Outcome::pass(format!("{total}/{total} seeded mutations detected")))
    } else {
        Ok(Outcome::fail(format!("{total} mutations, undetected: {missed:?}")))
    }
}

fn axioms_hold<B: Ballean>(b: &B) -> Result<(), WitnessKind> {
    match verify_axioms(b).witness() {
        None => Ok(()),
        Some(w) => Err(w.kind),
    }
}

fn variant_failures(ideal: &Ideal) -> Result<Vec<(&'static str, WitnessKind)>, Error> {
    let xi = PointIdealBallean::new(ideal)?;
    let xa = IaryBallean::new(ideal)?;
    let exp_point = HyperBallean::new(ideal, HyperRule::PointIdeal)?;
    let exp_iary = HyperBallean::new(ideal, HyperRule::Iary)?;
    let cartesian = HyperBallean::new(ideal, HyperRule::Cartesian)?;
    let results = [
        ("pointIdeal", axioms_hold(&xi)),
        ("iary", axioms_hold(&xa)),
        ("expPointIdeal", axioms_hold(&exp_point)),
        ("expIary", axioms_hold(&exp_iary)),
        ("cartesian", axioms_hold(&cartesian)),
        ("expStarPointIdeal", axioms_hold(&exp_star(&exp_point)?)),
        ("expStarIary", axioms_hold(&exp_star(&exp_iary)?)),
        ("flatPointIdeal", axioms_hold(&flat(&exp_point, &xi)?)),
        ("flatIary", axioms_hold(&flat(&exp_iary, &xa)?)),
        ("macrocube", axioms_hold(&macrocube(ideal)?)),
    ];
    Ok(results
        .into_iter()
        .filter_map(|(name, r)| r.err().map(|kind| (name, kind)))
        .collect())
}

fn criterion8() -> Result<Outcome, Error> {
    let mut models = ideals(1..=4)?;
    models.push(Ideal::frechet(12)?);
    let (mut checked, mut asymmetric) = (0u32, 0u32);
    let mut unexplained = Vec::new();
    for ideal in &models {
        let failures = variant_failures(ideal)?;
        checked += 1;
        for (name, kind) in failures {
            // B(x, A) = {x} ∪ A is not symmetric once A can miss x.
            if name == "iary" && kind == WitnessKind::Asymmetric {
                asymmetric += 1;
            } else {
                unexplained.push(format!("{name} on {ideal:?}: {kind:?}"));
            }
        }
    }
    for ideal in ideals(1..=5)? {
        let hat = ideal.hat()?;
        if let Some(a) = ideal.ground.window().subsets().find(|&a| ideal.contains(a) != (a & hat).is_empty()) {
            unexplained.push(format!("A ∈ I iff A ∩ Î = ∅ fails for A={a:?} on {ideal:?}"));
        }
    }
    let detail = format!("{checked} models; I-ary asymmetric on {asymmetric}; membership via Î exhaustive to |X| = 5");
    if let Some(first) = unexplained.first() {
        return Ok(Outcome::fail(format!("{detail}; unexplained: {first}")));
    }
    if asymmetric == 0 {
        return Ok(Outcome::pass(detail));
    }
    Ok(Outcome {
        pass: false,
        detail,
        documented: Some("the I-ary ball {x} ∪ A is asymmetric; every other variant satisfies the axioms"),
    })
}

type Criterion = fn() -> Result<Outcome, Error>;

fn main() -> ExitCode {
    let criteria: [(u32, Duration, Criterion); 8] = [
        (1, Duration::from_secs(10), criterion1),
        (2, Duration::from_secs(30), criterion2),
        (3, Duration::from_secs(10), criterion3),
        (4, Duration::from_secs(30), criterion4),
        (5, Duration::from_secs(60), criterion5),
        (6, Duration::from_secs(30), criterion6),
        (7, Duration::from_secs(60), criterion7),
        (8, Duration::from_secs(30), criterion8),
    ];
    let mut unexpected = 0;
    for (number, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome::fail(format!("error: {e}")));
        let elapsed = start.elapsed();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        let timing = if elapsed > budget { " over budget" } else { "" };
        let note = outcome.documented.map(|r| format!(" [documented: {r}]")).unwrap_or_default();
        println!(
            "criterion {number}: {status} ({:.2}s{timing}) {}{note}",
            elapsed.as_secs_f64(),
            outcome.detail
        );
        if !outcome.pass && outcome.documented.is_none() {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
