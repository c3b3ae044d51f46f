use ballean_core::fault::Fault;
use ballean_core::finset::FinSet;
use ballean_core::hyper::{dsc, DscMethod, Flavor};
use ballean_core::ideal::{all_finite_ideals, GroundSet, Ideal};
use ballean_core::suite::{suite_dsc, suite_kcubes, suite_maps, suite_thin, Expectation, Overall, SuiteReport, Variant};
use ballean_core::verdict::Datum;

fn set(xs: &[u32]) -> FinSet {
    FinSet::from_elements(xs.iter().copied())
}

fn finite_reports(ideal: &Ideal, fault: Option<Fault>) -> Vec<SuiteReport> {
    let mut out = vec![
        suite_thin(ideal, Variant::PointIdeal, fault).unwrap(),
        suite_thin(ideal, Variant::Iary, fault).unwrap(),
        suite_dsc(ideal, fault).unwrap(),
    ];
    let n = ideal.ground.window_size();
    out.extend((0..n).map(|x| suite_maps(ideal, x, fault).unwrap()));
    out
}

#[test]
fn bulk_runs_have_no_disagreements() {
    for n in 1..=4 {
        for ideal in all_finite_ideals(n).unwrap() {
            for report in finite_reports(&ideal, None) {
                assert!(!report.is_mixed(), "{} on {ideal:?}: {:?}", report.suite, report.overall);
            }
        }
    }
}

#[test]
fn every_fault_is_detected() {
    let ideals: Vec<Ideal> = (2..=4).flat_map(|n| all_finite_ideals(n).unwrap()).collect();
    for fault in Fault::ALL {
        let finite = ideals
            .iter()
            .any(|i| finite_reports(i, Some(fault)).iter().any(SuiteReport::is_mixed));
        let omega = suite_kcubes(8, 1, Some(fault)).unwrap().is_mixed();
        assert!(finite || omega, "{fault:?} went undetected");
    }
}

#[test]
fn reports_are_deterministic() {
    let i = Ideal::principal(GroundSet::Finite(4), set(&[0, 1])).unwrap();
    assert_eq!(suite_dsc(&i, None).unwrap(), suite_dsc(&i, None).unwrap());
    assert_eq!(suite_maps(&i, 0, None).unwrap(), suite_maps(&i, 0, None).unwrap());
    assert_eq!(suite_kcubes(6, 0, None).unwrap(), suite_kcubes(6, 0, None).unwrap());
}

#[test]
fn dsc_counts_on_principal_pair() {
    let i = Ideal::principal(GroundSet::Finite(4), set(&[0, 1])).unwrap();
    assert_eq!(dsc(&i, Flavor::Cartesian, DscMethod::Components).unwrap(), 4);
    assert_eq!(dsc(&i, Flavor::Iary, DscMethod::Components).unwrap(), 5);
    assert_eq!(dsc(&i, Flavor::Cartesian, DscMethod::Crt).unwrap(), 4);
    let r = suite_dsc(&i, None).unwrap();
    assert_eq!(r.overall, Overall::Holds);
    let two = r.check("methodsAgree.cartesian").unwrap();
    assert_eq!(two.verdict.as_ref().unwrap().evidence().unwrap().get("count"), Some(&Datum::Count(4)));
}

#[test]
fn maximal_ideal_has_two_cartesian_components() {
    let i = Ideal::maximal(4, 2).unwrap();
    let r = suite_dsc(&i, None).unwrap();
    assert!(r.check("maximalIffTwo").unwrap().verdict.as_ref().unwrap().is_positive());
    assert_eq!(dsc(&i, Flavor::Cartesian, DscMethod::Quotient).unwrap(), 2);
}

#[test]
fn point_ideal_flavor_disagrees_exactly_when_cover_is_nonempty() {
    for ideal in all_finite_ideals(3).unwrap() {
        let r = suite_dsc(&ideal, None).unwrap();
        let c = r.check("methodsAgree.pointIdeal").unwrap();
        let expected = if ideal.cover().is_empty() { Expectation::Positive } else { Expectation::Failure };
        assert_eq!(c.expectation, expected, "{ideal:?}");
        assert!(c.agrees());
    }
}

#[test]
fn maps_pattern_on_principal_ideal() {
    let i = Ideal::principal(GroundSet::Finite(4), set(&[0, 1])).unwrap();
    let r = suite_maps(&i, 0, None).unwrap();
    let positive = |label: &str| r.check(label).unwrap().verdict.as_ref().unwrap().is_positive();
    assert!(positive("identityCoarse"));
    assert!(!positive("identityNotProper"));
    assert!(!positive("expIdentityNotAsymorphism"));
    assert!(positive("filterAsymorphism"));
    assert!(positive("filterBallIdentity"));
    assert!(positive("filterLargeInCartesian"));
    assert!(positive("ringSumCoarse"));
    assert!(positive("ringProductCoarse"));
    let large = r.check("filterLargeInCartesian").unwrap().verdict.as_ref().unwrap();
    assert_eq!(large.evidence().unwrap().get("radius"), Some(&Datum::Set(set(&[0]))));
}

#[test]
fn thin_pattern_on_frechet_window() {
    let fr = Ideal::frechet(10).unwrap();
    let xi = suite_thin(&fr, Variant::PointIdeal, None).unwrap();
    let xa = suite_thin(&fr, Variant::Iary, None).unwrap();
    assert_eq!(xi.overall, Overall::VerifiedToHorizon { horizon: 10 });
    assert_eq!(xa.overall, Overall::VerifiedToHorizon { horizon: 10 });
    for label in ["thin", "nonThickBounded", "complementAsymorphism", "slowlyOscillating"] {
        assert!(xi.check(label).unwrap().verdict.as_ref().unwrap().is_positive(), "{label}");
        assert!(xa.check(label).unwrap().verdict.as_ref().unwrap().is_failure(), "{label}");
    }
    assert!(xa.check("commonWitness").unwrap().verdict.as_ref().unwrap().is_positive());
}

#[test]
fn kcube_suite_verifies_to_horizon() {
    let r = suite_kcubes(10, 1, None).unwrap();
    assert!(matches!(r.overall, Overall::VerifiedToHorizon { .. }), "{:?}", r.overall);
    assert!(suite_kcubes(17, 0, None).is_err());
    assert!(suite_kcubes(10, 8, None).is_err());
}

#[test]
fn suites_reject_unsupported_models() {
    let fr = Ideal::frechet(8).unwrap();
    assert!(suite_dsc(&fr, None).is_err());
    assert!(suite_maps(&fr, 0, None).is_err());
    let big = Ideal::principal(GroundSet::Finite(7), set(&[0])).unwrap();
    assert!(suite_maps(&big, 0, None).is_err());
    let i = Ideal::principal(GroundSet::Finite(3), set(&[0])).unwrap();
    assert!(suite_maps(&i, 3, None).is_err());
}
