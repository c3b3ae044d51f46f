use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::{json, Value};

fn ballean(args: &[&str]) -> (i32, Value) {
    let Output { status, stdout, .. } = Command::new(env!("CARGO_BIN_EXE_ballean"))
        .args(args)
        .output()
        .expect("binary runs");
    let text = String::from_utf8(stdout).expect("utf-8 output");
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {text}"));
    (status.code().expect("exit code"), value)
}

#[test]
fn validate_reports_union_closure_witness() {
    let (code, out) = ballean(&["validate", "--model", r#"{"ground":{"finite":3},"ideal":{"explicit":[[ ],[0],[1]]}}"#]);
    assert_eq!(code, 1);
    assert_eq!(out["verdict"]["status"], "failsWithWitness");
    assert_eq!(out["verdict"]["witness"]["kind"], "notUnionClosed");
}

#[test]
fn validate_accepts_a_proper_ideal() {
    let (code, out) = ballean(&["validate", "--ideal", r#"{"frechet":true}"#, "--horizon", "8"]);
    assert_eq!(code, 0);
    assert_eq!(out["model"], json!({"ground": {"naturals": {"horizon": 8}}, "ideal": {"frechet": true}}));
}

#[test]
fn dsc_quotient_on_principal_pair() {
    let (code, out) = ballean(&[
        "dsc", "--flavor", "cartesian", "--ideal", r#"{"principal":[0,1]}"#, "--ground", "4", "--method", "quotient",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, json!({"count": 4}));
}

#[test]
fn dsc_methods_agree_through_the_cli() {
    for method in ["components", "quotient", "crt"] {
        let (_, out) = ballean(&[
            "dsc", "--flavor", "expStarIary", "--ideal", r#"{"principal":[0,1]}"#, "--ground", "4", "--method", method,
        ]);
        assert_eq!(out, json!({"count": 4}), "{method}");
    }
}

#[test]
fn expball_point_ideal_example() {
    let (code, out) = ballean(&[
        "expball", "--flavor", "pointIdeal", "--center", "[0,1]", "--radius", "[1,2]", "--ground", "3", "--ideal",
        r#"{"principal":[1,2]}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, json!({"members": [[0, 1], [0, 2], [0, 1, 2]]}));
}

#[test]
fn ball_outside_radius_is_a_singleton() {
    let (_, out) = ballean(&[
        "ball", "--flavor", "pointIdeal", "--center", "3", "--radius", "[0,1]", "--ground", "4", "--ideal",
        r#"{"principal":[0,1]}"#,
    ]);
    assert_eq!(out, json!({"members": [3]}));
}

#[test]
fn identity_is_coarse_but_not_proper() {
    let (code, out) = ballean(&[
        "checkmap", "--map", "identity", "--ground", "4", "--ideal", r#"{"principal":[0,1]}"#, "--props", "coarse,proper",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out["coarse"]["status"], "holds");
    assert_eq!(out["effectivelyProper"]["status"], "failsWithWitness");
}

#[test]
fn malformed_input_exits_two_with_json_error() {
    let cases: [&[&str]; 5] = [
        &["frobnicate"],
        &["dsc", "--flavor", "cartesian", "--ideal", "{not json", "--ground", "4"],
        &["dsc", "--flavor", "cartesian", "--ideal", r#"{"principal":[0,9]}"#, "--ground", "4"],
        &["suite", "--name", "dsc", "--bulk", "2", "--fault", "noSuchFault"],
        &["components", "--ballean", "cartesian", "--ideal", r#"{"frechet":true}"#, "--horizon", "8"],
    ];
    for args in cases {
        let (code, out) = ballean(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out["error"]["kind"].is_string(), "{args:?}: {out}");
        assert!(out["error"]["message"].is_string(), "{args:?}: {out}");
    }
}

#[test]
fn invalid_family_is_rejected_by_operations() {
    let (code, out) = ballean(&[
        "ball", "--flavor", "iary", "--center", "0", "--radius", "[0]", "--model",
        r#"{"ground":{"finite":3},"ideal":{"explicit":[[ ],[0],[1]]}}"#,
    ]);
    assert_eq!(code, 2);
    assert_eq!(out["error"]["kind"], "InvalidIdeal");
}

#[test]
fn bulk_output_is_independent_of_jobs() {
    let one = ballean(&["--jobs", "1", "suite", "--name", "maps", "--bulk", "3"]);
    let four = ballean(&["--jobs", "4", "suite", "--name", "maps", "--bulk", "3"]);
    assert_eq!(one, four);
    assert_eq!(one.0, 0);
}

#[test]
fn seeded_fault_makes_the_suite_exit_one() {
    let (clean, _) = ballean(&["suite", "--name", "dsc", "--bulk", "3"]);
    let (faulty, out) = ballean(&["suite", "--name", "dsc", "--bulk", "3", "--fault", "expIaryAllowsEmpty"]);
    assert_eq!(clean, 0);
    assert_eq!(faulty, 1);
    assert_eq!(out["overall"]["status"], "mixedWithWitnesses");
}

#[test]
fn kcube_suite_verifies_to_horizon() {
    let (code, out) = ballean(&["suite", "--name", "kcubes", "--horizon", "8", "--x", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out["overall"]["status"], "verifiedToHorizon");
}

#[test]
fn help_goes_to_stderr() {
    let out = Command::new(env!("CARGO_BIN_EXE_ballean")).args(["suite", "--help"]).output().unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

fn description() -> impl Strategy<Value = Value> {
    let set = || proptest::collection::btree_set(0u32..5, 0..4).prop_map(|s| json!(s));
    prop_oneof![
        set().prop_map(|s| json!({"principal": s})),
        (0u32..4).prop_map(|k| json!({"sizeBelow": k})),
        proptest::collection::vec(set(), 0..3).prop_map(|g| json!({"generatedBy": g})),
        Just(json!({"explicit": [[], [0], [1], [0, 1]]})),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn emitted_models_reparse_to_equal_models(desc in description(), n in 5u32..8) {
        let model = json!({"ground": {"finite": n}, "ideal": desc}).to_string();
        let (code, first) = ballean(&["validate", "--model", &model]);
        prop_assume!(code != 2);
        let again = first["model"].to_string();
        let (code2, second) = ballean(&["validate", "--model", &again]);
        prop_assert_eq!(code, code2);
        prop_assert_eq!(&first, &second);
    }
}
