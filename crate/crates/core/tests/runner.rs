use dedelat_core::verify::{case_seed, replay, run_suite, run_suite_sequential, Suite};

#[test]
fn reports_do_not_depend_on_the_runner() {
    for suite in [Suite::ThreeCase, Suite::Multiplicativity, Suite::OracleConsistency] {
        let a = run_suite(suite, 11, 24);
        let b = run_suite_sequential(suite, 11, 24);
        assert_eq!(serde_json::to_string(&a.to_json()).unwrap(), serde_json::to_string(&b.to_json()).unwrap());
        assert!(a.passed());
    }
}

#[test]
fn replays_are_identical() {
    let a = run_suite(Suite::Diagonal, 99, 16).to_json();
    let b = run_suite(Suite::Diagonal, 99, 16).to_json();
    assert_eq!(a, b);
    let case = serde_json::json!({"suite": "diagonal", "seed": 99, "index": 3});
    assert!(replay(&case).unwrap().is_none());
    assert_eq!(case_seed(99, Suite::Diagonal, 3), case_seed(99, Suite::Diagonal, 3));
}
