use unisem::verify::{case_ii_discrepancies, run_all, run_check, run_check_with, CheckOptions};
use unisem::{CheckId, Error};

/// Uniform semigroups found by the census that the summary table misses.
const TABLE_COUNTEREXAMPLES_TO_FOUR: [&[usize]; 4] = [
    &[0, 0, 1, 1],
    &[0, 0, 0, 0, 1, 2, 0, 1, 2],
    &[0, 0, 0, 0, 1, 2, 2, 2, 2],
    &[0, 0, 0, 0, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3],
];

#[test]
fn structural_checks_pass_to_order_four() {
    let reports = run_all(4).unwrap();
    assert_eq!(reports.len(), 15);
    for r in &reports {
        assert_eq!(r.max_order, 4);
        if r.check != CheckId::C15 {
            assert!(r.passed(), "{}: {:?}", r.check, r.counterexamples);
            assert!(r.hypotheses_met > 0, "{} never applied", r.check);
        }
    }
}

#[test]
fn summary_table_counterexamples() {
    let r = run_check(CheckId::C15, 4).unwrap();
    let found: Vec<&[usize]> = r.counterexamples.iter().map(|c| c.table.as_slice()).collect();
    assert_eq!(found, TABLE_COUNTEREXAMPLES_TO_FOUR);
    assert!(r.counterexamples[0].detail.contains("left inverse"));
    assert!(r.counterexamples[1..].iter().all(|c| c.detail.contains("band")));
}

#[test]
fn inverted_checks_report_witnesses() {
    let opts = CheckOptions {
        invert: true,
        ..Default::default()
    };
    for c in [CheckId::C1, CheckId::C2, CheckId::C8, CheckId::C13] {
        let r = run_check_with(c, 3, opts).unwrap();
        assert!(!r.passed(), "{c}");
        assert_eq!(r.counterexamples.len(), r.hypotheses_met, "{c}");
    }
}

#[test]
fn discrepancy_section() {
    let d = case_ii_discrepancies().unwrap();
    let z3 = d
        .iter()
        .find(|d| d.subject.starts_with("Z3 ") && d.detail.contains("construction fails"))
        .unwrap();
    assert!(z3.detail.contains("(1,1,3)"));
    assert!(!d
        .iter()
        .any(|d| d.subject.starts_with("Z2 ") && d.detail.contains("construction fails")));
    let r = run_check(CheckId::C13, 3).unwrap();
    assert_eq!(r.discrepancies, d);
    assert!(r.passed());
}

#[test]
fn order_bounds() {
    assert_eq!(run_all(1).unwrap_err(), Error::DegenerateOrder);
    assert_eq!(run_check(CheckId::C3, 0).unwrap_err(), Error::DegenerateOrder);
    assert!(matches!(
        run_check(CheckId::C3, 6),
        Err(Error::BoundExceeded { bound: 5, .. })
    ));
}

#[test]
fn reports_are_deterministic() {
    let mut a = run_check(CheckId::C14, 3).unwrap();
    let mut b = run_check(CheckId::C14, 3).unwrap();
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    assert_eq!(a, b);
}
