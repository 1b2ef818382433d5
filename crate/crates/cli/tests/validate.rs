mod support;

use support::{counter_fixtures, findings, fixture_text, validate};

#[test]
fn clean_fixture_has_no_cd_findings() {
    let (code, report) = validate(&fixture_text());
    assert_eq!(code, 0);
    assert!(findings(&report, "cd").is_empty());
    assert_eq!(findings(&report, "ci"), vec![(":7.1_ex".to_string(), "iso37120:7.1".to_string())]);
}

#[test]
fn each_counter_fixture_reports_only_its_planted_defect() {
    let (_, clean) = validate(&fixture_text());
    let baseline_ci = findings(&clean, "ci");
    for c in counter_fixtures() {
        let (code, report) = validate(&c.text);
        let cd = findings(&report, "cd");
        assert_eq!(cd, vec![(c.instance.to_string(), c.class.to_string())], "{}: {report:#}", c.name);
        assert_eq!(findings(&report, "ci"), baseline_ci, "{}", c.name);
        assert_eq!(code, 2, "{}", c.name);
    }
}
