use edwards_proof::identities::{check_entry, entry_info, run_all, Form, RunError, RunOptions, CATALOG};
use edwards_proof::reduce::ReductionCertificate;

#[test]
fn names_and_numbers_are_unique() {
    for (k, e) in CATALOG.iter().enumerate() {
        assert_eq!(e.number, k + 1);
        assert_eq!(entry_info(e.name).unwrap().number, e.number);
        assert_eq!(CATALOG.iter().filter(|o| o.name == e.name).count(), 1);
    }
}

#[test]
fn report_is_reproducible() {
    let opts = RunOptions {
        entries: vec!["closure".into(), "coherence".into(), "hyperbola-incidence".into()],
        ..RunOptions::default()
    };
    let a = run_all(&opts).unwrap();
    let b = run_all(&opts).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.passed());
    assert_eq!(a.entries.iter().map(|e| e.number).collect::<Vec<_>>(), vec![1, 12, 17]);
    assert!(!a.to_json().contains("wall_ms"));
}

#[test]
fn cd_only_skips_t_form() {
    let r = run_all(&RunOptions {
        cd_only: true,
        ..RunOptions::default()
    })
    .unwrap();
    assert!(r.passed());
    assert!(r.entries.iter().all(|e| e.form == Form::Cd));
    assert_eq!(r.entries.len(), CATALOG.iter().filter(|e| e.form == Form::Cd).count());
}

#[test]
fn unknown_entry_is_an_error() {
    assert!(matches!(check_entry("no-such-entry"), Err(RunError::UnknownEntry(_))));
}

#[test]
fn emitted_certificates_reload_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_all(&RunOptions {
        entries: vec!["affine-closure".into(), "char-2-degeneration".into()],
        ..RunOptions::default()
    })
    .unwrap();
    let n = r.write_certificates(dir.path()).unwrap();
    assert_eq!(n, 2);
    let text = std::fs::read_to_string(dir.path().join("06-affine-closure").join("000.json")).unwrap();
    let cert = ReductionCertificate::from_json(&text).unwrap();
    assert!(cert.verify());
    assert!(cert.is_zero_remainder());
    assert_eq!(cert.digest(), r.entries[0].certificates[0].digest);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    assert_eq!(report["status"], "PASS");
}

#[test]
fn char_2_identity_has_unit_multiplier() {
    let e = check_entry("char-2-degeneration").unwrap();
    assert!(e.status.is_pass());
    assert_eq!(e.certificates[0].multiplier, "1");
}

#[test]
fn dichotomy_reports_both_triples() {
    let e = check_entry("dichotomy-groebner").unwrap();
    assert!(e.status.is_pass());
    let labels: Vec<_> = e.checks.iter().map(|c| c.label.as_str()).collect();
    assert!(labels.contains(&"S+ resolved by: corrected"), "{labels:?}");
    assert!(labels.contains(&"S- resolved by: corrected"), "{labels:?}");
    assert_eq!(e.certificates.len(), 12);
}
