//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails.

use std::time::{Duration, Instant};

use edwards_proof::curve::{AffineParams, ProjParams};
use edwards_proof::field::{PrimeField, AUDIT_PRIME};
use edwards_proof::identities::{build_symbols, dichotomy_resolution, run_all, Form, Mutation, RunOptions};
use edwards_proof::oracle::{
    affine_axiom_sweep, circle_agreement_check, dichotomy_sweep, enumerate_points, equivariance_check,
    fixed_point_free_check, jacobi_quartic_check, projective_axiom_sweep, semi_associativity_check,
    well_defined_covering_check, DEFAULT_PRIME_CAP,
};
use edwards_proof::reduce::verify_certificate;

const CATALOG_SIZE: usize = 19;
const CATALOG_BUDGET: Duration = Duration::from_secs(60);
const AUDIT_TRIALS: usize = 100;
const MIN_AUDIT_PRIME: u64 = 1 << 60;
const AFFINE_BUDGET: Duration = Duration::from_secs(30);
const PROJECTIVE_BUDGET: Duration = Duration::from_secs(60);
const AFFINE_CURVES: [(u64, i64, i64); 3] = [(5, 1, 2), (13, 1, 2), (17, 1, 3)];
const CIRCLE: (u64, i64, i64) = (13, 1, 0);
const PROJECTIVE_CURVES: [(u64, i64); 3] = [(13, 2), (17, 2), (13, 5)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn symbolic_suite() -> Outcome {
    let start = Instant::now();
    let report = run_all(&RunOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(report.entries.len() == CATALOG_SIZE, || format!("{} entries ran", report.entries.len()))?;
    for e in &report.entries {
        ensure(e.status.is_pass(), || format!("entry {} {} failed", e.number, e.name))?;
        for c in e.certificates.iter().filter(|c| c.required) {
            ensure(c.zero_remainder, || format!("{}: {} has a nonzero remainder", e.name, c.label))?;
        }
    }
    ensure(elapsed < CATALOG_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{CATALOG_SIZE} entries PASS in {:.2} s", elapsed.as_secs_f64()))
}

fn certificate_audit() -> Outcome {
    let report = run_all(&RunOptions::default()).map_err(|e| e.to_string())?;
    ensure(report.audit_prime >= MIN_AUDIT_PRIME && report.audit_prime == AUDIT_PRIME, || {
        format!("audit prime {} too small", report.audit_prime)
    })?;
    ensure(report.audit_trials == AUDIT_TRIALS, || format!("{} trials", report.audit_trials))?;
    let mut count = 0;
    for e in &report.entries {
        for c in &e.certificates {
            let cert = &c.certificate;
            ensure(cert.check_exact(), || format!("{}: {} fails the exact check", e.name, c.label))?;
            ensure(cert.check_random(AUDIT_TRIALS, report.seed), || {
                format!("{}: {} fails random evaluation", e.name, c.label)
            })?;
            ensure(verify_certificate(cert), || format!("{}: {} does not verify", e.name, c.label))?;
            count += 1;
        }
    }
    let mut flips = Vec::new();
    for m in Mutation::all() {
        let mutated = run_all(&RunOptions { mutation: Some(m), ..RunOptions::default() }).map_err(|e| e.to_string())?;
        let failing = mutated.entries.iter().filter(|e| !e.status.is_pass()).count();
        ensure(failing > 0, || format!("mutation {m:?} leaves every entry passing"))?;
        flips.push(failing);
    }
    Ok(format!("{count} certificates verified; mutations fail {flips:?} entries"))
}

fn affine_groups() -> Outcome {
    let mut notes = Vec::new();
    for (p, c, d) in AFFINE_CURVES {
        let params = AffineParams::from_ints(p, c, d).map_err(|e| e.to_string())?;
        ensure(!params.d.is_square(), || format!("d = {d} is a square mod {p}"))?;
        let start = Instant::now();
        let report = affine_axiom_sweep(&params, DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(report.passed(), || format!("{}: {:?}", report.curve, report.axioms))?;
        ensure(report.triples == (report.affine_points as u64).pow(3), || "not all triples examined".into())?;
        ensure(elapsed < AFFINE_BUDGET, || format!("{} took {elapsed:?}", report.curve))?;
        notes.push(format!("p={p}: {} points", report.affine_points));
    }
    Ok(notes.join(", "))
}

fn circle() -> Outcome {
    let (p, c, d) = CIRCLE;
    let params = AffineParams::from_ints(p, c, d).map_err(|e| e.to_string())?;
    let agree = circle_agreement_check(p, DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
    ensure(agree.passed(), || format!("{:?}", agree.counterexample))?;
    let sweep = affine_axiom_sweep(&params, DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
    ensure(sweep.passed(), || format!("{:?}", sweep.axioms))?;
    Ok(format!("{} pairs agree, {} points", agree.examined, sweep.affine_points))
}

fn projective_groups() -> Outcome {
    let mut notes = Vec::new();
    for (p, t) in PROJECTIVE_CURVES {
        let params = ProjParams::from_ints(p, t).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let covering = well_defined_covering_check(&params, DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
        ensure(covering.passed(), || format!("covering: {:?}", covering.counterexample))?;
        let dichotomy = dichotomy_sweep(&params, DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
        ensure(dichotomy.passed() && dichotomy.inconsistent == 0, || format!("dichotomy: {dichotomy:?}"))?;
        let free = fixed_point_free_check(&params, DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
        ensure(free.passed(), || format!("fixed points: {:?}", free.counterexample))?;
        let equi = equivariance_check(&params, DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
        ensure(equi.passed(), || format!("equivariance: {:?}", equi.counterexample))?;
        let sweep = projective_axiom_sweep(&params, DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
        ensure(sweep.passed(), || format!("axioms: {:?}", sweep.axioms))?;
        ensure(sweep.affine_points == sweep.regular_points.unwrap_or(0) + 4, || "axis point count".into())?;
        let elapsed = start.elapsed();
        ensure(elapsed < PROJECTIVE_BUDGET, || format!("p={p} t={t} took {elapsed:?}"))?;
        notes.push(format!(
            "p={p} t={t}: {} points, {} flipped-only pairs",
            sweep.projective_points.unwrap_or(0),
            covering.flipped_only
        ));
    }
    Ok(notes.join(", "))
}

fn semi_associativity() -> Outcome {
    let mut examined = 0;
    for (p, t) in PROJECTIVE_CURVES {
        let params = ProjParams::from_ints(p, t).map_err(|e| e.to_string())?;
        let r = semi_associativity_check(&params, DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{}: {:?}", r.curve, r.counterexample))?;
        examined += r.examined;
    }
    Ok(format!("{examined} pairs"))
}

fn jacobi_quartic() -> Outcome {
    let mut points = 0;
    let affine = AFFINE_CURVES.iter().chain(std::iter::once(&CIRCLE));
    for &(p, c, d) in affine {
        let params = AffineParams::from_ints(p, c, d).map_err(|e| e.to_string())?;
        let r = jacobi_quartic_check(&params, format!("affine {params}"), DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{:?}", r.counterexample))?;
        points += r.examined;
    }
    for (p, t) in PROJECTIVE_CURVES {
        let params = ProjParams::from_ints(p, t).map_err(|e| e.to_string())?;
        let r = jacobi_quartic_check(&params, format!("t-form {params}"), DEFAULT_PRIME_CAP).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{:?}", r.counterexample))?;
        points += r.examined;
    }
    let report = run_all(&RunOptions {
        entries: vec!["jacobi-quartic".into()],
        ..RunOptions::default()
    })
    .map_err(|e| e.to_string())?;
    ensure(report.passed(), || "symbolic entry failed".into())?;
    Ok(format!("{points} points and the symbolic entry"))
}

fn dichotomy_triples() -> Outcome {
    let symbols = build_symbols(Form::T);
    let rows = dichotomy_resolution(&symbols).map_err(|e| e.to_string())?;
    let mut lines = Vec::new();
    for sign in ['+', '-'] {
        let mut resolved = Vec::new();
        for (row, certs) in rows.iter().filter(|(r, _)| r.sign == sign) {
            for c in certs {
                ensure(verify_certificate(c), || format!("S{sign} {} certificate does not verify", row.triple))?;
            }
            lines.push(format!("S{sign} {} {:?}", row.triple, row.reduces));
            if row.all_zero() {
                resolved.push(row.triple);
            }
        }
        ensure(!resolved.is_empty(), || format!("no triple reduces to zero mod S{sign}: {lines:?}"))?;
    }
    Ok(lines.join("; "))
}

#[test]
fn acceptance() {
    // sanity: the enumeration oracle agrees with the field's own square test
    let f = PrimeField::new(13).unwrap();
    assert_eq!(enumerate_points(&AffineParams::new(f, f.one(), f.from_u64(2)), 13).unwrap().len(), 8);

    let criteria: [Criterion; 8] = [
        ("symbolic proof suite", symbolic_suite),
        ("certificate audit", certificate_audit),
        ("affine complete groups", affine_groups),
        ("circle degeneration", circle),
        ("projective curves", projective_groups),
        ("semi-associativity", semi_associativity),
        ("jacobi quartic", jacobi_quartic),
        ("dichotomy triples", dichotomy_triples),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", k + 1),
            Err(why) => {
                println!("criterion {}: FAIL {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
