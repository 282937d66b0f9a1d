//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! All comparisons are exact (boolean, rational, combinatorial); run with
//! `cargo test --test acceptance -- --nocapture` to see the lines and
//! timings.

use std::process::Command;
use std::time::Instant;

use supplycat::report::{CheckReport, Status};
use supplycat::suites::{fixture_failed_as_expected, registry, run_suite, SuiteBounds};

fn bounds(max_leaf: usize, max_depth: usize, max_arity: usize, max_apex: usize) -> SuiteBounds {
    SuiteBounds {
        max_leaf,
        max_depth,
        max_arity,
        max_apex,
        seed: 0,
    }
}

fn run_and_report(criterion: &str, suite: &str, b: SuiteBounds) -> CheckReport {
    let start = Instant::now();
    let report = run_suite(suite, &b, None).expect("registered suite");
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "ACCEPTANCE {criterion} [{suite}]: {verdict} ({} checks, {:.1}s)",
        report.entries.len(),
        start.elapsed().as_secs_f64()
    );
    if !report.passed() {
        println!("{report}");
    }
    report
}

#[test]
fn criterion_01_prop_axiom_suites() {
    let report = run_and_report("01 prop axioms", "prop-axioms", bounds(2, 3, 3, 4));
    assert!(report.passed());
    // All six built-in props are covered.
    for prop in [
        "bijections",
        "involutions",
        "finset/",
        "finset-op",
        "cospan",
        "cobordisms",
    ] {
        assert!(
            report.entries.iter().any(|e| e.id.contains(prop)),
            "missing entries for {prop}"
        );
    }
}

#[test]
fn criterion_02_presentation_checks() {
    let report = run_and_report("02 presentations", "presentations", bounds(2, 3, 3, 4));
    assert!(report.passed());
    // Three monoid relations, four self-duality relations, two snakes.
    let rel_entries = |tag: &str| {
        report
            .entries
            .iter()
            .filter(|e| e.id.contains(tag) && e.id.contains("relation/"))
            .count()
    };
    assert_eq!(rel_entries("monoid-in-finset"), 3);
    assert_eq!(rel_entries("self-dual-in-cospan"), 4);
    assert!(report.entries.iter().any(|e| e.id.contains("snake-left")));
    assert!(report.entries.iter().any(|e| e.id.contains("snake-right")));

    // The corrupted cap image must fail with the two evaluated sides shown.
    let start = Instant::now();
    let broken = run_suite("fixtures/broken-presentation", &bounds(2, 3, 3, 4), None).unwrap();
    let failed = fixture_failed_as_expected(&broken);
    let witnessed = broken.failures().any(|e| {
        e.witness
            .as_deref()
            .is_some_and(|w| w.contains("evaluates to"))
    });
    println!(
        "ACCEPTANCE 02 [fixtures/broken-presentation]: {} ({:.1}s)",
        if failed && witnessed { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    assert!(failed && witnessed, "{broken}");
}

#[test]
fn criterion_03_smc_axioms() {
    let report = run_and_report("03 smc axioms", "smc-axioms", bounds(2, 3, 3, 4));
    assert!(report.passed());
    for model in ["rel/", "nested-rel", "matq", "terminal", "rel-biproduct"] {
        assert!(
            report.entries.iter().any(|e| e.id.starts_with(model)),
            "missing entries for {model}"
        );
    }
}

#[test]
fn criterion_04_supply_axioms() {
    let total = Instant::now();
    assert!(run_and_report("04a rel hypergraph", "rel-hypergraph", bounds(2, 3, 2, 3)).passed());
    assert!(run_and_report("04b matq self-dual", "matq-self-dual", bounds(2, 3, 3, 3)).passed());
    assert!(run_and_report(
        "04c nested hypergraph",
        "nestedrel-hypergraph",
        bounds(2, 3, 2, 3)
    )
    .passed());
    assert!(run_and_report("04d finset comonoid", "finset-comonoid", bounds(2, 3, 3, 3)).passed());
    assert!(run_and_report("04e self supply", "self-supply", bounds(2, 3, 3, 3)).passed());
    assert!(run_and_report("04f terminal supply", "terminal-supply", bounds(2, 3, 3, 3)).passed());
    assert!(run_and_report(
        "04g biproduct supply",
        "biproduct-supply",
        bounds(2, 3, 2, 3)
    )
    .passed());
    println!(
        "ACCEPTANCE 04 total elapsed: {:.1}s",
        total.elapsed().as_secs_f64()
    );
}

#[test]
fn criterion_05_coherence_homomorphisms() {
    let report = run_and_report(
        "05 coherence homomorphisms",
        "coherence-homomorphisms",
        bounds(2, 3, 2, 3),
    );
    assert!(report.passed());
    // The non-strict model must exercise a genuinely non-identity associator.
    assert!(report
        .entries
        .iter()
        .any(|e| e.id.contains("associator-nontrivial") && e.status == Status::Pass));
    for model in ["nested-rel", "rel/", "matq"] {
        assert!(report.entries.iter().any(|e| e.id.starts_with(model)));
    }
}

#[test]
fn criterion_06_homomorphic_subcategory_closure() {
    let report = run_and_report(
        "06 homomorphism closure",
        "homomorphic-subcategory",
        bounds(2, 3, 2, 3),
    );
    assert!(report.passed());
    for law in ["closure-compose", "closure-tensor", "identities"] {
        assert!(
            report.entries.iter().any(|e| e.id.contains(law)),
            "missing {law}"
        );
    }
}

#[test]
fn criterion_07_worked_examples() {
    let report = run_and_report("07 worked examples", "worked-examples", bounds(2, 3, 2, 3));
    assert!(report.passed());
    for item in [
        "empty-relation-fails-with-counit",
        "exactly-four",
        "exactly-the-functional-ones",
        "orthogonality-matches/rotation-3-4-5",
        "all-functions-are-homomorphisms",
    ] {
        assert!(
            report.entries.iter().any(|e| e.id.contains(item)),
            "missing {item}"
        );
    }
}

#[test]
fn criterion_08_transfer() {
    let report = run_and_report("08 transfer", "transfer", bounds(2, 3, 2, 3));
    assert!(report.passed());
    for item in [
        "delta-is-diagonal",
        "epsilon-is-total",
        "self-duals-via-cospans",
        "flatten-strict-surjection",
        "agrees-with-direct",
    ] {
        assert!(
            report.entries.iter().any(|e| e.id.contains(item)),
            "missing {item}"
        );
    }
}

#[test]
fn criterion_09_strictification() {
    let report = run_and_report("09 strictification", "strictification", bounds(2, 3, 2, 3));
    assert!(report.passed());
    for item in [
        "associators-are-identities",
        "strict-supply",
        "square/", // evaluation functor preserves the supply
        "binary/", // its strongators are homomorphisms
        "maps-homomorphisms",
    ] {
        assert!(
            report.entries.iter().any(|e| e.id.contains(item)),
            "missing {item}"
        );
    }
}

#[test]
fn criterion_10_preservation_negative_control() {
    let start = Instant::now();
    let report = run_suite("preservation-negative", &bounds(2, 3, 2, 3), None).unwrap();
    let ok = report.passed();
    println!(
        "ACCEPTANCE 10 [preservation-negative]: {} ({:.1}s)",
        if ok { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    assert!(ok, "{report}");
    assert!(report
        .entries
        .iter()
        .any(|e| e.id.contains("rescaled-is-a-supply") && e.status == Status::Pass));
    assert!(report
        .entries
        .iter()
        .any(|e| e.id.contains("identity-fails-with-cup-witness") && e.status == Status::Pass));
}

#[test]
fn criterion_11_biproduct() {
    let report = run_and_report("11 biproduct", "biproduct", bounds(2, 3, 2, 3));
    assert!(report.passed());
    for item in [
        "unit-is-pointwise",
        "projection-strict",
        "copairing-tensors",
        "pairing-projects-back",
        "projection-preserves",
        "coprojection-preserves",
    ] {
        assert!(
            report.entries.iter().any(|e| e.id.contains(item)),
            "missing {item}"
        );
    }
}

#[test]
fn criterion_12_cli_contract() {
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_supplycat");

    // Every registered suite is runnable by name (fast bounds).
    let list = Command::new(bin).arg("list").output().unwrap();
    assert!(list.status.success());
    let listing = String::from_utf8(list.stdout).unwrap();
    for info in registry() {
        assert!(listing.contains(info.name), "list misses {}", info.name);
    }

    let fast = |suite: &str| {
        Command::new(bin)
            .args([
                "check",
                suite,
                "--max-leaf",
                "1",
                "--max-arity",
                "1",
                "--max-apex",
                "2",
                "--max-depth",
                "2",
                "--format",
                "json",
            ])
            .output()
            .unwrap()
    };
    for info in registry() {
        if info.name == "presentation-file" {
            continue; // needs --presentation, covered below
        }
        let out = fast(info.name);
        let code = out.status.code().unwrap();
        let report: CheckReport = serde_json::from_slice(&out.stdout)
            .unwrap_or_else(|e| panic!("suite {} did not emit report JSON: {e}", info.name));
        // JSON round-trip: recomputing the verdict from the parsed report
        // matches the exit status.
        let expected = if report.passed() { 0 } else { 1 };
        assert_eq!(code, expected, "exit code mismatch for {}", info.name);
        if info.expected_failure {
            assert_eq!(code, 1, "fixture {} must fail", info.name);
        } else {
            assert_eq!(code, 0, "suite {} must pass at tiny bounds", info.name);
        }
    }

    // Deterministic output under a fixed seed.
    let run_seeded = || {
        Command::new(bin)
            .args([
                "check",
                "smc-axioms",
                "--max-leaf",
                "1",
                "--max-arity",
                "1",
                "--max-apex",
                "2",
                "--seed",
                "42",
                "--format",
                "json",
            ])
            .output()
            .unwrap()
    };
    let first = run_seeded();
    let second = run_seeded();
    assert_eq!(first.stdout, second.stdout, "seeded runs must be identical");

    // Worker count must not influence the report.
    let single_threaded = Command::new(bin)
        .env("SUPPLYCAT_THREADS", "1")
        .args([
            "check",
            "smc-axioms",
            "--max-leaf",
            "1",
            "--max-arity",
            "1",
            "--max-apex",
            "2",
            "--seed",
            "42",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(
        first.stdout, single_threaded.stdout,
        "reports must not depend on SUPPLYCAT_THREADS"
    );

    // The documented invocation passes…
    let out = Command::new(bin)
        .args([
            "check",
            "rel-hypergraph",
            "--max-leaf",
            "2",
            "--max-arity",
            "2",
            "--max-apex",
            "3",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    // …the broken fixture fails with the counit in its witness…
    let out = Command::new(bin)
        .args(["check", "fixtures/broken-supply"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("op(0→1"),
        "broken-supply output should name the counit:\n{text}"
    );

    // …and usage errors exit 2, distinct from check failure.
    let out = Command::new(bin)
        .args(["check", "no-such-suite"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin)
        .args(["check", "smc-axioms", "--max-apex", "99"])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(2),
        "bounds out of range are a usage error"
    );
    let out = Command::new(bin).args(["check"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin)
        .args(["check", "presentation-file"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "missing file is a failed check");

    // Presentation files load through the CLI flag.
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/monoid.prop");
    let out = Command::new(bin)
        .args(["check", "presentation-file", "--presentation", fixture])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    println!(
        "ACCEPTANCE 12 [cli-contract]: PASS ({:.1}s)",
        start.elapsed().as_secs_f64()
    );
}
