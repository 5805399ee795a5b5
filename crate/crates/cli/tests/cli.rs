//! End-to-end runs of the `extlift` binary: exit codes, determinism, and
//! golden JSON files (regenerate with `UPDATE_GOLDEN=1`).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extlift"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_on(command: &str, file: &str, extra: &[&str]) -> Output {
    let path = data(file);
    let mut args = vec![command, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn check_golden(name: &str, command: &str, file: &str, extra: &[&str]) {
    let mut args = vec!["--json"];
    args.extend_from_slice(extra);
    let out = run_on(command, file, &args);
    let actual = stdout(&out);
    let golden = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&golden, &actual).unwrap();
    }
    let expected =
        std::fs::read_to_string(&golden).unwrap_or_else(|_| panic!("missing {}", golden.display()));
    assert_eq!(actual, expected, "{name} differs from its golden file");
}

#[test]
fn golden_outputs() {
    check_golden("gb_quadric", "gb", "quadric.ideal", &[]);
    check_golden("lift_quadric", "lift", "quadric.ideal", &[]);
    check_golden("lift_x1x4", "lift", "x1x4.ideal", &[]);
    check_golden("verify_anti3", "verify", "anti3.ideal", &[]);
    check_golden("gin_quadric", "gin", "quadric.ideal", &["--seed", "7"]);
    check_golden(
        "gin_commutator",
        "gin",
        "commutator.ideal",
        &["--seed", "7", "--maxdeg", "3"],
    );
    check_golden(
        "hilbert_commutator",
        "hilbert",
        "commutator.ideal",
        &["--maxdeg", "4"],
    );
    check_golden("predicates_x1x4", "predicates", "x1x4.ideal", &[]);
}

#[test]
fn gin_is_byte_identical_across_runs() {
    let a = run_on(
        "gin",
        "quadric.ideal",
        &["--json", "--trials", "2", "--seed", "7"],
    );
    let b = run_on(
        "gin",
        "quadric.ideal",
        &["--json", "--trials", "2", "--seed", "7"],
    );
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run_on("lift", "linear.ideal", &[]).status.code(), Some(2));
    assert_eq!(run_on("gb", "missing.ideal", &[]).status.code(), Some(2));
    assert_eq!(run_on("gb", "commutator.ideal", &[]).status.code(), Some(2));
    assert_eq!(
        run_on("verify", "not_groebner.ideal", &[]).status.code(),
        Some(1)
    );
    assert_eq!(run_on("verify", "anti2.ideal", &[]).status.code(), Some(0));
    assert_eq!(
        run_on("gin", "quadric.ideal", &["--trials", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn parse_errors_report_positions() {
    let out = run_on("gb", "bad.ideal", &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2, column 9"), "{err}");
}

#[test]
fn lone_anti_commutator_is_a_basis_of_a_larger_quotient() {
    // a Groebner basis of its own ideal, but the quotient is not E(V)
    let out = run_on("verify", "lone_anti_commutator.ideal", &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("normal words (1, 2, 3, 4)"));
}

#[test]
fn predicates_on_x1x4() {
    let out = stdout(&run_on("predicates", "x1x4.ideal", &[]));
    assert!(out.contains("squeezed: false (u = x2 for x1x4)"), "{out}");
}

#[test]
fn lift_of_quadric_has_seven_initial_generators() {
    let out = stdout(&run_on("lift", "quadric.ideal", &[]));
    assert!(
        out.contains("initial ideal: (X1X1, X2X1, X2X2, X2X3, X3X1, X3X2, X3X3)"),
        "{out}"
    );
}

#[test]
fn flags_override_header() {
    let out = stdout(&run_on("gb", "quadric.ideal", &["--varorder", "x3<x2<x1"]));
    assert!(out.contains("varorder: x3 < x2 < x1"), "{out}");
    assert!(out.contains("initial ideal: (x1x2)"), "{out}");
    let out = stdout(&run_on("gb", "quadric.ideal", &["--order", "degrevlex"]));
    assert!(out.contains("order: degrevlex"), "{out}");
}
