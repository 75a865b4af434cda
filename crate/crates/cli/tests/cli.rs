//! End-to-end checks of the `chromatic` binary: byte-stable output,
//! document round-trips and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn chromatic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromatic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    p.push(name);
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_paper_passes_and_is_byte_stable() {
    let first = chromatic(&["verify-paper"]);
    assert!(first.status.success());
    let text = stdout(&first);
    assert_eq!(text.lines().count(), chromatic_core::claims::REGISTRY.len());
    for line in text.lines() {
        assert!(line.starts_with("PASS "), "{line}");
    }
    let second = chromatic(&["verify-paper"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn anyon_tables_have_the_right_shape() {
    let fusion = chromatic(&["anyons", "--model", "cc", "--table", "fusion"]);
    assert!(fusion.status.success());
    assert_eq!(stdout(&fusion).lines().count(), 17); // header + 16 rows
    let spin = chromatic(&["anyons", "--model", "tc", "--table", "spin"]);
    assert!(spin.status.success());
    let text = stdout(&spin);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("eps -1"));
    let mono = chromatic(&["anyons", "--model", "3f", "--table", "monodromy"]);
    assert_eq!(stdout(&mono).lines().count(), 5);
}

#[test]
fn symmetry_and_boundary_counts() {
    let count = chromatic(&["symmetries", "--model", "cc", "--count"]);
    assert_eq!(stdout(&count).trim(), "72");
    let classes = chromatic(&["symmetries", "--model", "cc", "--classes"]);
    assert_eq!(stdout(&classes).lines().count(), 9);
    let full = chromatic(&["symmetries", "--model", "cc"]);
    // order + classes + dims + 72 element lines
    assert_eq!(stdout(&full).lines().count(), 1 + 9 + 9 + 72);
    let boundaries = chromatic(&["boundaries", "--model", "cc"]);
    assert_eq!(stdout(&boundaries).lines().count(), 6);
    let none = chromatic(&["boundaries", "--model", "3f"]);
    assert_eq!(stdout(&none).trim(), "none");
}

#[test]
fn build_and_params_round_trip() {
    let path = tmp("p2.json");
    let build = chromatic(&["code", "build", "--family", "pauli-triangular", "--l", "2", "--out", &path]);
    assert!(build.status.success(), "{}", String::from_utf8_lossy(&build.stderr));

    let first = chromatic(&["code", "params", &path]);
    assert!(first.status.success());
    let text = stdout(&first);
    assert!(text.contains("[[4,1,2]] PASS"), "{text}");

    // reading and re-serializing the document changes nothing
    let doc = chromatic_core::factory::CodeDocument::from_json(
        &std::fs::read_to_string(&path).unwrap(),
    )
    .unwrap();
    assert_eq!(doc.to_json(), std::fs::read_to_string(&path).unwrap());

    let second = chromatic(&["code", "params", &path]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn dressed_params_for_a_stellated_code() {
    let path = tmp("s5.json");
    let build = chromatic(&[
        "code", "build", "--family", "stellated-color", "--lattice", "488", "--s", "5", "--d", "3",
        "--out", &path,
    ]);
    assert!(build.status.success());
    let params = chromatic(&["code", "params", &path, "--dressed"]);
    assert!(params.status.success());
    let text = stdout(&params);
    assert!(text.contains("c = 36/25"), "{text}");
    assert!(text.contains("[[25,4,3]] PASS"), "{text}");
}

#[test]
fn exit_codes_distinguish_io_from_verification() {
    let missing = chromatic(&["code", "params", &tmp("nope.json")]);
    assert_eq!(missing.status.code(), Some(2));

    let bad_family = chromatic(&["code", "build", "--family", "nope", "--out", &tmp("x.json")]);
    assert_eq!(bad_family.status.code(), Some(2));

    // a valid document whose operators fail the stabilizer axioms is a
    // verification failure
    let path = tmp("broken.json");
    let ok = tmp("ok.json");
    let build = chromatic(&["code", "build", "--family", "pauli-triangular", "--l", "2", "--out", &ok]);
    assert!(build.status.success());
    let text = std::fs::read_to_string(&ok).unwrap();
    // make the first two stabilizers anticommute by editing one letter
    let broken = text.replacen("XXIX", "XXII", 1);
    assert_ne!(text, broken);
    std::fs::write(&path, broken).unwrap();
    let params = chromatic(&["code", "params", &path]);
    assert_eq!(params.status.code(), Some(1));
}
