//! End-to-end checks of the command-line surface and its exit codes:
//! 0 success, 1 mismatch against expectations, 2 input error.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lie-spectra"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

#[test]
fn table2_matches_golden() {
    let out = bin().args(["table2", "--rank-cap", "8"]).output().unwrap();
    assert!(out.status.success());
    let golden = std::fs::read_to_string(data("table2_rank8.golden")).unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn enumerate_c3_below_one() {
    let out = bin()
        .args(["enumerate", "--type", "C3", "--bound", "1", "--strict"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "a=(1,0,0) lambda=7/16 dim=6\na=(0,1,0) lambda=3/4 dim=14\na=(0,0,1) lambda=15/16 dim=14\n"
    );
}

#[test]
fn lambda1_and_branch_single_space() {
    let out = bin()
        .args([
            "lambda1",
            "--catalog",
            data("reducible.cat").to_str().unwrap(),
            "--space",
            "XIII",
            "--params",
            "n=1,k=3",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("= 3/4"), "{text}");
    assert!(text.contains("2E = 7/8"), "{text}");

    let out = bin()
        .args([
            "branch",
            "--catalog",
            data("irreducible.cat").to_str().unwrap(),
            "--space",
            "iso-33",
            "--weight",
            "1,0",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("trivial multiplicity: 1"), "{text}");
}

#[test]
fn report_against_expectation_file() {
    let out = bin()
        .args([
            "report",
            "--catalog",
            data("reducible.cat").to_str().unwrap(),
            "--expect",
            data("reducible_report.records").to_str().unwrap(),
            "--format",
            "records",
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn doctored_expectation_exits_with_mismatch() {
    let records = std::fs::read_to_string(data("reducible_report.records")).unwrap();
    let doctored = records.replacen("7/8", "9/8", 1);
    let tmp = std::env::temp_dir().join("lie-spectra-doctored.records");
    std::fs::write(&tmp, doctored).unwrap();
    let out = bin()
        .args([
            "report",
            "--catalog",
            data("reducible.cat").to_str().unwrap(),
            "--expect",
            tmp.to_str().unwrap(),
            "--format",
            "records",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn input_errors_exit_with_code_2() {
    let out = bin()
        .args(["enumerate", "--type", "Q9", "--bound", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args([
            "lambda1",
            "--catalog",
            data("reducible.cat").to_str().unwrap(),
            "--space",
            "no-such-space",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // pending embeddings are input errors, not silent skips
    let out = bin()
        .args([
            "lambda1",
            "--catalog",
            data("irreducible.cat").to_str().unwrap(),
            "--space",
            "iso-19",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("needs-explicit-matrix"), "{err}");
}
