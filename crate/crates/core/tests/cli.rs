use std::fs;
use std::path::Path;

use fullrank::cli::{run_with, EXIT_BUDGET, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
use fullrank::lines::WitnessCertificate;
use fullrank::spaces::AffineSubspace;
use fullrank::verify::VerificationReport;
use fullrank::Matrix;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["fullrank"];
    full.extend_from_slice(args);
    let code = run_with(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).display().to_string()
}

fn gen(dir: &Path, args: &[&str]) {
    let mut full = vec!["gen", "--out-dir", dir.to_str().unwrap()];
    full.extend_from_slice(args);
    let (code, _, err) = run(&full);
    assert_eq!(code, EXIT_OK, "{err}");
}

#[test]
fn check_line_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), &["--example", "lemma1", "--n", "3", "--p", "2", "--r", "1"]);
    let (a, n) = (path(dir.path(), "A.txt"), path(dir.path(), "N.txt"));
    let (code, out, _) = run(&["check-line", &a, &n]);
    assert_eq!(code, EXIT_OK);
    let cert = WitnessCertificate::from_json(&serde_json::from_str(&out).unwrap()).unwrap();
    assert!(cert.validate());
    assert_eq!(cert.table().iter().map(|r| (r.t.to_string(), r.rank)).collect::<Vec<_>>(), vec![("0".into(), 2), ("1".into(), 2)]);

    let zero = path(dir.path(), "zero.txt");
    fs::write(&zero, "field gf 2\nsize 3 2\n0 0\n0 0\n0 0\n").unwrap();
    let (code, out, _) = run(&["check-line", &zero, &n]);
    assert_eq!(code, EXIT_NEGATIVE);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["t"], "0");

    let rat = path(dir.path(), "rat.txt");
    fs::write(&rat, "field rat\nsize 3 2\n0 0\n1 0\n0 1\n").unwrap();
    assert_eq!(run(&["check-line", &rat, &n]).0, EXIT_USAGE);
    let broken = path(dir.path(), "broken.txt");
    fs::write(&broken, "field gf 2\nsize 3 2\n0 0\n1\n").unwrap();
    let (code, _, err) = run(&["check-line", &broken, &n]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line"), "{err}");
}

#[test]
fn witness_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), &["--example", "sharpness", "--n", "3", "--p", "2"]);
    let (s, n) = (path(dir.path(), "space.txt"), path(dir.path(), "N.txt"));
    assert_eq!(run(&["witness", &s, &n]).0, EXIT_NEGATIVE);
    assert_eq!(run(&["witness", &s, &n, "--strategy", "random", "--budget", "3"]).0, EXIT_BUDGET);

    let full = path(dir.path(), "full.txt");
    let mut text = String::from("field gf 2\nsize 3 2\ndim 6\n");
    for i in 0..6 {
        text.push_str(&(0..6).map(|j| if i == j { "1" } else { "0" }).collect::<Vec<_>>().join(" "));
        text.push('\n');
    }
    fs::write(&full, text).unwrap();
    let (code, out, _) = run(&["witness", &full, &n, "--strategy", "parallel", "--workers", "2"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "witness-found");
    assert!(WitnessCertificate::from_json(&v["certificate"]).unwrap().validate());

    let id = path(dir.path(), "id.txt");
    fs::write(&id, "field gf 2\nsize 3 2\n1 0\n0 1\n0 0\n").unwrap();
    assert_eq!(run(&["witness", &full, &id]).0, EXIT_USAGE);
    assert_eq!(run(&["witness", &path(dir.path(), "missing.txt"), &n]).0, EXIT_USAGE);

    let big = path(dir.path(), "big.txt");
    let mut text = String::from("field gf 2\nsize 5 5\ndim 25\n");
    for i in 0..25 {
        text.push_str(&(0..25).map(|j| if i == j { "1" } else { "0" }).collect::<Vec<_>>().join(" "));
        text.push('\n');
    }
    fs::write(&big, text).unwrap();
    let n5 = path(dir.path(), "n5.txt");
    fs::write(&n5, "field gf 2\nsize 5 5\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n").unwrap();
    assert_eq!(run(&["witness", &big, &n5, "--budget", "1000"]).0, EXIT_BUDGET);
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = path(dir.path(), "report.json");
    let (code, _, _) = run(&[
        "verify",
        "--theorem",
        "main",
        "--q",
        "2",
        "--n",
        "3",
        "--p",
        "3",
        "--codim",
        "1",
        "--mode",
        "exhaustive",
        "--out",
        &out_path,
    ]);
    assert_eq!(code, EXIT_OK);
    let report = VerificationReport::from_json(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report.counts.total, 511 * 3);
    assert_eq!(report.counts.failed, 0);

    let args = ["verify", "--theorem", "pencil", "--q", "2", "--n", "3", "--mode", "sample", "--samples", "50"];
    let (_, one, _) = run(&[&args[..], &["--workers", "1"]].concat());
    let (_, four, _) = run(&[&args[..], &["--workers", "4"]].concat());
    let strip = |s: &str| VerificationReport::from_json(s).unwrap().without_timing();
    assert_eq!(strip(&one), strip(&four));

    let (code, _, err) = run(&["verify", "--theorem", "main", "--q", "2", "--n", "3", "--codim", "0..2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("override"));
    let (code, out, _) =
        run(&["verify", "--theorem", "main", "--q", "2", "--n", "3", "--codim", "2", "--rank", "2", "--allow-out-of-hypothesis"]);
    assert_eq!(code, EXIT_OK);
    assert!(!VerificationReport::from_json(&out).unwrap().findings.is_empty());
    let (code, out, _) =
        run(&["--format", "text", "verify", "--theorem", "flanders", "--q", "2", "--n", "3", "--codim", "1", "--rank", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verdict   verified"));
}

#[test]
fn remark2_strong_rejects_gf2() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), &["--example", "remark2-f2"]);
    let s = AffineSubspace::from_text(&fs::read_to_string(dir.path().join("space.txt")).unwrap()).unwrap();
    assert_eq!(s, fullrank::gallery::remark2_f2_example().0);
    let (code, _, err) = run(&["verify", "--theorem", "remark2-strong", "--q", "2", "--n", "3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("at least 3"));
}

#[test]
fn pencil_det_renders_polynomial() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), &["--example", "lemma1", "--n", "2", "--field", "rat"]);
    let (a, n) = (path(dir.path(), "A.txt"), path(dir.path(), "N.txt"));
    let (code, out, _) = run(&["pencil-det", &a, &n, "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "-1\n");
    let (_, out, _) = run(&["pencil-det", &a, &n]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["polynomial"], "-1");
}

#[test]
fn generated_files_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    for example in ["lemma1", "sharpness", "remark1", "remark2-f2", "flanders-extremal"] {
        let sub = dir.path().join(example);
        gen(&sub, &["--example", example, "--field", "3"]);
        for entry in fs::read_dir(&sub).unwrap() {
            let p = entry.unwrap().path();
            let text = fs::read_to_string(&p).unwrap();
            if p.file_name().unwrap() == "space.txt" {
                assert_eq!(AffineSubspace::from_text(&text).unwrap().to_text(), text);
            } else {
                assert_eq!(Matrix::from_text(&text).unwrap().to_text(), text);
            }
        }
    }
    let (code, out, _) = run(&["gen", "--example", "flanders-extremal", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("# space.txt\nfield gf 2"));
}
