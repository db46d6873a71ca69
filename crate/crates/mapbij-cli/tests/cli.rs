//! End-to-end checks of the command-line surface.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mapbij"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (String, String, Option<i32>) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code(),
    )
}

const EMAP: &str = "rmap 1\nm 1\nsigma 1 2\nroot 1\n";

#[test]
fn count_values() {
    let (out, _, code) = run_with_stdin(&["count", "--family", "theta-n", "--n", "5"], "");
    assert_eq!(out.trim(), "92");
    assert_eq!(code, Some(0));
    let (out, _, _) = run_with_stdin(
        &["count", "--family", "theta-ni", "--n", "3", "--i", "1"],
        "",
    );
    assert_eq!(out.trim(), "4");
}

#[test]
fn enumerate_counts() {
    let (out, _, code) = run_with_stdin(
        &["enumerate", "--family", "loopless", "--size", "4", "--count-only"],
        "",
    );
    assert_eq!(out.trim(), "68");
    assert_eq!(code, Some(0));
    // streamed records are parseable and blank-line separated
    let (out, _, _) = run_with_stdin(&["enumerate", "--family", "nonseparable", "--size", "3"], "");
    let records = mapbij::codec::decode_stream(&out).unwrap();
    assert_eq!(records.len(), 2);
}

#[test]
fn apply_f2_round_trip() {
    let (k4, _, code) = run_with_stdin(&["apply", "--bijection", "f2"], EMAP);
    assert_eq!(code, Some(0));
    let (back, _, _) = run_with_stdin(&["apply", "--bijection", "f2inv"], &k4);
    match mapbij::codec::decode(&back).unwrap() {
        mapbij::codec::Record::Map(m) => {
            assert_eq!(
                m.canonical_form(),
                mapbij::fixtures::emap().canonical_form()
            );
        }
        other => panic!("expected a map, got {}", other.kind()),
    }
}

#[test]
fn minimal_and_phi_pipeline() {
    // minimal orientation of the double edge, then phi, then phi'
    let c2 = mapbij::codec::encode_map(&mapbij::fixtures::c2());
    let (o, _, code) = run_with_stdin(&["minimal", "--structure", "bipolar"], &c2);
    assert_eq!(code, Some(0));
    let (p, _, _) = run_with_stdin(&["apply", "--bijection", "phi"], &o);
    let (x, _, _) = run_with_stdin(&["apply", "--bijection", "phiprime"], &p);
    match mapbij::codec::decode(&x).unwrap() {
        mapbij::codec::Record::Transversal(x) => {
            assert_eq!(
                x.tri().canonical_form(),
                mapbij::fixtures::i5().canonical_form()
            );
        }
        other => panic!("expected a transversal structure, got {}", other.kind()),
    }
}

#[test]
fn decompose_emits_tuple_header() {
    let path2 = mapbij::codec::encode_map(&mapbij::fixtures::path2());
    let (out, _, code) = run_with_stdin(&["decompose", "--kind", "block"], &path2);
    assert_eq!(code, Some(0));
    assert!(out.starts_with("tuple 3\n"));
    let records = mapbij::codec::decode_stream(out.split_once('\n').unwrap().1).unwrap();
    assert_eq!(records.len(), 3);
}

#[test]
fn check_reports_kind_and_exit_codes() {
    let (out, _, code) = run_with_stdin(&["check"], EMAP);
    assert!(out.contains("valid rooted map"));
    assert!(out.contains("non-separable"));
    assert_eq!(code, Some(0));
    let (out, _, code) = run_with_stdin(&["check"], "rmap 1\nm 1\nsigma 1 2\nroot 3\n");
    assert!(out.starts_with("invalid"));
    assert_eq!(code, Some(2));
    let (_, _, code) = run_with_stdin(&["frobnicate"], "");
    assert_eq!(code, Some(64));
}

#[test]
fn verify_passes_and_is_jobs_invariant() {
    let (t1, _, code) = run_with_stdin(&["verify", "--max-size", "3"], "");
    assert_eq!(code, Some(0));
    let (t2, _, _) = run_with_stdin(&["verify", "--max-size", "3", "--jobs", "3"], "");
    assert_eq!(t1, t2);
    assert_eq!(t1.lines().count(), 11);
    assert!(t1.lines().all(|l| l.contains("PASS") || l.contains("SKIPPED")));
}

#[test]
fn transversal_records_round_trip_through_cli() {
    // minimal transversal of the pyramid, then back to its red poset
    let i5 = mapbij::codec::encode_map(&mapbij::fixtures::i5());
    let (x, _, code) = run_with_stdin(&["minimal", "--structure", "transversal"], &i5);
    assert_eq!(code, Some(0));
    let (check, _, _) = run_with_stdin(&["check"], &x);
    assert!(check.contains("valid transversal structure"));
    let (p, _, code) = run_with_stdin(&["apply", "--bijection", "psiprime"], &x);
    assert_eq!(code, Some(0));
    let (check, _, _) = run_with_stdin(&["check"], &p);
    assert!(check.contains("plane bipolar poset"));
}

#[test]
fn file_based_io() {
    let dir = std::env::temp_dir().join(format!("mapbij-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("emap.rmap");
    let output = dir.join("k4.rmap");
    std::fs::write(&input, EMAP).unwrap();
    let status = bin()
        .args([
            "apply",
            "--bijection",
            "f2",
            "--in",
            input.to_str().unwrap(),
            "--out",
            output.to_str().unwrap(),
        ])
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&output).unwrap();
    match mapbij::codec::decode(&text).unwrap() {
        mapbij::codec::Record::Map(m) => {
            assert_eq!(m.canonical_form(), mapbij::fixtures::k4r().canonical_form())
        }
        other => panic!("expected a map, got {}", other.kind()),
    }
    std::fs::remove_dir_all(&dir).ok();
}
