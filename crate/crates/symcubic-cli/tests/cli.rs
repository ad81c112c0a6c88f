//! End-to-end tests of the command-line surface: flag parsing, JSON report
//! shape, exit codes and byte stability.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symcubic"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_result(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["schema"], "1");
    v["result"].clone()
}

#[test]
fn analyze_emits_the_expected_payload() {
    let out = run(&[
        "analyze",
        "--order",
        "2",
        "--weights",
        "0,0,0,0,0,1",
        "--lambda",
        "0",
        "--seed",
        "42",
        "--json",
    ]);
    let r = json_result(&out);
    assert_eq!(r["n"], 14);
    assert_eq!(r["zeta"], "-1");
    assert_eq!(r["domain"], "TypeIV(14)");
    assert_eq!(r["bb"], true);
    assert_eq!(r["label"], "T2-1");
}

#[test]
fn analyze_point_case() {
    let out = run(&[
        "analyze",
        "--order",
        "11",
        "--weights",
        "0,1,3,4,5,9",
        "--lambda",
        "0",
        "--json",
    ]);
    let r = json_result(&out);
    assert_eq!(r["n"], 0);
    assert_eq!(r["domain"], "Point");
}

#[test]
fn malformed_weights_exit_two() {
    let out = run(&[
        "analyze",
        "--order",
        "2",
        "--weights",
        "0,0,0,0,1",
        "--lambda",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_stable() {
    let args = [
        "analyze",
        "--order",
        "3",
        "--weights",
        "0,0,0,0,1,1",
        "--lambda",
        "0",
        "--seed",
        "7",
        "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn classify_order_two_rows() {
    let out = run(&["classify", "--primes", "2", "--seed", "42", "--json"]);
    let r = json_result(&out);
    let rows = r.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let mut ns: Vec<u64> = rows.iter().map(|row| row["n"].as_u64().unwrap()).collect();
    ns.sort_unstable();
    assert_eq!(ns, vec![10, 12, 14]);
}

#[test]
fn classify_csv_has_header_and_rows() {
    let out = run(&["classify", "--primes", "2", "--csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("label,order,weights"));
}

#[test]
fn smooth_verdicts() {
    let out = run(&["smooth", "--poly", fixture("fermat.json").to_str().unwrap(), "--json"]);
    let r = json_result(&out);
    assert_eq!(r["verdict"], "smooth");

    // the cone is only certified singular in exact mode
    let out = run(&[
        "smooth",
        "--poly",
        fixture("cone.json").to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(json_result(&out)["verdict"], "inconclusive");
    let out = run(&[
        "smooth",
        "--poly",
        fixture("cone.json").to_str().unwrap(),
        "--exact",
        "--json",
    ]);
    assert_eq!(json_result(&out)["verdict"], "singular");
}

#[test]
fn smooth_rejects_malformed_file() {
    let out = run(&["smooth", "--poly", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hodge_on_fermat() {
    let out = run(&[
        "hodge",
        "--poly",
        fixture("fermat.json").to_str().unwrap(),
        "--order",
        "3",
        "--weights",
        "0,0,0,0,0,1",
        "--lambda",
        "0",
        "--json",
    ]);
    let r = json_result(&out);
    assert_eq!(r["hodge"]["zeta_exp"], 1);
    assert_eq!(r["hilbert"], serde_json::json!([1, 6, 15, 20, 15, 6, 1, 0]));
}

#[test]
fn bb_verdict_with_witnesses() {
    let out = run(&[
        "bb",
        "--order",
        "2",
        "--weights",
        "0,0,0,0,1,1",
        "--lambda",
        "0",
        "--json",
    ]);
    let r = json_result(&out);
    assert_eq!(r["is_bb"], false);
    assert!(!r["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn chi_verify_and_expand() {
    let out = run(&["chi", "--verify-veronese", "--json"]);
    assert_eq!(json_result(&out)["ok"], true);

    let out = run(&["chi", "--a", "0", "--b", "1", "--json"]);
    let r = json_result(&out);
    assert_eq!(r["vars"], 6);
    assert_eq!(r["degree"], 3);
    assert_eq!(r["terms"].as_array().unwrap().len(), 6);
}

#[test]
fn lattice_operations() {
    let u = fixture("u.json");
    let out = run(&["lattice", "eigen", "--lattice", u.to_str().unwrap(), "--sign", "+1", "--json"]);
    let r = json_result(&out);
    assert_eq!(r["gram"], serde_json::json!([["2"]]));

    let out = run(&["lattice", "verify", "--lattice", u.to_str().unwrap(), "--json"]);
    let r = json_result(&out);
    assert_eq!(r["ok"], true);
    assert_eq!(r["order"], 2);

    let out = run(&[
        "lattice",
        "isotropic",
        "--lattice",
        u.to_str().unwrap(),
        "--height",
        "3",
        "--json",
    ]);
    let r = json_result(&out);
    assert_eq!(r["vectors"], serde_json::json!([[0, 1], [1, 0]]));

    let uu = fixture("u_u_arrangement.json");
    let out = run(&[
        "lattice",
        "boundary-line",
        "--lattice",
        uu.to_str().unwrap(),
        "--line",
        "1,0,0,0",
        "--json",
    ]);
    let r = json_result(&out);
    assert_eq!(r["dim"], 2);

    let out = run(&[
        "lattice",
        "cm",
        "--lattice",
        uu.to_str().unwrap(),
        "--e",
        "1,0,0,0",
        "--f",
        "0,0,1,0",
        "--d",
        "3",
        "--json",
    ]);
    let r = json_result(&out);
    assert!(r["isotropic_plane"].is_array());
}
