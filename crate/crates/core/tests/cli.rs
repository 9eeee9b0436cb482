use std::process::Command;

use crossings::cli::{run, NMAX_ENV};

fn ok(args: &[&str]) -> String {
    let mut argv = vec!["crossings"];
    argv.extend_from_slice(args);
    let out = run(argv);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn code(args: &[&str]) -> i32 {
    let mut argv = vec!["crossings"];
    argv.extend_from_slice(args);
    run(argv).code
}

#[test]
fn stats_of_the_running_example() {
    let s = ok(&["stats", "4735126"]);
    assert!(s.contains("crs=3"), "{s}");
    assert!(s.contains("nes=3"), "{s}");
    let j: serde_json::Value = serde_json::from_str(&ok(&["stats", "4,7,3,5,1,2,6", "--json"])).unwrap();
    assert_eq!(j["crs"], 3);
    assert_eq!(j["nes"], 3);
    assert_eq!(j["inv"], 12);
    assert_eq!(j["crossings"].as_array().unwrap().len(), 3);
}

#[test]
fn theta_image_of_the_worked_example() {
    assert_eq!(ok(&["map", "theta", "24135867"]).trim(), "78534621");
    assert_eq!(ok(&["map", "theta-inv", "78534621"]).trim(), "24135867");
}

#[test]
fn r_table_entry_as_a_distribution() {
    assert_eq!(ok(&["dist", "5", "312,213", "crs"]).trim(), "11 + 4*q + q^2");
}

#[test]
fn avoid_counts_and_lists_in_order() {
    let s = ok(&["avoid", "4", "321,231", "--list"]);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "8");
    assert_eq!(lines.len(), 9);
    assert!(lines[1..].windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn series_labels_its_source() {
    let j: serde_json::Value =
        serde_json::from_str(&ok(&["series", "321", "--order", "4", "--json"])).unwrap();
    assert_eq!(j["source"], "formula");
    assert_eq!(j["coefficients"][4], serde_json::json!([8, 4, 2]));
    assert!(ok(&["series", "132,213", "--order", "5"]).contains("recurrence"));
    assert!(ok(&["series", "231", "--order", "4"]).contains("enumeration"));
}

#[test]
fn tables_are_csv() {
    let s = ok(&["table", "r", "5"]);
    assert_eq!(s.lines().next(), Some("n,k,coefficients"));
    assert!(s.lines().any(|l| l == "5,0,11,4,1"));
    assert!(s.lines().any(|l| l == "4,2,1,1"));
    let p = ok(&["table", "pascal-corok", "5"]);
    assert_eq!(p.lines().last(), Some("5,1,3,3,1"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["stats", "1123"]), 2);
    assert_eq!(code(&["avoid", "4", "3x1"]), 2);
    assert_eq!(code(&["check", "no-such-suite"]), 2);
    assert_eq!(code(&["map", "theta", "321"]), 3);
    assert_eq!(code(&["map", "theta-inv", "132"]), 3);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn identical_argv_gives_identical_output() {
    for args in [
        &["avoid", "6", "132", "--list"][..],
        &["dist", "7", "321", "crs,exc,fp", "--json"][..],
        &["series", "312,123", "--order", "8", "--json"][..],
        &["check", "pascal", "--nmax", "7", "--json"][..],
    ] {
        assert_eq!(ok(args), ok(args), "{args:?}");
    }
}

#[test]
fn diagram_writes_svg_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("arcs.svg");
    ok(&["diagram", "arcs", "4735126", "--out", path.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("version=\"1.1\""));

    let d = ok(&["diagram", "dyck", "ududuuuddudduudd", "--tunnels"]);
    assert_eq!(d.matches("class=\"tunnel-").count(), 8);
}

#[test]
fn binary_exit_status_and_env_override() {
    let bin = env!("CARGO_BIN_EXE_crossings");
    let out = Command::new(bin)
        .args(["check", "pascal", "--json"])
        .env(NMAX_ENV, "6")
        .output()
        .unwrap();
    assert!(out.status.success());
    let j: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["n_max"], 6);

    let bad = Command::new(bin).args(["map", "theta", "321"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(3));
    assert!(!bad.stderr.is_empty());
}
