//! End-to-end tests of the command line, through `run` and the binary.

use std::process::Command;

use homveech::cli::{reports_from_csv, reports_from_json, reports_to_csv, reports_to_json, run};
use homveech::noncongruence::{verify_range, Status};
use homveech::origami::Origami;
use homveech::quotient::DEFAULT_BOUND;

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("homveech").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn ideal_indices() {
    let (code, out, _) = call(&["ideal", "--d", "5", "--ideal", "(3)", "--indices"]);
    assert_eq!(code, 0);
    assert!(out.contains("gamma0_index: 16"), "{out}");
    assert!(out.contains("sl2_order: 576"), "{out}");
    let (_, out, _) = call(&["ideal", "--d", "5", "--ideal", " [ 3 ; 0 + 3 w ] ", "--factor"]);
    assert!(out.contains("factorization: [3;0+w]·[3;1+w]"), "{out}");
}

#[test]
fn verify_json_round_trip() {
    let (code, out, _) = call(&["verify", "--m", "2", "--n", "2", "--ideal", "P(2,0)", "--format", "json"]);
    assert_eq!(code, 0);
    let reports = reports_from_json(&out).unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert_eq!((r.predicted.index, r.measured.index, r.status()), (2, Some(2), Status::Match));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<_> = v[0].as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys.len(), 4);
    for k in ["origami", "ideal", "predicted", "measured"] {
        assert!(keys.contains(&k.to_string()));
    }
    assert_eq!(v[0]["predicted"]["case"], "1B");
    assert_eq!(v[0]["origami"]["class"], "A");
}

#[test]
fn verify_range_csv() {
    let (code, out, _) = call(&["verify-range", "--m", "3", "--n", "3", "--max-norm", "12", "--format", "csv"]);
    assert_eq!(code, 0);
    let parsed = reports_from_csv(&out).unwrap();
    let direct = verify_range(&Origami::new(3, 3).unwrap(), 12, DEFAULT_BOUND).unwrap();
    assert_eq!(parsed, direct);
    assert_eq!(out.lines().count(), direct.len() + 1);
    assert!(parsed.iter().all(|r| r.status() == Status::Match));
}

#[test]
fn formats_round_trip_with_missing_measurements() {
    let o = Origami::new(4, 2).unwrap();
    let reports = verify_range(&o, 30, 12).unwrap();
    assert!(reports.iter().any(|r| r.status() == Status::BoundExceeded));
    assert_eq!(reports_from_csv(&reports_to_csv(&reports).unwrap()).unwrap(), reports);
    assert_eq!(reports_from_json(&reports_to_json(&reports).unwrap()).unwrap(), reports);
}

#[test]
fn output_independent_of_workers() {
    let base = ["verify-range", "--m", "5", "--n", "3", "--max-norm", "30", "--format", "csv"];
    let one = call(&[&base[..], &["--workers", "1"]].concat());
    let four = call(&[&base[..], &["--workers", "4"]].concat());
    assert_eq!(one, four);
    assert_eq!(one.0, 0);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["verify", "--m", "4", "--n", "2", "--ideal", "(7)", "--bound", "10"]).0, 3);
    assert_eq!(call(&["verify", "--m", "1", "--n", "2", "--ideal", "(7)"]).0, 2);
    assert_eq!(call(&["verify", "--m", "4", "--n", "2", "--ideal", "P(3,2)"]).0, 2);
    assert_eq!(call(&["nosuch"]).0, 2);
    let (code, _, err) = call(&["verify", "--m", "4", "--n", "4", "--ideal", "[3;2+w]"]);
    assert_eq!(code, 1);
    assert!(err.contains("has no F"), "{err}");
    assert_eq!(call(&["nori", "--p", "7", "--trials", "10"]).0, 0);
    assert_eq!(call(&["nori", "--p", "4", "--trials", "1"]).0, 2);
}

#[test]
fn other_subcommands() {
    let (code, out, _) = call(&["origami", "--m", "3", "--n", "3"]);
    assert_eq!(code, 0);
    for want in ["class: B", "spin: odd", "weierstrass_count: 3", "complementary_spin: even", "catalog: valid"] {
        assert!(out.contains(want), "{want} missing in {out}");
    }
    let (code, out, _) = call(&["order", "--d", "6", "--max-prime", "7", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().collect::<Vec<_>>(), ["p,kind,primes", "2,ramified,[2;0+w]", "3,ramified,[3;0+w]", "5,split,[5;0+w] [5;4+w]", "7,split,[7;0+w] [7;1+w]"]);
    let (code, out, _) = call(&["origami", "--m", "4", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["d"], "5");
}

#[test]
fn binary_and_bound_variable() {
    let bin = env!("CARGO_BIN_EXE_homveech");
    let out = Command::new(bin)
        .args(["verify", "--m", "4", "--n", "2", "--ideal", "(3)"])
        .env("HOMVEECH_BOUND", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("bound-exceeded"));
    let out = Command::new(bin)
        .args(["verify", "--m", "4", "--n", "2", "--ideal", "(3)"])
        .env("HOMVEECH_BOUND", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("HOMVEECH_BOUND"));
    let out = Command::new(bin)
        .args(["verify", "--m", "4", "--n", "2", "--ideal", "(3)"])
        .env_remove("HOMVEECH_BOUND")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("measured 16"));
}
