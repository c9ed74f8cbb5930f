use std::process::{Command, Output};

use serde_json::{json, Value};

fn germsig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_germsig"))
        .args(args)
        .current_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures"))
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = germsig(args);
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"));
    (out.status.code().unwrap(), value)
}

#[test]
fn chi_loc_output_is_exact() {
    let out = germsig(&["chi-loc", "--d", "2", "--m", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"checks\":[],\"command\":\"chi-loc\",\"inputs\":{\"d\":2,\"m\":6},\"result\":\"3/5\"}\n"
    );
}

#[test]
fn phi_of_a_half_twist() {
    let (code, r) = report(&["phi", "--d", "2", "--m", "6", "--word", "s12"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"], "3/5");
    let (_, r) = report(&["phi", "--d", "3", "--m", "3", "--word", "s12^-1"]);
    assert_eq!(r["result"], "-4/3");
}

#[test]
fn tau_from_files() {
    let (code, r) = report(&["tau", "identity_g1.json", "identity_g1.json"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"], 0);
    let (_, r) = report(&["tau", "quarter_turn.json", "quarter_turn.json"]);
    assert_eq!(r["result"], -2);
}

#[test]
fn rep_prints_a_matrix() {
    let (code, r) = report(&["rep", "--d", "2", "--m", "4", "--word", "s12 s12^-1"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"], json!({"g": 1, "rows": [[1, 0], [0, 1]]}));
    let (code, r) = report(&["rep", "--d", "3", "--m", "4", "--word", "s13", "--labels", "1,2,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["g"], 2);
}

#[test]
fn germ_and_action_files() {
    let (code, r) = report(&["sigloc", "germ_2_6.json"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"], "-3/5");
    let (_, r) = report(&["gsign", "involution.json"]);
    assert_eq!(r["result"], "2");
}

#[test]
fn winding_pairs() {
    let (code, r) = report(&["winding", "--m", "6", "--pair", "3:12*3:21/3:45*3:45"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"], 1);
    let (_, r) = report(&["winding", "--m", "6", "--pair", "3:45/3:54"]);
    assert_eq!(r["result"], 0);
    let (_, r) = report(&["winding", "--m", "6", "--pair", "1:23/1:34"]);
    assert_eq!(r["result"], -1);
}

#[test]
fn domain_errors_name_their_origin() {
    let cases: [(&[&str], &str, &str); 5] = [
        (&["chi-loc", "--d", "4", "--m", "6"], "winding", "BadSpec"),
        (&["tau", "not_symplectic.json", "identity_g1.json"], "symplectic", "NotSymplectic"),
        (&["gsign", "zero_angle.json"], "gsign", "ZeroAngle"),
        (&["rep", "--d", "2", "--m", "4", "--word", "s15"], "coverrep", "InvalidWord"),
        (&["tau", "missing.json", "identity_g1.json"], "symplectic", "InvalidData"),
    ];
    for (args, module, name) in cases {
        let (code, r) = report(args);
        assert_eq!(code, 1, "{args:?}");
        assert_eq!(r["error"]["module"], module);
        assert_eq!(r["error"]["name"], name);
        assert!(r.get("result").is_none());
    }
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [&["chi-loc", "--d", "x", "--m", "6"][..], &["frobnicate"], &["phi", "--d", "2"], &["verify", "nope"]] {
        let (code, r) = report(args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(r["error"]["name"], "UsageError");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["phi", "--d", "3", "--m", "6", "--word", "s12 s34^-1 s25"];
    assert_eq!(germsig(&args).stdout, germsig(&args).stdout);
}

#[test]
fn verify_one_suite() {
    let (code, r) = report(&["verify", "representation"]);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["passed"], true);
    assert!(!r["checks"].as_array().unwrap().is_empty());
}
