use std::process::{Command, Output};

use serde_json::Value;

fn finsub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finsub"))
        .args(args)
        .env_remove("FINSUB_BUDGET")
        .output()
        .expect("binary runs")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("every line is JSON"))
        .collect()
}

fn summary(out: &Output) -> Value {
    lines(out).pop().expect("summary line")["summary"].clone()
}

#[test]
fn case_table_has_the_e7_row() {
    let out = finsub(&["table", "cases"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = lines(&out);
    let e7 = rows.iter().find(|r| r["type"] == "E7").unwrap();
    assert_eq!(e7["new_q"], serde_json::json!([29, 37]));
    assert_eq!(summary(&out)["passed"], true);
}

#[test]
fn text_table_is_aligned() {
    let out = finsub(&["table", "degrees", "--text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let first = text.lines().next().unwrap();
    assert!(first.starts_with("type"));
    assert!(text
        .lines()
        .any(|l| l.starts_with("E8") && l.contains("696729600")));
}

#[test]
fn exit_codes() {
    assert_eq!(
        finsub(&["criterion", "--type", "E8", "--q", "43"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(finsub(&["table", "nope"]).status.code(), Some(2));
    assert_eq!(
        finsub(&["h1", "--p", "5", "--module", "sym("])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(finsub(&["no-such-command"]).status.code(), Some(2));
    // an obstructed lift is a failed assertion
    let out = finsub(&["lift", "--p", "5", "--group", "unipotent", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(lines(&out)[0]["obstruction"].is_array());
}

#[test]
fn output_is_stable_for_a_seed() {
    let args = [
        "semisimple",
        "--p",
        "7",
        "--module",
        "tensor(sym:3,sym:5)",
        "--seed",
        "9",
    ];
    assert_eq!(finsub(&args).stdout, finsub(&args).stdout);
}

#[test]
fn cohomology_commands() {
    let out = finsub(&["h1", "--p", "7", "--module", "sym:4"]);
    assert_eq!(lines(&out)[0]["dim"], 1);
    let out = finsub(&["h2", "--p", "5", "--module", "sym:2"]);
    assert_eq!(lines(&out)[0]["dim"], 1);
}

#[test]
fn props_and_lift() {
    let out = finsub(&["verify-props", "--p", "3", "--A", "s3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!lines(&out)[0]["representatives"]
        .as_array()
        .unwrap()
        .is_empty());
    let out = finsub(&["lift", "--p", "7", "--group", "s3", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out)[0]["k_reached"], 3);
}

#[test]
fn budget_from_environment_forces_witnesses() {
    let out = Command::new(env!("CARGO_BIN_EXE_finsub"))
        .args(["springer", "--type", "F4"])
        .env("FINSUB_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = &lines(&out)[0];
    assert_eq!(r["authoritative"], false);
    assert_eq!(r["equal"], true);
    assert_eq!(summary(&out)["budget"], 10);
    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_finsub"))
        .args(["springer", "--type", "F4", "--budget", "5000"])
        .env("FINSUB_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(lines(&out)[0]["authoritative"], true);
}

#[test]
fn timing_only_with_the_flag() {
    let plain = summary(&finsub(&["minkowski", "--n", "4", "--l", "3"]));
    assert!(plain.get("elapsed_ms").is_none());
    let timed = summary(&finsub(&["minkowski", "--n", "4", "--l", "3", "--timing"]));
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn verify_all_quick_passes() {
    let out = finsub(&["verify-all", "--tier", "quick"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let s = summary(&out);
    assert_eq!(s["assertions"], 11);
    assert_eq!(s["failed"], serde_json::json!([]));
}
