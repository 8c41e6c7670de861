use assert_cmd::Command;
use predicates::str::contains;
use serde_json::Value;

fn pretzel() -> Command {
    Command::cargo_bin("pretzel").unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = pretzel().args(args).assert().success().get_output().stdout.clone();
    serde_json::from_slice(&out).unwrap()
}

#[test]
fn invariants_of_a_genus_two_knot() {
    let v = json(&["invariants", "K(1,0,0,0,0)"]);
    assert_eq!(v["a2"], 5);
    assert_eq!(v["a4"], 2);
    assert_eq!(v["v3"], -11);
    assert_eq!(v["genus"], 2);
}

#[test]
fn positive_form_is_the_mirror() {
    let k = json(&["invariants", "K(1,0,0)"]);
    let p = json(&["invariants", "P(3,1,1)"]);
    assert_eq!(k["a2"], p["a2"]);
    assert_eq!(k["v3"].as_i64().unwrap(), -p["v3"].as_i64().unwrap());
}

#[test]
fn malformed_knots_exit_with_two() {
    pretzel().args(["invariants", "K(1,1)"]).assert().code(2);
    pretzel().args(["check", "K(1,-1,0)"]).assert().code(2);
    pretzel().args(["sigtable", "K(1,0"]).assert().code(2);
    pretzel().args(["verify"]).assert().code(2);
}

#[test]
fn sigtable_first_row() {
    pretzel()
        .args(["sigtable", "K(1,0,0,0,0,0,0)", "--pmax", "1"])
        .assert()
        .success()
        .stdout("p,sigma,sigma_over_p,coincidence\n1,0,0/1,false\n");
}

#[test]
fn sigtable_flags_coincidences() {
    // the trefoil's only root sits at angle pi/3
    pretzel()
        .args(["sigtable", "K(0,0,0)", "--pmax", "6"])
        .assert()
        .success()
        .stdout(contains("6,8,4/3,true"));
}

#[test]
fn check_ratio_window() {
    let v = json(&["check", "K(2,1,0,0,0)"]);
    assert_eq!(v["outcome"], "NoCCS");
    assert_eq!(v["reasons"][0]["criterion"], "ratio-window");
    pretzel().args(["check", "K(2,1,0,0,0)"]).assert().success();
    pretzel().args(["survey", "--genus", "2", "--max-sum", "3", "--format", "csv"]).assert().stdout(contains("792 > 776"));
}

#[test]
fn check_all_zero_twists() {
    let v = json(&["check", "K(0,0,0,0,0)"]);
    assert_eq!(v["outcome"], "KnownChiral");
}

#[test]
fn check_integrality_endgame() {
    let v = json(&["check", "K(1,0,0,0,0,0,0)"]);
    assert_eq!(v["outcome"], "NoCCS");
    let reasons = v["reasons"].as_array().unwrap();
    let cass = reasons.iter().find(|r| r["criterion"] == "cass-integrality").unwrap();
    assert_eq!(cass["p"], 5);
    assert_eq!(cass["slope_sum"], "-5/9");
}

#[test]
fn survey_counts_and_is_deterministic() {
    let args = ["survey", "--genus", "2", "--max-sum", "4", "--max-twist", "4"];
    let a = json(&args);
    assert_eq!(a.as_array().unwrap().len(), 12);
    let mut single = args.to_vec();
    single.extend(["--jobs", "1"]);
    assert_eq!(a, json(&single));
}

#[test]
fn survey_csv_round_trips() {
    let dir = std::env::temp_dir().join(format!("pretzel-survey-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("survey.csv");
    pretzel()
        .args(["survey", "--genus", "2", "--max-sum", "4", "--format", "csv", "--out"])
        .arg(&path)
        .assert()
        .success();
    let mut r = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<csv::StringRecord> = r.records().map(|x| x.unwrap()).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().any(|r| &r[0] == "K(0,0,0,0,0)" && &r[3] == "KnownChiral"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_small_range() {
    pretzel()
        .args(["verify", "--genus", "2", "--max-sum", "4", "--format", "text"])
        .assert()
        .success()
        .stdout(contains("12 knots: 11 NoCCS, 1 KnownChiral, 0 Inconclusive"));
}

#[test]
fn reproduce_is_clean() {
    pretzel().arg("reproduce").assert().success().stdout(contains("no theorem violations"));
    let v = json(&["reproduce", "--format", "json"]);
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn mirror_negates_the_signature() {
    pretzel()
        .args(["sigtable", "P(3,1,1)", "--pmax", "3"])
        .assert()
        .success()
        .stdout("p,sigma,sigma_over_p,coincidence\n1,0,0/1,false\n2,-2,-1/1,false\n3,-4,-4/3,false\n");
}
