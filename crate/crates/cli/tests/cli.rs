use std::process::{Command, Output};

fn dellac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dellac"))
        .args(args)
        .env_remove("DELLAC_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dellac(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const T1: &str = r#"{"kind":"te","n":2,"rows":[1,1,2,2]}"#;

#[test]
fn poincare_of_the_ordinary_variety() {
    assert_eq!(stdout(&["poincare", "--variety", "a", "--n", "3"]).trim(), r#"["1","2","3","1"]"#);
}

#[test]
fn enumerate_lists_every_configuration() {
    assert_eq!(stdout(&["enumerate", "--kind", "te", "--n", "2"]).lines().count(), 3);
    let csv = stdout(&["--format", "csv", "enumerate", "--kind", "to", "--n", "1"]);
    assert_eq!(csv.lines().collect::<Vec<_>>(), ["1,0,1", "1,1,0"]);
    assert_eq!(stdout(&["enumerate", "--kind", "dc", "--n", "3"]).lines().count(), 7);
}

#[test]
fn limit_and_size_cap_are_errors() {
    let out = dellac(&["--limit", "2", "enumerate", "--kind", "te", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_dellac"))
        .args(["enumerate", "--kind", "te", "--n", "4"])
        .env("DELLAC_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DELLAC_MAX_N"));
}

#[test]
fn maps_send_the_small_example_down() {
    let pi = stdout(&["map", "--op", "pi", "--in", T1]);
    assert_eq!(pi.trim(), r#"{"tableau":{"kind":"te","n":1,"rows":[1,1]},"x":["1:1"]}"#);
    let p = stdout(&["map", "--op", "p", "--in", T1]);
    assert_eq!(p.trim(), r#"{"kind":"to","n":1,"rows":[1,null,1]}"#);
}

#[test]
fn poly_routes_agree() {
    let want = r#"["49","110","84","24"]"#;
    for via in ["recurrence", "pistols", "cf"] {
        assert_eq!(stdout(&["poly", "--family", "P", "--n", "4", "--via", via]).trim(), want);
    }
}

#[test]
fn verify_reports_json() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["verify", "--suite", "cf"])).unwrap();
    assert_eq!(v[0]["id"], 10);
    assert_eq!(v[0]["pass"], true);
}

#[test]
fn render_is_deterministic() {
    let a = stdout(&["render", "--in", T1, "--overlay", "paths"]);
    let b = stdout(&["render", "--in", T1, "--overlay", "paths"]);
    assert_eq!(a, b);
    assert!(a.starts_with("<svg") && a.contains("polyline"));
    let odd = stdout(&["render", "--in", r#"{"kind":"to","n":1,"rows":[1,null,1]}"#]);
    assert!(odd.contains("#e6e6e6"));
}

#[test]
fn bad_input_exits_with_two() {
    let out = dellac(&["map", "--op", "pi", "--in", r#"{"kind":"te","n":2,"rows":[2,1,1,2]}"#]);
    assert_eq!(out.status.code(), Some(2));
}
