use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn recosc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recosc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn verdict(file: &str) -> (String, serde_json::Value) {
    let path = data(file);
    let o = recosc(&["analyze", path.to_str().unwrap(), "--no-footer"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    (v["report"]["verdict"]["kind"].as_str().unwrap().to_string(), v)
}

#[test]
fn analyze_verdicts() {
    assert_eq!(verdict("fibonacci.json").0, "eventually_positive");
    assert_eq!(verdict("alternating.json").0, "oscillates");
    assert_eq!(verdict("zero.json").0, "identically_zero");
    let (k, v) = verdict("example_three_two_two.json");
    assert_eq!(k, "oscillates");
    let chain = v["report"]["theorem_chain"].to_string();
    assert!(chain.contains("L_5(2,1)"), "{chain}");
    assert_eq!(verdict("touching.json").0, "oscillates");
}

#[test]
fn analyze_is_deterministic() {
    let path = data("example_three_two_two.json");
    let a = recosc(&["analyze", path.to_str().unwrap(), "--no-footer"]);
    let b = recosc(&["analyze", path.to_str().unwrap(), "--no-footer"]);
    assert_eq!(a.stdout, b.stdout);
    let with_footer: serde_json::Value = serde_json::from_slice(&recosc(&["analyze", path.to_str().unwrap()]).stdout).unwrap();
    assert!(with_footer["footer"]["elapsed_ms"].is_u64());
}

#[test]
fn exit_codes() {
    let bad = data("unreduced.json");
    let o = recosc(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("recurrence.initials"));
    let missing = data("no_such_file.json");
    assert_eq!(recosc(&["analyze", missing.to_str().unwrap()]).status.code(), Some(2));

    // roots 1 + 2^-100 and -1 cannot be told apart in modulus with 64 bits
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let close = dir.join("close.json");
    let big = "1267650600228229401496703205376";
    std::fs::write(
        &close,
        format!(r#"{{"mode":"recurrence","recurrence":{{"coeffs":["1/{big}","{}7/{big}"],"initials":["1","0"]}}}}"#, &big[..big.len() - 1]),
    )
    .unwrap();
    let run = |budget: &str| {
        Command::new(env!("CARGO_BIN_EXE_recosc"))
            .args(["analyze", close.to_str().unwrap()])
            .env("OSC_PRECISION_BUDGET", budget)
            .output()
            .unwrap()
    };
    assert_eq!(run("64").status.code(), Some(3));
    assert_eq!(run("4096").status.code(), Some(0));
    let o = recosc(&["analyze", close.to_str().unwrap(), "--precision-budget", "64"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn multiples_csv() {
    let o = recosc(&["multiples", "--xi", "1/5", "1/2"]);
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    assert_eq!(rows.len(), 10);
    let pts: std::collections::BTreeSet<String> = rows.iter().map(|r| r.split_once(',').unwrap().1.to_string()).collect();
    assert_eq!(pts.len(), 10);
    let o = recosc(&["multiples", "--xi", "3/8", "1/4"]);
    assert_eq!(stdout(&o).lines().count(), 9);
    assert!(stdout(&o).contains("\n3,1/8,3/4\n"));
    let o = recosc(&["multiples", "--xi", "0/1", "0/1"]);
    assert_eq!(stdout(&o), "n,x,y\n0,0,0\n");
    let o = recosc(&["multiples", "--xi", "0.5", "1/3", "--count", "4"]);
    assert!(stdout(&o).starts_with("# approximate"));
    assert_eq!(recosc(&["multiples", "--xi", "2/4", "1/3"]).status.code(), Some(2));
}

#[test]
fn empty_square() {
    let o = recosc(&["empty-square", "--num", "1", "2", "--den", "5", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_ne!(stdout(&o).trim(), "none");
    let o = recosc(&["empty-square", "--num", "1", "3", "--den", "7", "7"]);
    assert_eq!(stdout(&o).trim(), "none");
    let o = recosc(&["empty-square", "--num", "1", "1", "--den", "4", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lattice_queries() {
    let o = recosc(&["lattice", "--g", "5", "--a", "2", "1", "--member", "1", "3"]);
    assert_eq!(stdout(&o).trim(), "true");
    let o = recosc(&["lattice", "--g", "5", "--a", "2", "1", "--member", "1", "1"]);
    assert_eq!(stdout(&o).trim(), "false");
    let o = recosc(&["lattice", "--g", "5", "--a", "2", "1", "--minima"]);
    assert!(stdout(&o).starts_with("lambda1 = sqrt(5)\nlambda2 = sqrt(5)\n"));
    let o = recosc(&["lattice", "--g", "5", "--a", "2", "1", "--basis"]);
    assert!(stdout(&o).contains("det = 5"));
    let o = recosc(&["lattice", "--g", "7", "--a", "1", "3", "--always-hit"]);
    assert_eq!(stdout(&o).trim(), "certified: small-g table");
    assert_eq!(recosc(&["lattice", "--g", "6", "--a", "2", "1", "--basis"]).status.code(), Some(2));
}

#[test]
fn simulate_tables() {
    let f = data("alternating.json");
    let o = recosc(&["simulate", f.to_str().unwrap(), "--terms", "20"]);
    assert!(stdout(&o).contains("sign_changes: 19\n"));
    let f = data("fibonacci.json");
    let o = recosc(&["simulate", f.to_str().unwrap(), "--terms", "30"]);
    assert!(stdout(&o).contains("sign_changes: 0\n") && stdout(&o).contains("first_positive: 1\n"));
    let f = data("zero.json");
    let o = recosc(&["simulate", f.to_str().unwrap(), "--terms", "8"]);
    assert!(stdout(&o).contains("all_zero: true"));
}
