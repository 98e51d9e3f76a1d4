use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grasscat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn subset_queries() {
    assert_eq!(
        json(&["--n", "6", "ws", "135", "246"])["weakly_separated"],
        false
    );
    assert_eq!(
        json(&["--n", "8", "ws", "1,2,4", "1,2,5"])["weakly_separated"],
        true
    );
    let ext = json(&["--n", "6", "ext", "236", "124"]);
    assert_eq!(ext["vanishes"], false);
    assert_eq!(ext["dim"], 1);
    let syz = json(&["--n", "6", "syzygy", "236"]);
    assert_eq!(syz["syzygy"]["layers"], serde_json::json!([[1, 2, 4]]));
}

#[test]
fn weights_and_roots() {
    let c = json(&["--n", "8", "profile-class", "2568|1347"]);
    assert_eq!(c["q"], 0);
    assert_eq!(c["delta"], 2);
    assert_eq!(
        json(&["--k", "3", "--n", "8", "roots", "-d", "3"])["count"],
        8
    );
    assert_eq!(json(&["--k", "3", "qform", "1,-1,0,0,0,0"])["q"], 2);
}

#[test]
fn enumerate_census() {
    let e = json(&["--k", "3", "--n", "6", "enumerate"]);
    assert_eq!(e["census"]["total"], 22);
    assert_eq!(e["census"]["degrees"]["2"]["count"], 2);
    assert_eq!(e["census"]["degrees"]["2"]["weights"]["1,1,1,1,1,1"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["--k", "3", "--n", "6", "--budget", "5", "enumerate"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["--k", "3", "--n", "9", "enumerate"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["--n", "6", "ws", "135"]).status.code(), Some(2));
    assert_eq!(
        run(&["--n", "6", "ws", "135", "2467"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["check", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["check", "gr25"]).status.code(), Some(0));
}

#[test]
fn dot_export() {
    let out = run(&["export-dot", "gr25"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph {"));
    assert_eq!(text.matches("[label=").count(), 10);
    assert_eq!(text.matches(" -> ").count(), 18);
    let out = run(&["--k", "2", "--n", "5", "export-dot", "enumerate"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("[label=").count(), 10);
}
