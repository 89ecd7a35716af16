use std::path::Path;
use std::process::{Command, Output};

use nbhd::cli::{exit_code, EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION_FAILED};
use nbhd::ErrorKind;

fn nbhd(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nbhd"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn nbhd")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn construct_then_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(
        nbhd(&["construct", "cycle", "--n", "5", "-o", "c5.col"], d)
            .status
            .code(),
        Some(EXIT_OK)
    );
    let text = std::fs::read_to_string(d.join("c5.col")).unwrap();
    assert!(text.contains("p edge 5 5"));
    let g = nbhd::graph::dimacs::read_graph(d.join("c5.col")).unwrap();
    assert_eq!((g.n(), g.edge_count()), (5, 5));

    let out = nbhd(&["--format", "json", "chromatic", "c5.col"], d);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["chi"], 3);

    let out = nbhd(&["clique", "c5.col"], d);
    assert!(stdout(&out).starts_with("omega = 2"));

    assert_eq!(
        nbhd(&["ncomplex", "c5.col", "-o", "n.txt"], d)
            .status
            .code(),
        Some(EXIT_OK)
    );
    let out = nbhd(&["homology", "--complex", "n.txt", "--max-dim", "2"], d);
    assert_eq!(
        stdout(&out).lines().collect::<Vec<_>>(),
        ["H~0 = 0", "H~1 = Z", "H~2 = 0"]
    );
}

#[test]
fn bounds_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    nbhd(&["construct", "complete", "--p", "4", "-o", "k4.col"], d);
    let out = nbhd(&["--format", "json", "bounds", "k4.col"], d);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in [
        "case",
        "params",
        "graph_stats",
        "chi",
        "omega",
        "lovasz",
        "homology",
        "witnesses",
        "failures",
        "pass",
        "wall_time_ms",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["case"], "bounds/k4");
    assert_eq!(v["chi"], 4);
    assert_eq!(v["lovasz"]["certified"], false);
    assert!(v["wall_time_ms"].is_null());
    let flags: Vec<&str> = v["lovasz"]["flags"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f.as_str().unwrap())
        .collect();
    assert!(flags.contains(&"no-conn-zero-certificate"));
}

#[test]
fn verify_commands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    nbhd(&["construct", "complete", "--p", "3", "-o", "k3.col"], d);
    nbhd(&["construct", "cycle", "--n", "7", "-o", "c7.col"], d);
    let out = nbhd(
        &[
            "verify", "theorem2", "--h", "k3.col", "--k", "c7.col", "--y", "3", "--json", "t.json",
        ],
        d,
    );
    assert_eq!(out.status.code(), Some(EXIT_OK), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "PASS theorem2/k3-c7/x0-y3");
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.join("t.json")).unwrap()).unwrap();
    assert_eq!(v["wedge"].as_array().unwrap().len(), 3);
    assert_eq!(v["witnesses"]["bridge"]["ends"], serde_json::json!([0, 6]));

    let out = nbhd(
        &[
            "verify",
            "corollary",
            "--l",
            "1",
            "--m",
            "2",
            "--p",
            "2",
            "--q",
            "3",
        ],
        d,
    );
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(stdout(&out).trim(), "PASS corollary/l1-m2-p2-q3");
}

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = nbhd(&["no-such-command"], d);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&out).starts_with("error:usage:"));

    let out = nbhd(&["chromatic", "missing.col"], d);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&out).starts_with("error:io:"));

    std::fs::write(d.join("bad.col"), "p edge 2 1\ne 1 3\n").unwrap();
    let out = nbhd(&["chromatic", "bad.col"], d);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&out).starts_with("error:parse:"));

    let out = nbhd(
        &[
            "verify",
            "corollary",
            "--l",
            "1",
            "--m",
            "1",
            "--p",
            "2",
            "--q",
            "2",
        ],
        d,
    );
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&out).starts_with("error:parameter:"));

    nbhd(&["construct", "cycle", "--n", "6", "-o", "c6.col"], d);
    nbhd(&["construct", "complete", "--p", "3", "-o", "k3.col"], d);
    let out = nbhd(&["verify", "theorem2", "--h", "c6.col", "--k", "k3.col"], d);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&out).starts_with("error:precondition:"));

    nbhd(&["construct", "complete", "--p", "6", "-o", "k6.col"], d);
    let out = nbhd(&["--limit", "10", "bounds", "k6.col"], d);
    assert_eq!(out.status.code(), Some(EXIT_BUDGET));
    assert!(stderr(&out).starts_with("error:budget:"));

    assert_eq!(exit_code(ErrorKind::Verification), EXIT_VERIFICATION_FAILED);
}
