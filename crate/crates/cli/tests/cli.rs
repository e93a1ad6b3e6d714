use std::fs;
use std::process::{Command, Output};

fn polycensus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycensus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn count_values() {
    let out = polycensus(&["count", "--n", "20", "--m", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "4746\n");
    assert_eq!(stdout(&polycensus(&["count", "--n", "20"])), "26452\n");
}

#[test]
fn count_below_three_is_a_usage_error() {
    let out = polycensus(&["count", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("at least 3"), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
}

#[test]
fn count_json_report() {
    let out = polycensus(&[
        "count",
        "--n",
        "12",
        "--m",
        "5",
        "--method",
        "closed,oracle",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["result"], "29");
    assert_eq!(json["agreement"], true);
    assert_eq!(json["query"]["m"], 5);
}

#[test]
fn oracle_method_above_bound() {
    let out = polycensus(&["count", "--n", "30", "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_bounds() {
    let out = polycensus(&["table", "--max-n", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "m\\n,3\n3,1\np_n,1\n");
    assert_eq!(
        polycensus(&["table", "--max-n", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn bfile_examples() {
    let out = polycensus(&["bfile", "triangles-nearest", "--from", "3", "--to", "12"]);
    assert!(stdout(&out).lines().any(|l| l == "12 3"));
    let out = polycensus(&["bfile", "pmn", "--m", "4", "--to", "8"]);
    assert_eq!(stdout(&out), "4 1\n5 1\n6 2\n7 3\n8 5\n");
    let out = polycensus(&["bfile", "pmn", "--to", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bfile_is_byte_stable_across_workers() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for jobs in ["1", "2", "7"] {
        let path = dir.path().join(format!("b{jobs}.txt"));
        let out = polycensus(&[
            "bfile",
            "pn-cyclic",
            "--to",
            "400",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        assert!(out.stdout.is_empty());
        files.push(fs::read(path).unwrap());
    }
    assert!(files.windows(2).all(|w| w[0] == w[1]));
    let text = String::from_utf8(files.pop().unwrap()).unwrap();
    assert_eq!(text.lines().count(), 398);
    assert!(text.ends_with('\n') && !text.contains(" \n"));
}

#[test]
fn verify_exit_codes() {
    let out = polycensus(&["verify", "--max-n", "12"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(
        polycensus(&["verify", "--max-n", "30"]).status.code(),
        Some(2)
    );
    let out = polycensus(&["verify", "--max-n", "10", "--inject-fault", "9,4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("n = 9, m = 4"), "{}", stdout(&out));
}

#[test]
fn verify_json_names_failing_pair() {
    let out = polycensus(&[
        "verify",
        "--max-n",
        "8",
        "--inject-fault",
        "8,5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["passed"], false);
    let failing: Vec<_> = json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["agree"] == false)
        .collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(
        (failing[0]["n"].as_u64(), failing[0]["m"].as_u64()),
        (Some(8), Some(5))
    );
}

#[test]
fn bench_runs_and_rejects_small_n() {
    let out = polycensus(&["bench", "--n", "100"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("p(100) computed in"));
    assert_eq!(polycensus(&["bench", "--n", "1"]).status.code(), Some(2));
}
