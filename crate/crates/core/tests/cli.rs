use std::path::Path;
use std::process::{Command, Output};

use kinterchange::fixtures::TABLE1;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kinterchange"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn table_matches_reference_in_paper_order() {
    let o = run(&["table", "--n", "4", "--k", "3", "--paper-order"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<(String, String)> = stdout(&o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            (f[1].to_string(), f[2].to_string())
        })
        .collect();
    let want: Vec<(String, String)> = TABLE1.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    assert_eq!(rows, want);
}

#[test]
fn table_lex_order_json() {
    let o = run(&["table", "--n", "4", "--k", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 24);
    assert_eq!(rows[0]["permutation"], "1234");
    assert_eq!(rows[23]["permutation"], "4321");
    assert_eq!(rows[23]["value"], 3);
    assert_eq!(doc["meta"]["seed"], 0);
    assert_eq!(doc["meta"]["command"], "table");
}

#[test]
fn verify_paper_passes() {
    let o = run(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| l.starts_with("PASS ")).count() >= 7);
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_paper_with_corrupted_fixture_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fixture.json");
    let values: serde_json::Map<String, serde_json::Value> = TABLE1
        .iter()
        .map(|(k, v)| (k.to_string(), serde_json::json!(if *k == "4231" { 2 } else { *v })))
        .collect();
    let doc = serde_json::json!({"kind": "table", "n": 4, "values": values});
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = run(&["verify-paper", "--fixture", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let fails: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL ")).collect();
    assert_eq!(fails.len(), 1);
    assert!(fails[0].starts_with("FAIL table1"));
}

#[test]
fn invalid_k_is_a_usage_error() {
    let o = run(&["search", "--k", "7", "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error[InvalidK]"));
    assert!(stderr(&o).contains("--k"));
}

#[test]
fn unknown_flag_and_bad_permutation_are_usage_errors() {
    assert_eq!(run(&["table", "--bogus"]).status.code(), Some(2));
    let o = run(&["search", "--k", "2", "--start", "4412"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--start"));
    let o = run(&["landscape", "--mode", "sideways"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--mode"));
}

#[test]
fn infeasible_request_exits_one() {
    let o = run(&["table", "--n", "10", "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("error[CapExceeded]"));
}

#[test]
fn search_examples() {
    let o = run(&["search", "--k", "3", "--start", "4312", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let t = &doc["record"]["trajectories"][0];
    assert_eq!(t["final_point"], "1234");
    assert_eq!(t["forward"], 2);
    assert_eq!(doc["meta"]["config"]["schedule"]["fixed"]["k"], 3);

    let o = run(&["search", "--k", "2", "--start", "4312", "--format", "json"]);
    assert_eq!(json(&o)["record"]["outcome"]["status"], "local_optimum");

    let o = run(&[
        "search", "--kind", "FA", "--k", "2", "--start", "4312", "--format", "json",
    ]);
    assert_eq!(json(&o)["record"]["outcome"]["status"], "optimum");

    let o = run(&["search", "--k-min", "2", "--k-max", "4", "--start", "4312"]);
    assert!(stdout(&o).contains("outcome Optimum"));
}

#[test]
fn identical_runs_are_byte_identical() {
    let args = [
        "search",
        "--builtin",
        "random-table",
        "--n",
        "6",
        "--kind",
        "FA",
        "--k",
        "2",
        "--pivot",
        "random",
        "--starts",
        "6",
        "--seed",
        "17",
        "--format",
        "json",
        "--comparable",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = json(&a);
    assert_eq!(doc["meta"]["seed"], 17);
    assert_eq!(doc["record"]["started_at"], 0);
}

#[test]
fn every_subcommand_accepts_common_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 7] = [
        &["table"],
        &["landscape", "--k", "3"],
        &["search", "--k", "3"],
        &["probe"],
        &["plan"],
        &["verify-paper"],
        &["export-dot", "--k", "2"],
    ];
    for (i, case) in cases.iter().enumerate() {
        let out = dir.path().join(format!("out{i}"));
        let mut args: Vec<&str> = case.to_vec();
        let out_s = out.to_str().unwrap().to_string();
        args.extend(["--seed", "5", "--format", "json", "--out", &out_s]);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{case:?}: {}", stderr(&o));
        let written = std::fs::read_to_string(&out).unwrap();
        if case[0] == "export-dot" {
            assert!(written.starts_with("digraph"));
            assert_eq!(json(&o)["meta"]["seed"], 5);
        } else {
            let doc: serde_json::Value = serde_json::from_str(&written).unwrap();
            assert_eq!(doc["meta"]["seed"], 5, "{case:?}");
            assert_eq!(doc["meta"]["command"], case[0]);
        }
    }
}

#[test]
fn probe_selects_documented_strategies() {
    let doc = json(&run(&["probe", "--format", "json"]));
    assert_eq!(doc["strategy"]["kind"], "FA");
    assert_eq!(doc["strategy"]["schedule"]["adaptive"]["k_max"], 3);
    let doc = json(&run(&[
        "probe",
        "--builtin",
        "inversion",
        "--n",
        "5",
        "--format",
        "json",
    ]));
    assert_eq!(doc["strategy"]["kind"], "F");
    assert_eq!(doc["strategy"]["schedule"]["fixed"]["k"], 2);
}

#[test]
fn plan_persists_to_repository() {
    let dir = tempfile::tempdir().unwrap();
    let repo = dir.path().join("runs");
    let o = run(&["plan", "--repo", repo.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = json(&o);
    assert_eq!(doc["record"]["outcome"]["status"], "optimum");
    assert_eq!(doc["record"]["outcome"]["best_value"], 0);
    let files: Vec<_> = std::fs::read_dir(&repo)
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    assert!(files.iter().any(|f| f.to_string_lossy().starts_with("run-000000-")));
    assert!(Path::new(&repo.join("registry.json")).exists());
}

#[test]
fn unwritable_repository_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "x").unwrap();
    let repo = blocker.join("runs");
    let o = run(&["search", "--k", "3", "--repo", repo.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("error[IoError]"));
}

#[test]
fn search_config_file_and_step_log() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(
        &cfg,
        r#"{"kind":"FA","schedule":{"fixed":{"k":2}},"starts":{"explicit":["4312"]},"seed":3}"#,
    )
    .unwrap();
    let log = dir.path().join("steps.jsonl");
    let o = run(&[
        "search",
        "--config",
        cfg.to_str().unwrap(),
        "--log",
        log.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc = json(&o);
    assert_eq!(doc["meta"]["seed"], 3);
    let steps = doc["record"]["trajectories"][0]["steps"].as_u64().unwrap();
    let lines: Vec<serde_json::Value> = std::fs::read_to_string(&log)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len() as u64, steps);
    assert_eq!(lines.last().unwrap()["record"]["point"], "1234");
}

#[test]
fn objective_file_and_arity_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wc.json");
    std::fs::write(
        &path,
        r#"{"kind":"weighted_completion","jobs":[{"p":3,"w":1},{"p":1,"w":2},{"p":2,"w":2}]}"#,
    )
    .unwrap();
    let o = run(&[
        "landscape",
        "--objective",
        path.to_str().unwrap(),
        "--k",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json(&o)["report"]["property1"], true);
    let o = run(&["landscape", "--objective", path.to_str().unwrap(), "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error[ArityMismatch]"));
}

#[test]
fn export_dot_to_stdout() {
    let o = run(&["export-dot", "--k", "2", "--mode", "moves", "--numbering", "lex"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.contains("dir=none"));
    assert_eq!(dot.matches(" -- ").count() + dot.matches(" -> ").count(), 36);
}
