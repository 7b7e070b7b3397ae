use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_greedy-mis"))
}

fn call(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn ratio(report: &Value) -> (i64, i64) {
    (report["ratio"]["num"].as_i64().unwrap(), report["ratio"]["den"].as_i64().unwrap())
}

fn first_line(path: &Path) -> String {
    fs::read_to_string(path).unwrap().lines().next().unwrap().to_string()
}

#[test]
fn generate_sizes_and_default_directory() {
    let tmp = tempfile::tempdir().unwrap();
    let out = call(tmp.path(), &["generate", "interval-tight", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(first_line(&tmp.path().join("interval-tight-3/graph.txt")), "21 24");
    for file in ["intervals.json", "script.txt", "certificate.txt", "meta.json"] {
        assert!(tmp.path().join("interval-tight-3").join(file).exists(), "{file}");
    }
    assert_eq!(code(&call(tmp.path(), &["generate", "chordal-tight", "2", "--out", "c"])), 0);
    assert_eq!(first_line(&tmp.path().join("c/graph.txt")).split(' ').next(), Some("9"));
    assert_eq!(code(&call(tmp.path(), &["generate", "two-track", "4", "--out", "t"])), 0);
    assert!(tmp.path().join("t/track1.json").exists() && tmp.path().join("t/track2.json").exists());
}

#[test]
fn generate_is_byte_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    for dir in ["a", "b"] {
        let out = call(tmp.path(), &["generate", "random-interval", "20", "--seed", "7", "--out", dir]);
        assert_eq!(code(&out), 0);
    }
    for file in ["graph.txt", "intervals.json", "meta.json"] {
        let a = fs::read(tmp.path().join("a").join(file)).unwrap();
        let b = fs::read(tmp.path().join("b").join(file)).unwrap();
        assert_eq!(a, b, "{file}");
    }
    call(tmp.path(), &["generate", "random-interval", "--n", "20", "--seed", "8", "--out", "c"]);
    assert_ne!(fs::read(tmp.path().join("a/graph.txt")).unwrap(), fs::read(tmp.path().join("c/graph.txt")).unwrap());
}

#[test]
fn run_reports_tight_ratios() {
    let tmp = tempfile::tempdir().unwrap();
    call(tmp.path(), &["generate", "interval-tight", "3", "--out", "it"]);
    call(tmp.path(), &["generate", "chordal-tight", "5", "--out", "ct"]);
    call(tmp.path(), &["generate", "permutation", "3", "--out", "pm"]);

    let out = call(tmp.path(), &["run", "it", "--policy", "scripted"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(ratio(&r), (7, 10));
    assert_eq!(r["ratio"]["decimal"], "0.700000");
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["ledger"]["counts"], serde_json::json!([0, 4, 3]));
    assert_eq!(r["reference"], "certificate");
    assert_eq!(r["greedy_sizes"]["adversarial"], 7);
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    let out = call(tmp.path(), &["run", "ct", "--policy", "scripted"]);
    assert_eq!(code(&out), 0);
    assert_eq!(ratio(&json(&out)), (3, 5));

    let out = call(tmp.path(), &["run", "pm", "--policy", "adversarial"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(ratio(&r), (2, 3));
    assert_eq!(r["chordal"], false);
}

#[test]
fn run_report_is_reproducible() {
    let tmp = tempfile::tempdir().unwrap();
    call(tmp.path(), &["generate", "random-chordal", "12", "--seed", "5", "--out", "g"]);
    let a = call(tmp.path(), &["run", "g", "--policy", "seeded_random", "--seed", "9"]);
    let b = call(tmp.path(), &["run", "g", "--policy", "seeded-random", "--seed", "9", "--out", "r.json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(code(&b), 0);
    assert_eq!(a.stdout, fs::read(tmp.path().join("r.json")).unwrap());
}

#[test]
fn run_accepts_a_bare_edge_list() {
    let tmp = tempfile::tempdir().unwrap();
    fs::write(tmp.path().join("c5.txt"), "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let out = call(tmp.path(), &["run", "c5.txt", "--policy", "adversarial"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["optimum"]["size"], 2);
    assert_eq!(r["chordal"], false);
    let names: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"degree_two_optimal"));
    assert!(!names.contains(&"disconnection"));
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    call(tmp.path(), &["generate", "permutation", "4", "--out", "pm"]);
    assert_eq!(code(&call(tmp.path(), &["run", "pm", "--policy", "adversarial", "--limit", "5"])), 3);
    assert_eq!(code(&call(tmp.path(), &["run", "pm", "--exact-limit", "5"])), 3);
    assert_eq!(code(&call(tmp.path(), &["generate", "no-such-family", "3"])), 2);
    assert_eq!(code(&call(tmp.path(), &["generate", "permutation", "2"])), 2);
    assert_eq!(code(&call(tmp.path(), &["run", "missing"])), 2);
    assert_eq!(code(&call(tmp.path(), &["frobnicate"])), 2);

    fs::write(tmp.path().join("p3.txt"), "3 2\n0 1\n1 2\n").unwrap();
    assert_eq!(code(&call(tmp.path(), &["run", "p3.txt", "--policy", "scripted"])), 2);

    // A wrong expectation in the metadata is a failed check.
    let meta_path = tmp.path().join("pm/meta.json");
    let meta = fs::read_to_string(&meta_path).unwrap().replace("\"expected_greedy\": 2", "\"expected_greedy\": 3");
    fs::write(&meta_path, meta).unwrap();
    let out = call(tmp.path(), &["run", "pm", "--policy", "scripted"]);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    let failed: Vec<&str> = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["expected_greedy"]);
}

#[test]
fn solve_reports_optimum_and_clique_tree() {
    let tmp = tempfile::tempdir().unwrap();
    call(tmp.path(), &["generate", "interval-tight", "1", "--out", "it"]);
    let out = call(tmp.path(), &["solve", "it"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["optimum"]["size"], 4);
    assert_eq!(r["optimum"]["method"], "simplicial");
    assert_eq!(r["chordal"], true);
    assert_eq!(r["clique_tree"]["bags"].as_array().unwrap().len(), 6);
    assert_eq!(r["leafage"], 2);

    call(tmp.path(), &["generate", "two-track", "3", "--out", "tt"]);
    let r = json(&call(tmp.path(), &["solve", "tt"]));
    assert_eq!(r["optimum"]["size"], 3);
    assert_eq!(r["optimum"]["method"], "branch_and_bound");
    assert_eq!(r["clique_tree"], Value::Null);
}

#[test]
fn verify_suites_pass() {
    let tmp = tempfile::tempdir().unwrap();
    for args in [
        vec!["verify", "tight-families", "--kmax", "10"],
        vec!["verify", "ledger-fuzz", "--n", "14", "--trials", "500", "--seed", "1"],
        vec!["verify", "oracle", "--n", "16"],
        vec!["verify", "all", "--trials", "60", "--out", "all.json"],
    ] {
        let out = call(tmp.path(), &args);
        assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let report: Value = serde_json::from_str(&fs::read_to_string(tmp.path().join("all.json")).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["checks"].as_array().unwrap().len(), 11);
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

#[test]
fn sweep_tables() {
    let tmp = tempfile::tempdir().unwrap();
    let out = call(tmp.path(), &["sweep", "interval-tight", "--kmax", "20", "--out", "it.csv"]);
    assert_eq!(code(&out), 0);
    let rows = csv_rows(&fs::read_to_string(tmp.path().join("it.csv")).unwrap());
    assert_eq!(rows[0].join(","), "k,greedy,opt,ratio_num,ratio_den,ratio_decimal,bound,max_degree,degree_bound");
    assert_eq!(rows.len(), 21);
    let mut previous = f64::INFINITY;
    for (k, row) in (1..=20i64).zip(&rows[1..]) {
        assert_eq!(row[0], k.to_string());
        let (num, den) = (row[3].parse::<i64>().unwrap(), row[4].parse::<i64>().unwrap());
        assert_eq!(num * (3 * k + 1), den * (2 * k + 1));
        let value = num as f64 / den as f64;
        assert!(value < previous && value > 2.0 / 3.0);
        previous = value;
    }

    let out = call(tmp.path(), &["sweep", "chordal-tight", "--kmax", "12"]);
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(rows.len(), 12);
    for (k, row) in (2..=12i64).zip(&rows[1..]) {
        let (num, den) = (row[3].parse::<i64>().unwrap(), row[4].parse::<i64>().unwrap());
        assert_eq!(num * 2 * k, den * (k + 1));
    }

    let out = call(tmp.path(), &["sweep", "permutation", "--kmin", "3", "--kmax", "10", "--policy", "adversarial"]);
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    for (k, row) in (3..=10).zip(&rows[1..]) {
        assert_eq!(row[7], (2 * k - 2).to_string());
        assert_eq!(format!("{}/{}", row[3], row[4]), row[8], "ratio 2/k equals 4/(max degree + 2)");
    }

    let a =
        call(tmp.path(), &["sweep", "random-interval", "--kmin", "4", "--kmax", "9", "--trials", "4", "--seed", "2"]);
    let b =
        call(tmp.path(), &["sweep", "random-interval", "--kmin", "4", "--kmax", "9", "--trials", "4", "--seed", "2"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&call(tmp.path(), &["sweep", "interval-tight", "--kmin", "5", "--kmax", "2"])), 2);
}
