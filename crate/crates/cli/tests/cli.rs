use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn np1cc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_np1cc")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("np1cc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const GRID: &[(&str, &[usize])] = &[
    ("glue-a", &[2, 3, 4]),
    ("glue-b", &[2, 3, 4]),
    ("glue-c", &[3, 4]),
    ("union-a", &[2, 3, 4]),
    ("linear-a", &[1, 2, 3, 4]),
    ("linear-b", &[1, 2, 3, 4]),
    ("balanced", &[3, 4]),
];

#[test]
fn construct_then_verify_round_trip() {
    for (recipe, rs) in GRID {
        for r in *rs {
            let path = scratch(&format!("{recipe}-{r}.code"));
            let out = np1cc(&["construct", "--recipe", recipe, "--r", &r.to_string(), "--out", s(&path)]);
            assert_eq!(out.status.code(), Some(0), "construct {recipe} r={r}");
            let out = np1cc(&["verify", s(&path)]);
            assert_eq!(out.status.code(), Some(0), "verify {recipe} r={r}: {}", String::from_utf8_lossy(&out.stdout));
            let rep = json(&out);
            assert_eq!(rep["schema_version"], 1);
            assert_eq!(rep["results"]["n"], 1u64 << r);
            assert_eq!(rep["results"]["is_np1cc"], true);
            assert!(rep["results"]["violations"].as_array().unwrap().is_empty());
        }
    }
}

#[test]
fn verify_reports_type_and_k() {
    let path = scratch("glue-a-4.code");
    np1cc(&["construct", "--recipe", "glue-a", "--r", "4", "--out", s(&path)]);
    let rep = json(&np1cc(&["verify", s(&path)]));
    assert_eq!(rep["results"]["type"], "A");
    assert_eq!(rep["results"]["k"], 2048);
    assert_eq!(rep["results"]["M"], 4096);
    assert_eq!(rep["results"]["pairs"].as_array().unwrap().len(), 2048);
}

#[test]
fn mutated_code_fails_verification() {
    let path = scratch("mutant-src.code");
    np1cc(&["construct", "--recipe", "glue-a", "--r", "3", "--out", s(&path)]);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_owned).collect();
    // first codeword line: flip its leading bit
    let idx = lines.iter().position(|l| !l.starts_with('#')).unwrap();
    let flipped: String = lines[idx]
        .chars()
        .enumerate()
        .map(|(i, c)| if i == 0 { if c == '0' { '1' } else { '0' } } else { c })
        .collect();
    lines[idx] = flipped;
    let bad = scratch("mutant.code");
    std::fs::write(&bad, lines.join("\n") + "\n").unwrap();
    let out = np1cc(&["verify", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let rep = json(&out);
    assert_eq!(rep["results"]["is_np1cc"], false);
    assert!(!rep["results"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn van_wee_is_tight_at_length_eight() {
    let out = np1cc(&["bounds", "--n", "8", "--R", "1", "--M", "32"]);
    assert_eq!(out.status.code(), Some(0));
    let rep = json(&out);
    let vw = rep["results"]["bounds"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["name"] == "van_wee")
        .unwrap()
        .clone();
    assert_eq!(vw["value"], "32");
    assert_eq!(vw["satisfied"], true);
    assert_eq!(vw["tight"], true);
}

#[test]
fn census_report_is_stable_across_threads() {
    let a = scratch("census-1.json");
    let b = scratch("census-4.json");
    let one = np1cc(&["--threads", "1", "census", "--n", "4", "--out", s(&a)]);
    let four = np1cc(&["--threads", "4", "census", "--n", "4", "--out", s(&b)]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(json(&one)["results"], json(&four)["results"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let rep = json(&one);
    assert_eq!(rep["results"]["total"], 40);
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(np1cc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(np1cc(&["construct", "--recipe", "glue-a"]).status.code(), Some(2));
    assert_eq!(np1cc(&["verify", "/definitely/not/here.code"]).status.code(), Some(2));
    let out = scratch("never.code");
    assert_eq!(
        np1cc(&["construct", "--recipe", "no-such", "--r", "3", "--out", s(&out)]).status.code(),
        Some(2)
    );
    assert_eq!(np1cc(&["balanced", "--r", "5"]).status.code(), Some(2));
}

#[test]
fn spectrum_and_extend_scan() {
    let path = scratch("glue-c-4.code");
    np1cc(&["construct", "--recipe", "glue-c", "--r", "4", "--out", s(&path)]);
    let rep = json(&np1cc(&["spectrum", s(&path)]));
    assert_eq!(rep["results"]["A"][0], 1);
    assert_eq!(rep["results"]["B"][0], "1");
    assert_eq!(rep["results"]["table1_case"]["case"], "codeword_with_neighbour");

    let text = np1cc(&["--format", "text", "spectrum", s(&path), "--translate", "1000000000000000"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&text.stdout).contains("A'_i"));

    let scan = json(&np1cc(&["extend-scan", s(&path)]));
    let tags = scan["results"]["profile"].as_array().unwrap();
    assert_eq!(tags.len(), 17);
    let total = scan["results"]["nA"].as_u64().unwrap()
        + scan["results"]["nB"].as_u64().unwrap()
        + scan["results"]["nC"].as_u64().unwrap();
    assert_eq!(total, 17);
    assert_eq!(scan["results"]["class_key"].as_str().unwrap().len(), 64);
}

#[test]
fn balanced_sequences_file() {
    let path = scratch("seq.txt");
    let out = np1cc(&["balanced", "--r", "4", "--out", s(&path)]);
    assert_eq!(out.status.code(), Some(0));
    let rep = json(&out);
    assert_eq!(rep["results"]["is_balanced"], true);
    assert_eq!(rep["results"]["M"], 4096);
    let lines: Vec<String> = std::fs::read_to_string(&path).unwrap().lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 128);
    assert!(lines.iter().all(|l| l.len() == 32));
}
