use std::process::{Command, Output};
use transvect_cli::run_report;

fn transvect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_transvect")).args(args).output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn no_arguments_prints_usage() {
    let o = transvect(&[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(transvect(&["orbits", "--bogus"]).status.code(), Some(2));
    assert_eq!(transvect(&["orbits", "--ring", "zmod:8", "--size", "4"]).status.code(), Some(2));
    assert_eq!(transvect(&["orbit-equality"]).status.code(), Some(2));
    assert_eq!(transvect(&["orbit-equality", "--case", "zmod:3"]).status.code(), Some(2));
}

#[test]
fn sampled_relations_pass() {
    let o = transvect(&["verify-relations", "--ring", "gf:5", "--n", "2", "--samples", "10", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ok"], true);
}

#[test]
fn printed_relations_alone_are_a_finding() {
    let o = transvect(&["verify-relations", "--ring", "gf:5", "--n", "2", "--form", "printed", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["ok"], false);
    let failing: Vec<String> = r["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["ok"] == false)
        .map(|o| o["name"].as_str().unwrap().to_string())
        .collect();
    assert!(failing.iter().all(|n| ["6", "7", "8", "9", "15"].iter().any(|id| n.contains(&format!("relation-{id}/")))));
}

#[test]
fn orbit_equality_report() {
    let o = transvect(&["orbit-equality", "--ring", "zmod:3", "--size", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["results"][0]["detail"]["equal"], true);
    assert_eq!(r["results"][0]["detail"]["universe-size"], 80);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("transvect-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("part.json");
    let o = transvect(&["orbits", "--ring", "zmod:9", "--size", "4", "--group", "esp-rel", "--ideal", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let r: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["results"][0]["detail"]["universe-size"], 81);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn reports_are_reproducible() {
    let argv = ["transvect", "kernel-test", "--ring", "zmod:9", "--size", "4", "--ideal", "3", "--samples", "50", "--seed", "3"];
    let a = run_report(argv).unwrap();
    let b = run_report(argv).unwrap();
    assert_eq!(a.canonical_json(), b.canonical_json());
    assert_eq!(a.input_hash, b.input_hash);
    let mut other = argv.to_vec();
    other[11] = "4";
    assert_ne!(run_report(other).unwrap().input_hash, a.input_hash);
    let mut threaded = argv.to_vec();
    threaded.extend(["--threads", "2"]);
    assert_eq!(run_report(threaded).unwrap().input_hash, a.input_hash);
}

#[test]
fn single_word_dilation() {
    let o = transvect(&["dilate", "--n", "3", "--vars", "a1,a2", "--word", "S:1,3:a1;S:5,1:a2*x1", "--target", "1,4"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["results"][0]["detail"]["certificate"], true);
}
