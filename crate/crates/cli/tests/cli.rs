use std::fs;
use std::process::{Command, Output};

fn gpcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpcover")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn beta_reports_certificate() {
    let o = gpcover(&["beta", "16", "5"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["beta"], 16);
    assert_eq!(v["certificate"]["size"], 16);
}

#[test]
fn invalid_parameters_fail() {
    let o = gpcover(&["beta", "6", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cover_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    for method in ["solver", "construction", "auto"] {
        let o = gpcover(&["cover", "9", "3", "--method", method]);
        assert!(o.status.success(), "{method}");
        let path = dir.path().join(format!("{method}.json"));
        fs::write(&path, &o.stdout).unwrap();
        let v = gpcover(&["verify-cover", "9", "3", "--cert", path.to_str().unwrap()]);
        assert!(v.status.success(), "{method}: {}", stdout(&v));
    }
}

#[test]
fn verify_cover_rejects_bad_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // v1..v5 alone leaves every U-edge uncovered
    fs::write(&path, r#"{"n":5,"k":2,"selected_u":[],"selected_v":[1,2,3,4,5],"size":5}"#).unwrap();
    let o = gpcover(&["verify-cover", "5", "2", "--cert", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));

    // a valid cover that is not minimum
    let all_u = (1..=5).map(|i| i.to_string()).collect::<Vec<_>>().join(",");
    fs::write(
        &path,
        format!(r#"{{"n":5,"k":2,"selected_u":[{all_u}],"selected_v":[1,2,3,4,5],"size":10}}"#),
    )
    .unwrap();
    let plain = gpcover(&["verify-cover", "5", "2", "--cert", path.to_str().unwrap()]);
    assert!(plain.status.success());
    let strict = gpcover(&["verify-cover", "5", "2", "--cert", path.to_str().unwrap(), "--minimum"]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn bounds_csv() {
    let o = gpcover(&["bounds", "5", "2", "--csv"]);
    assert_eq!(stdout(&o), "n,k,lower,exact,min_upper,conjecture\n5,2,6,6,6,6\n");
}

#[test]
fn sweep_resumes_from_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let cache = cache.to_str().unwrap();
    let first = gpcover(&["sweep", "--max-n", "10", "--resume", cache, "--jobs", "2"]);
    assert!(first.status.success(), "{}", stdout(&first));
    assert_eq!(fs::read_to_string(cache).unwrap().lines().count(), 20);
    let second = gpcover(&["sweep", "--max-n", "10", "--resume", cache, "--sequential"]);
    assert!(second.status.success());
    assert_eq!(fs::read_to_string(cache).unwrap().lines().count(), 20);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    let o = gpcover(&["sweep", "--max-n", "6", "--csv", csv.to_str().unwrap()]);
    assert!(o.status.success());
    let text = fs::read_to_string(csv).unwrap();
    assert!(text.lines().any(|l| l == "5,2,6,6,6,6,6,true"));
}

#[test]
fn verify_theorems_passes() {
    let o = gpcover(&["verify-theorems", "--max-n", "7", "--samples", "20"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 6);
}

#[test]
fn export_formats() {
    let o = gpcover(&["export", "5", "2", "--format", "dimacs"]);
    assert!(stdout(&o).lines().any(|l| l == "p edge 10 15"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    assert!(gpcover(&["export", "7", "2", "--format", "json", "--out", out.to_str().unwrap()]).status.success());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 21);

    let cert = gpcover(&["export", "9", "3", "--format", "cert"]);
    let v: serde_json::Value = serde_json::from_slice(&cert.stdout).unwrap();
    assert_eq!(v["size"], 11);

    assert!(!gpcover(&["export", "5", "2", "--format", "graphml"]).status.success());
}
