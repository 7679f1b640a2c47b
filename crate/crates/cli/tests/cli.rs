use std::process::{Command, Output};

fn peisert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peisert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn report_17() {
    let out = peisert(&["report", "--p", "17", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["m5"], serde_json::json!([10, 0]));
    assert_eq!(doc["k4"]["formula"], 17);
    assert_eq!(doc["k4"]["brute"], 17);
    assert_eq!(doc["generator"], 3);
}

#[test]
fn report_key_order() {
    let out = peisert(&["report", "--p", "41", "--skip-brute-k4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let keys = [
        "q",
        "p",
        "alpha",
        "generator",
        "rho",
        "xi",
        "m3",
        "m5",
        "k3",
        "k4",
        "timings_ms",
    ];
    let positions: Vec<usize> = keys
        .iter()
        .map(|k| text.find(&format!("\"{k}\":")).expect("key present"))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
    assert!(json(&out)["k4"]["brute"].is_null());
}

#[test]
fn report_89_rho() {
    let out = peisert(&["report", "--p", "89", "--skip-brute-k4"]);
    assert_eq!(json(&out)["rho"], serde_json::json!([-5, 8]));
}

#[test]
fn report_rejects_bad_prime() {
    for p in ["15", "13"] {
        let out = peisert(&["report", "--p", p, "--alpha", "1"]);
        assert_eq!(out.status.code(), Some(2));
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(err.contains("p must be a prime ≡ 1 (mod 8)"), "{err}");
    }
}

#[test]
fn table1_all_rows_pass() {
    let out = peisert(&["table1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("q=")).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows
        .iter()
        .any(|r| r.starts_with("q=97") && r.contains("M3=90-40i PASS")));
    assert!(rows
        .iter()
        .any(|r| r.starts_with("q=289") && r.contains("k4=1419857 PASS")));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_suites_pass_at_17() {
    for suite in [
        "binomials",
        "lemma51",
        "lemma61",
        "lemma62",
        "lemma63",
        "transforms",
        "orbits",
        "graph",
    ] {
        let out = peisert(&["verify", "--suite", suite, "--p", "17"]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stdout(&out));
        let text = stdout(&out);
        assert!(text.lines().all(|l| !l.starts_with("FAIL")), "{text}");
    }
}

#[test]
fn verify_transforms_and_orbits_detail() {
    let text = stdout(&peisert(&["verify", "--suite", "transforms", "--p", "17"]));
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS f")).count(), 7);
    let text = stdout(&peisert(&["verify", "--suite", "orbits", "--p", "17"]));
    assert!(text.contains("PASS group order"));
    assert!(text.contains("PASS orbit-value constancy"));
}

#[test]
fn verify_unknown_suite() {
    let out = peisert(&["verify", "--suite", "lemma99", "--p", "17"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_dimacs_to_file() {
    let path = std::env::temp_dir().join(format!("peisert-cli-{}.dimacs", std::process::id()));
    let out = peisert(&[
        "export",
        "--p",
        "17",
        "--format",
        "dimacs",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("p edge 17 68\n"));
    assert_eq!(text.lines().count(), 69);
    assert!(String::from_utf8(out.stderr).unwrap().contains("68 edges"));
}

#[test]
fn export_doubled_edgelist_to_stdout() {
    let out = peisert(&["export", "--p", "17", "--double", "--format", "edgelist"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 136);
    let pairs: Vec<(u64, u64)> = text
        .lines()
        .map(|l| {
            let mut it = l.split(' ').map(|s| s.parse::<u64>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    assert!(pairs.iter().all(|(u, v)| u < v));
    assert!(pairs.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn export_unknown_format() {
    let out = peisert(&["export", "--p", "17", "--format", "graphml"]);
    assert_eq!(out.status.code(), Some(2));
}
