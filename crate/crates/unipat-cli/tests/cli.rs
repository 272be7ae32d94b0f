use std::process::{Command, Output};

use serde_json::Value;

fn unipat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unipat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = unipat(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn g2_midafi_table() {
    let out = stdout(&["midafi", "--type", "G2"]);
    let rows: Vec<Vec<&str>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').collect())
        .collect();
    let pairs: Vec<(&str, &str)> = rows.iter().map(|r| (r[5], r[6])).collect();
    assert_eq!(
        pairs,
        [
            ("0", "0"),
            ("0", "0"),
            ("0", "1"),
            ("1", "1"),
            ("2", "1"),
            ("1", "2")
        ]
    );
    assert!(rows.iter().all(|r| r[4] == "true"));
}

#[test]
fn f4_antichains_by_size() {
    assert_eq!(
        stdout(&["antichains", "--type", "F4", "--by-size"]),
        "k,count\n0,1\n1,24\n2,55\n3,24\n4,1\n"
    );
    let total = stdout(&["antichains", "--type", "E8", "--total"]);
    assert!(total.trim_end().ends_with("25080"), "{total}");
}

#[test]
fn a4_kernel_by_coordinates() {
    let by_coords = json(&["kernel", "--type", "A", "--rank", "4", "--root", "e1-e3"]);
    let by_index = json(&["kernel", "--type", "A4", "--root", "5"]);
    assert_eq!(by_coords, by_index);
    assert_eq!(by_coords["n"], serde_json::json!([8, 10]));
    assert_eq!(by_coords["w"], serde_json::json!([1, 2, 5]));
    assert_eq!(by_coords["k"].as_array().unwrap().len(), 7);
}

#[test]
fn json_carries_schema_version() {
    let v = json(&["rootsys", "--type", "G2"]);
    assert_eq!(v["schema"], 1);
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 6);
    assert_eq!(roots[5]["coords2x"], serde_json::json!([-2, -2, 4]));
}

#[test]
fn e8_alpha_115_report() {
    let v = json(&["arms", "--type", "E8", "--root", "e2+e8"]);
    let a = &v["arms"][0];
    assert_eq!(a["root_index"], 115);
    assert_eq!(a["arm"].as_array().unwrap().len(), 23);
    assert_eq!(a["kernel"], serde_json::json!([116, 117, 118, 119, 120]));
    assert_eq!(a["normal_flag"], false);
    let extra = a["enlarged_leg"].as_array().unwrap().len() - a["leg"].as_array().unwrap().len();
    assert_eq!(extra, 7);
    assert!(v["search"]["assignments"].as_u64().unwrap() <= 128);
}

#[test]
fn f4_subhooks_in_arms_table() {
    let out = stdout(&["arms", "--type", "F4"]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[20].starts_with("20,e1-e4,"));
    assert!(lines[20].ends_with(",false,1,15:1 13 15"), "{}", lines[20]);
    assert!(lines[22].starts_with("22,e1+e4,"));
    assert!(
        lines[22].ends_with(",false,2,17:6 12 17;20:4 17 20"),
        "{}",
        lines[22]
    );
}

#[test]
fn oracle_checks_pass() {
    assert_eq!(
        stdout(&["oracle", "--rank", "2", "--q", "3"]),
        "rank,q,order,classes\n2,3,27,11\n"
    );
    let out = stdout(&["oracle", "--rank", "2", "--q", "2", "--verify-all"]);
    assert!(out.lines().skip(1).all(|l| !l.contains("FAIL")), "{out}");
}

#[test]
fn verify_suite_passes() {
    let out = stdout(&["verify"]);
    assert!(out.lines().count() > 100);
    assert!(out.lines().skip(1).all(|l| l.starts_with("PASS,")), "{out}");
}

#[test]
fn midafi_output_is_deterministic() {
    let a = stdout(&["midafi", "--type", "E8"]);
    let b = stdout(&["--jobs", "1", "midafi", "--type", "E8"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 121);
}

#[test]
fn writes_to_a_file() {
    let path = std::env::temp_dir().join(format!("unipat-cli-test-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = unipat(&["--out", p, "antichains", "--type", "G2", "--total"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.trim_end().ends_with('8'));
}

#[test]
fn exit_codes() {
    for args in [
        &["kernel", "--type", "A", "--rank", "4", "--root", "nope"][..],
        &["rootsys", "--type", "H3"],
        &["rootsys", "--type", "A", "--rank", "0"],
        &["oracle", "--rank", "2", "--q", "4"],
        &["--format", "xml", "rootsys", "--type", "G2"],
    ] {
        assert_eq!(unipat(args).status.code(), Some(2), "{args:?}");
    }
}
