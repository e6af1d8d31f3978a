use std::process::{Command, Output};

fn tetrasub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tetrasub"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = tetrasub(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn list_filters_by_geometry() {
    assert_eq!(stdout(&["list"]).lines().count(), 40);
    assert_eq!(
        stdout(&["list", "--geometry", "hyperbolic-noncompact"])
            .lines()
            .count(),
        23
    );
    assert_eq!(
        stdout(&["list", "--geometry", "spherical"]).lines().count(),
        5
    );
    let entries = json(&["list", "--format", "json", "--geometry", "euclidean"]);
    assert_eq!(entries.as_array().unwrap().len(), 3);
}

#[test]
fn enumerate_t10() {
    let text = stdout(&[
        "enumerate",
        "--id",
        "t10",
        "--group",
        "full",
        "--index",
        "2",
    ]);
    assert!(
        text.starts_with("t10 = [3,3,6,2,2,2] full group, index 2: 3 classes"),
        "{text}"
    );
    assert!(text.contains("stabilizer: P, Q, R, SRS"), "{text}");

    let doc = json(&[
        "enumerate",
        "--id",
        "t10",
        "--group",
        "kleinian",
        "--index",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(doc["symbol"], "3,3,6,2,2,2");
    assert_eq!(doc["group"], "kleinian");
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0]["image_type"], "S4");
    assert_eq!(classes[0]["labeled_orbit_size"], 24);
    assert!(!classes[0]["stabilizer_generators"]
        .as_array()
        .unwrap()
        .is_empty());

    let doc = json(&[
        "enumerate",
        "--symbol",
        "2,2,2,2,2,2",
        "--group",
        "full",
        "--index",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(doc["classes"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_reports_closed_indices() {
    let text = stdout(&["verify", "--id", "t10", "--group", "full", "--index", "4"]);
    assert_eq!(text.matches("closed(4)").count(), 2, "{text}");
    let text = stdout(&[
        "verify", "--id", "t10", "--group", "kleinian", "--index", "2",
    ]);
    assert_eq!(text.matches("closed(2)").count(), 1, "{text}");
    let text = stdout(&["verify", "--symbol", "4,4,4,2,2,4", "--index", "1"]);
    assert!(text.contains("closed(1)"), "{text}");
    let text = stdout(&["verify", "--id", "t10", "--index", "4", "--max-cosets", "2"]);
    assert_eq!(text.matches("inconclusive").count(), 2, "{text}");
}

#[test]
fn coloring_exports() {
    let doc = json(&[
        "coloring", "--id", "t10", "--group", "full", "--index", "2", "--class", "1",
    ]);
    assert_eq!(doc["coset_words"], serde_json::json!(["", "S"]));
    assert_eq!(doc["action"]["S"], "(12)");
    assert_eq!(doc["action"]["P"], "(1)");

    let csv = stdout(&[
        "coloring", "--id", "t10", "--group", "kleinian", "--index", "3", "--format", "csv",
    ]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("generator,color,image_color"));
    assert_eq!(lines.count(), 9);

    let doc = json(&["coloring", "--id", "t10", "--index", "1"]);
    assert_eq!(doc["index"], 1);
    assert_eq!(doc["coset_words"], serde_json::json!([""]));
}

#[test]
fn oracle_diff_agrees() {
    let text = stdout(&[
        "oracle-diff",
        "--id",
        "t19",
        "--group",
        "kleinian",
        "--index",
        "4",
    ]);
    assert!(text.contains("enumerator 31 classes"), "{text}");
    assert!(text.trim_end().ends_with("AGREE"), "{text}");
}

#[test]
fn table7_flags_published_mismatches_without_failing() {
    let text = stdout(&["table7", "--diff", "--jobs", "2"]);
    assert!(
        text.contains("PASS     t10 H2 computed 3 published 3"),
        "{text}"
    );
    assert!(
        text.contains("MISMATCH t32 H4 computed 6 published 86; oracle 6 agrees"),
        "{text}"
    );
    assert!(
        text.contains("internal consistency: enumerator and oracle agree"),
        "{text}"
    );
    let plain = stdout(&["table7"]);
    assert_eq!(plain.lines().count(), 34);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table7", "--diff"][..],
        &[
            "enumerate",
            "--id",
            "t32",
            "--index",
            "3",
            "--format",
            "json",
        ][..],
        &[
            "coloring", "--id", "t19", "--group", "kleinian", "--index", "4", "--class", "7",
            "--format", "csv",
        ][..],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
    assert_eq!(
        stdout(&["table7", "--jobs", "1"]),
        stdout(&["table7", "--jobs", "4"])
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["enumerate", "--index", "2"][..],
        &["enumerate", "--id", "t99", "--index", "2"][..],
        &["enumerate", "--symbol", "3,3,1,2,2,2", "--index", "2"][..],
        &["enumerate", "--symbol", "3,3,6", "--index", "2"][..],
        &["enumerate", "--id", "t10", "--index", "0"][..],
        &[
            "enumerate",
            "--id",
            "t10",
            "--group",
            "other",
            "--index",
            "2",
        ][..],
        &["coloring", "--id", "t10", "--index", "2", "--class", "4"][..],
        &["list", "--geometry", "flat"][..],
    ] {
        let out = tetrasub(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn large_index_warns() {
    let out = tetrasub(&["enumerate", "--id", "t10", "--index", "5"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}
