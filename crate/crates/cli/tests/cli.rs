use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn surgroup(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surgroup"))
        .current_dir(dir)
        .args(args)
        .env_remove("SURGROUP_WORKERS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn knot_reports_alexander() {
    let dir = tempfile::tempdir().unwrap();
    let o = surgroup(dir.path(), &["knot", "--braid", "1 1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("presentation: < x1, x2 |"));
    assert!(out.contains("alexander: t^2 - t + 1"));
    assert!(!out.contains("FAIL"));

    let o = surgroup(dir.path(), &["knot", "--builtin", "unknot"]);
    assert!(stdout(&o).contains("alexander: 1\n"));

    let o = surgroup(dir.path(), &["knot", "--builtin", "fig8", "--out", "k"]);
    assert!(stdout(&o).contains("alexander: t^2 - 3t + 1"));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("k/knot.json")).unwrap()).unwrap();
    assert_eq!(json["schema_version"], 1);
}

#[test]
fn knot_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = surgroup(dir.path(), &["knot", "--braid", "1 1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NotAKnot"));
    assert_eq!(surgroup(dir.path(), &["knot", "--braid", "n=2; 1 2"]).status.code(), Some(2));
    assert_eq!(surgroup(dir.path(), &["knot", "--builtin", "nope"]).status.code(), Some(2));
    assert_eq!(surgroup(dir.path(), &["knot"]).status.code(), Some(2));
}

#[test]
fn empty_family_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = surgroup(dir.path(), &["family", "--q", "2", "--p", "2,4"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("skip p=2") && err.contains("skip p=4"));
    assert!(err.contains("empty family after gcd filter"));
}

#[test]
fn lens_space_family_is_unresolved() {
    let dir = tempfile::tempdir().unwrap();
    let o = surgroup(dir.path(), &["family", "--builtin", "unknot", "--q", "5", "--p", "1,2,3,4", "--out", "u"]);
    assert_eq!(o.status.code(), Some(3));
    let csv = fs::read_to_string(dir.path().join("u/spectra.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).map(|l| l.split_once(',').unwrap().1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| *r == rows[0]));
    assert!(stdout(&o).contains("summary: 0 distinguished, 6 unresolved"));
    assert!(stdout(&o).contains("not evidence that the groups are isomorphic"));
}

#[test]
fn figure_eight_family_is_deterministic_and_cached() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["family", "--builtin", "fig8", "--q", "1", "--p", "1..6"];
    let first = surgroup(dir.path(), &[&args[..], &["--out", "a"]].concat());
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    assert!(stderr(&first).contains("escalating"));
    let second = surgroup(dir.path(), &[&args[..], &["--out", "b"]].concat());
    assert_eq!(second.status.code(), Some(0));
    for f in ["manifest.json", "spectra.csv", "report.txt", "report.json"] {
        let a = fs::read(dir.path().join("a").join(f)).unwrap();
        let b = fs::read(dir.path().join("b").join(f)).unwrap();
        assert_eq!(a, b, "{f}");
    }
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("b/meta.json")).unwrap()).unwrap();
    assert_eq!(meta["cache_misses"], 0);
    assert_eq!(meta["cache_hits"], 12);

    let csv = fs::read_to_string(dir.path().join("a/spectra.csv")).unwrap();
    assert!(csv.starts_with("label,C2,C3,C4,C5,C6,S3,S4,S5,A4,A5,D4,D5,PSL2_7,"));
    assert_eq!(csv.lines().count(), 7);
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("a/manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["schema_version"], 1);
    assert_eq!(manifest["escalated"], true);
    assert_eq!(manifest["members"].as_array().unwrap().len(), 6);
    assert!(stdout(&first).contains("summary: 15 distinguished, 0 unresolved"));

    let fresh = surgroup(dir.path(), &[&args[..], &["--out", "c", "--no-cache"]].concat());
    assert_eq!(fs::read(dir.path().join("c/spectra.csv")).unwrap(), csv.as_bytes());
    assert_eq!(fresh.status.code(), Some(0));
}

#[test]
fn no_escalate_keeps_standard_suite() {
    let dir = tempfile::tempdir().unwrap();
    let o = surgroup(dir.path(), &["family", "--builtin", "fig8", "--q", "1", "--p", "1..3", "--no-escalate", "--out", "s"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_passes_on_builtins() {
    let dir = tempfile::tempdir().unwrap();
    let o = surgroup(dir.path(), &["verify", "--builtin", "trefoil", "--q", "1", "--p", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS p=")).count(), 3);
    assert!(!out.contains("FAIL"));

    let o = surgroup(dir.path(), &["verify", "--builtin", "unknot", "--q", "3", "--p", "1"]);
    assert!(stdout(&o).contains("PASS p=1,q=3: abelianization Z/3 = Z/3"));
}

#[test]
fn verify_flags_corrupted_longitude() {
    let dir = tempfile::tempdir().unwrap();
    let good = r#"{
        "genus": 1,
        "forward": {"a1": [["a1", 1], ["b1", 1]], "b1": [["a1", -1]]},
        "backward": {"a1": [["b1", -1]], "b1": [["b1", 1], ["a1", 1]]}
    }"#;
    fs::write(dir.path().join("good.json"), good).unwrap();
    let o = surgroup(dir.path(), &["verify", "--monodromy", "good.json", "--q", "1", "--p", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let bad = good.replacen(
        "\"genus\": 1,",
        r#""genus": 1, "longitude": [["a1", 1], ["b1", 1], ["a1", -1], ["b1", -1], ["m", 1]],"#,
        1,
    );
    fs::write(dir.path().join("bad.json"), bad).unwrap();
    let o = surgroup(dir.path(), &["verify", "--monodromy", "bad.json", "--q", "1", "--p", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL peripheral longitude-null-homologous"));
}

#[test]
fn export_writes_freegroup_text() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("five.json"), r#"{"generators": ["a"], "relators": [[["a", 5]]]}"#).unwrap();
    let o = surgroup(dir.path(), &["export", "--presentation", "five.json", "--out", "e"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(dir.path().join("e/five.g")).unwrap(), "F := FreeGroup(\"a\"); rels := [ a^5 ];\n");

    let o = surgroup(dir.path(), &["export", "--builtin", "trefoil", "--q", "1", "--p", "1", "--out", "e"]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(dir.path().join("e/trefoil_surgery_p1_q1.g")).unwrap();
    let knot = fs::read_to_string({
        surgroup(dir.path(), &["export", "--builtin", "trefoil", "--out", "e"]);
        dir.path().join("e/trefoil_knot.g")
    })
    .unwrap();
    let count = |t: &str| t.split("rels := [").nth(1).unwrap().split(',').count();
    assert_eq!(count(&text), count(&knot) + 1);
}

#[test]
fn resource_and_environment_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = surgroup(dir.path(), &["family", "--builtin", "trefoil", "--q", "1", "--p", "1", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("CapExceeded"));

    let o = Command::new(env!("CARGO_BIN_EXE_surgroup"))
        .current_dir(dir.path())
        .args(["knot", "--builtin", "unknot"])
        .env("SURGROUP_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_surgroup"))
        .current_dir(dir.path())
        .args(["knot", "--builtin", "unknot"])
        .env("SURGROUP_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
