use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn projring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projring"))
        .args(args)
        .env_remove("PROJRING_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("projring-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn tensor_presentation_target_passes() {
    let out = projring(&["verify", "thm3.8", "--n", "3", "--family", "tensor-taft"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["command"], "verify thm3.8");
    assert!(v["checks"].as_array().unwrap().len() >= 5);
}

#[test]
fn fuse_two_dimensional_simples_in_both_modes() {
    for extra in [&[][..], &["--symbolic"][..]] {
        let mut args = vec!["fuse", "V(2,0)", "V(2,0)", "--n", "3", "--family", "hpq", "--p", "1", "--format", "text"];
        args.extend_from_slice(extra);
        let out = projring(&args);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("V(2,0) ⊗ V(2,0) = V(3,0) + V(1,1)"), "{text}");
    }
    let v = json(&projring(&["fuse", "V(2,0)", "V(2,0)", "--n", "3", "--family", "hpq", "--p", "1"]));
    assert_eq!(v["report"]["closed_form"]["text"], "V(3,0) + V(1,1)");
    assert_eq!(v["report"]["computed"]["text"], "V(3,0) + V(1,1)");
}

#[test]
fn block_count_for_nonbasic_family_at_n4() {
    let out = projring(&["verify", "blocks", "--n", "4", "--family", "hpq", "--p", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["report"]["block_count"], 10);
}

#[test]
fn json_output_is_byte_identical_across_runs_and_thread_counts() {
    let args = ["table", "--family", "hpq", "--p", "1", "--n", "3", "--seed", "5"];
    let a = projring(&args);
    let b = projring(&args);
    let mut single = args.to_vec();
    single.extend(["--jobs", "1"]);
    let c = projring(&single);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&projring(&["verify", "blocks", "--n", "3", "--family", "tensor-taft"]));
    assert!(plain.get("elapsed_ms").is_none());
    let timed = json(&projring(&["verify", "blocks", "--n", "3", "--family", "tensor-taft", "--timing"]));
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn errors_exit_with_code_two_and_a_json_report() {
    for args in [
        &["verify", "no-such-target"][..],
        &["verify", "thm3.8", "--family", "hpq", "--p", "0"][..],
        &["fuse", "V(9,0)", "V(1,0)", "--family", "hpq", "--p", "1"][..],
        &["algebra", "verify", "--family", "hpq", "--p", "0", "--n", "2"][..],
    ] {
        let out = projring(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let v = json(&out);
        assert_eq!(v["passed"], false);
        assert!(v["error"].is_string());
    }
}

#[test]
fn out_dir_receives_named_file() {
    let dir = scratch_dir("outdir");
    let out = Command::new(env!("CARGO_BIN_EXE_projring"))
        .args(["verify", "blocks", "--n", "3", "--family", "hpq", "--p", "0", "--format", "csv"])
        .env("PROJRING_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let files: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    assert_eq!(files[0].extension().unwrap(), "csv");
    let body = std::fs::read_to_string(&files[0]).unwrap();
    assert!(body.contains("block count"), "{body}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn explicit_output_path_wins() {
    let dir = scratch_dir("output");
    let path = dir.join("table.csv");
    let out = projring(&[
        "table", "--family", "tensor-taft", "--n", "3", "--symbolic", "--format", "csv", "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    // One row per term; every ordered pair of basis labels has at least one term.
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let pairs: std::collections::BTreeSet<(String, String)> =
        rdr.records().map(|r| r.unwrap()).map(|r| (r[0].to_string(), r[1].to_string())).collect();
    assert_eq!(pairs.len(), 18 * 18);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn modules_list_reports_every_simple_and_cover() {
    let v = json(&projring(&["modules", "list", "--family", "hpq", "--p", "1", "--n", "3"]));
    assert_eq!(v["passed"], true);
    let out = projring(&["modules", "list", "--family", "hpq", "--p", "1", "--n", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    // 9 simples and 6 projective covers plus a header.
    assert_eq!(text.lines().count(), 16);
}

#[test]
fn every_named_target_passes_at_n3() {
    let targets = [
        "thm4.9", "thm5.9", "prop3.6", "prop3.7", "prop3.9", "prop4.1", "prop4.6", "prop4.7", "prop4.8", "prop4.10",
        "cor3.4", "cor3.5", "cor4.4", "lemma5.1", "lemma5.3", "cor5.4", "prop5.5", "lemma5.6", "prop5.7", "cor5.8",
        "quiver4", "tensor-iso",
    ];
    for t in targets {
        let out = projring(&["verify", t, "--n", "3"]);
        assert_eq!(out.status.code(), Some(0), "{t}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
