//! End-to-end tests of the `antiwork` binary: exit codes, stage chaining,
//! determinism, and the export guarantees, all through the real CLI.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_antiwork")
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(config: &Path, args: &[&str]) -> Run {
    let output = Command::new(bin())
        .arg("--config")
        .arg(config)
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: output.status.code().expect("exit code"),
        stdout: String::from_utf8_lossy(&output.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&output.stderr).into_owned(),
    }
}

/// Small-but-complete config: 24 synthetic users, tiny model, fast stages.
fn write_config(dir: &Path) -> PathBuf {
    let path = dir.join("antiwork.toml");
    fs::write(
        &path,
        r#"
output_dir = "out"

[sampling]
seed = 0

[split]
ratio = 0.75
seed = 0

[encoder]
backend = "hashing"
dim = 12
max_tokens = 64
seed = 0

[model]
hidden = 4
epochs = 2
lr = 0.05
grad_clip = 5.0
seed = 0

[linear]
l2 = 1e-3
epochs = 50
lr = 0.1
seed = 0

[attribution]
steps = 16

[lda]
topics = 2
alpha = 0.5
beta = 0.01
iters = 20
seed = 0

[synth]
users = 24
variant = "mixed"
seed = 0
"#,
    )
    .unwrap();
    path
}

fn sha256(path: &Path) -> String {
    antiwork_core::pipeline::sha256_file(path).unwrap()
}

fn stdout_json(run: &Run) -> serde_json::Value {
    serde_json::from_str(&run.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", run.stdout))
}

#[test]
fn synth_is_deterministic_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let corpus = dir.path().join("out").join("synth_submissions.ndjson");

    let first = run(&config, &["synth"]);
    assert_eq!(first.code, 0, "stderr: {}", first.stderr);
    stdout_json(&first);
    let digest_one = sha256(&corpus);

    let second = run(&config, &["synth"]);
    assert_eq!(second.code, 0);
    assert_eq!(digest_one, sha256(&corpus), "rerun changed the corpus");

    // a different seed must produce a different corpus
    let reseeded = run(&config, &["--seed", "1", "synth"]);
    assert_eq!(reseeded.code, 0);
    assert_ne!(digest_one, sha256(&corpus), "--seed had no effect");
}

#[test]
fn full_stage_chain_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let out = dir.path().join("out");

    for stage in ["synth", "ingest", "label", "sample", "split", "train", "evaluate"] {
        let r = run(&config, &[stage]);
        assert_eq!(r.code, 0, "{stage} failed: {}", r.stderr);
        stdout_json(&r);
    }

    // label counts: 24 synthetic users split evenly, nobody excluded
    let counts: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("label_counts.json")).unwrap())
            .unwrap();
    assert_eq!(counts["antiwork"], 12);
    assert_eq!(counts["neutral"], 12);
    assert_eq!(counts["excluded"], 0);

    // metrics: three models, exactly the four fields each
    let metrics: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("metrics.json")).unwrap()).unwrap();
    for model in ["sequence", "tfidf", "random"] {
        let entry = metrics[model].as_object().unwrap();
        for field in ["accuracy", "precision", "recall", "f1"] {
            assert!(entry[field].is_number(), "{model}.{field} missing");
        }
        assert_eq!(entry.len(), 4, "{model} has extra fields");
    }

    // attribution, analysis, topics, report, export all run off those artifacts
    let r = run(&config, &["attribute", "--limit", "2"]);
    assert_eq!(r.code, 0, "attribute failed: {}", r.stderr);
    let attributed = fs::read_to_string(out.join("attributions.ndjson"))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .count();
    assert_eq!(attributed, 2);

    for stage in ["analyze", "topics", "report", "export"] {
        let r = run(&config, &[stage]);
        assert_eq!(r.code, 0, "{stage} failed: {}", r.stderr);
    }
    assert!(out.join("report.html").is_file());
    assert!(out.join("analysis.csv").is_file());
    assert!(out.join("topics.json").is_file());

    // export: anonymized, no checkpoint without the flag
    let exported = fs::read_to_string(out.join("export").join("antiwork_users.ndjson")).unwrap();
    assert!(!exported.contains("\"author\""));
    assert!(!out.join("export").join("model.json").exists());
    let r = run(&config, &["export", "--include-checkpoint"]);
    assert_eq!(r.code, 0);
    assert!(out.join("export").join("model.json").is_file());
}

#[test]
fn report_reruns_are_byte_identical_and_timestamp_is_opt_in() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    for stage in ["synth", "ingest", "label", "sample", "split", "train"] {
        assert_eq!(run(&config, &[stage]).code, 0);
    }
    assert_eq!(run(&config, &["attribute", "--limit", "1"]).code, 0);

    let report = dir.path().join("out").join("report.html");
    assert_eq!(run(&config, &["report"]).code, 0);
    let first = sha256(&report);
    assert_eq!(run(&config, &["report"]).code, 0);
    assert_eq!(first, sha256(&report), "default report not byte-identical");

    assert_eq!(
        run(&config, &["report", "--timestamp", "2026-08-23T12:00:00Z"]).code,
        0
    );
    assert!(fs::read_to_string(&report)
        .unwrap()
        .contains("2026-08-23T12:00:00Z"));
}

#[test]
fn invalid_config_exits_2_naming_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    fs::write(
        &path,
        "output_dir = \"out\"\n[split]\nratio = 1.5\nseed = 0\n",
    )
    .unwrap();
    let r = run(&path, &["label"]);
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("split.ratio"),
        "stderr does not name the field: {}",
        r.stderr
    );
}

#[test]
fn missing_config_file_exits_2() {
    let r = run(Path::new("/nonexistent/antiwork.toml"), &["synth"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("invalid config"));
}

#[test]
fn missing_prerequisite_exits_1_naming_the_stage() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    // label before ingest: users.ndjson does not exist yet
    let r = run(&config, &["label"]);
    assert_eq!(r.code, 1);
    assert!(
        r.stderr.contains("stage label failed"),
        "stderr does not name the stage: {}",
        r.stderr
    );
}

#[test]
fn attribute_unknown_user_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    for stage in ["synth", "ingest", "label", "sample", "split", "train"] {
        assert_eq!(run(&config, &[stage]).code, 0);
    }
    let r = run(&config, &["attribute", "--user", "nobody_here"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("stage attribute failed"));
}

#[test]
fn out_flag_redirects_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let elsewhere = dir.path().join("elsewhere");
    let r = run(
        &config,
        &["--out", elsewhere.to_str().unwrap(), "synth"],
    );
    assert_eq!(r.code, 0, "stderr: {}", r.stderr);
    assert!(elsewhere.join("synth_submissions.ndjson").is_file());
    assert!(!dir.path().join("out").exists());
}

#[test]
fn help_lists_every_subcommand() {
    let output = Command::new(bin()).arg("--help").output().unwrap();
    assert!(output.status.success());
    let help = String::from_utf8_lossy(&output.stdout).into_owned();
    for subcommand in [
        "synth", "ingest", "label", "sample", "split", "train", "evaluate", "attribute",
        "analyze", "topics", "report", "export",
    ] {
        assert!(help.contains(subcommand), "help is missing {subcommand}");
    }
}
