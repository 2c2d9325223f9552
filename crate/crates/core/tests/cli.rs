//! End-to-end runs of the command-line tool.

use std::path::Path;
use std::process::{Command, Output};

use monogamy::qlinalg::{state_family, StateFamily};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_monogamy"));
    c.env_remove("QML_SEED");
    c
}

fn run(c: &mut Command) -> Output {
    c.output().expect("binary runs")
}

fn write_state(dir: &Path, name: &str, json: &str) -> std::path::PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, json).unwrap();
    p
}

#[test]
fn measure_w3() {
    let dir = tempfile::tempdir().unwrap();
    let w = state_family(StateFamily::W, 3).unwrap();
    let path = write_state(dir.path(), "w3.json", &w.to_file().to_json());
    let out = run(bin().args(["measure", "--state"]).arg(&path));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["schema"], "monogamy.measure/v1");
    let dual = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == "dual_monogamy")
        .unwrap();
    assert_eq!(dual["verdict"], "saturated");
}

#[test]
fn measure_ghz4_reports_zero_discriminant() {
    let dir = tempfile::tempdir().unwrap();
    let g = state_family(StateFamily::Ghz, 4).unwrap();
    let path = write_state(dir.path(), "ghz4.json", &g.to_file().to_json());
    let out = run(bin().args(["measure", "--state"]).arg(&path));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["discriminant"]["total"].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn measure_rejects_unnormalized() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_state(
        dir.path(),
        "bad.json",
        r#"{"n_qubits": 2, "amplitudes": [[0.98, 0], [0, 0], [0, 0], [0, 0]]}"#,
    );
    let out = run(bin().args(["measure", "--state"]).arg(&path));
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("norm 0.98 outside tolerance"), "{err}");
}

#[test]
fn fuzz_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for (i, threads) in ["1", "4"].iter().enumerate() {
        let path = dir.path().join(format!("run{i}.json"));
        let out = run(bin()
            .env("RAYON_NUM_THREADS", threads)
            .args([
                "fuzz",
                "--qubits",
                "4",
                "--samples",
                "300",
                "--seed",
                "1",
                "--tol",
                "1e-9",
            ])
            .arg("--out")
            .arg(&path)
            .args(["--format", "json"]));
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        outputs.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let doc: serde_json::Value = serde_json::from_slice(&outputs[0]).unwrap();
    assert_eq!(doc["schema"], "monogamy.campaign/v1");
    assert!(doc.get("wall_time").is_none());
}

#[test]
fn seed_falls_back_to_environment() {
    let explicit = run(bin().args(["fuzz", "--qubits", "3", "--samples", "50", "--seed", "17"]));
    let from_env =
        run(bin()
            .env("QML_SEED", "17")
            .args(["fuzz", "--qubits", "3", "--samples", "50"]));
    let other = run(bin().args(["fuzz", "--qubits", "3", "--samples", "50", "--seed", "18"]));
    assert!(explicit.status.success() && from_env.status.success());
    assert_eq!(explicit.stdout, from_env.stdout);
    assert_ne!(explicit.stdout, other.stdout);
}

#[test]
fn fuzz_csv_layout() {
    let out = run(bin().args([
        "fuzz",
        "--qubits",
        "3",
        "--samples",
        "20",
        "--format",
        "csv",
    ]));
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# schema: monogamy.reports.csv/v1"));
    assert_eq!(
        lines.next(),
        Some("checker,lhs,rhs,slack,verdict,fingerprint")
    );
    let eq = lines
        .find(|l| l.starts_with("three_qubit_equality,"))
        .unwrap();
    assert!(eq.contains(",saturated,"));
}

#[test]
fn hunt_contract() {
    let out = run(bin().args(["hunt", "--qubits", "4"]));
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("hunt requires ≥ 5 qubits"));

    let out = run(bin().args([
        "hunt",
        "--qubits",
        "5",
        "--restarts",
        "2",
        "--iters",
        "100",
        "--mode",
        "max",
        "--from-w",
    ]));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["best_value"].as_f64().unwrap() <= 2.0 + 1e-9);
    assert_ne!(doc["ceiling"]["verdict"], "violated");
}

#[test]
fn family_table() {
    let out = run(bin().args(["family", "--max-qubits", "6"]));
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    for r in rows.iter().filter(|r| r["family"] == "w") {
        let n = r["n_qubits"].as_f64().unwrap();
        assert!((r["discriminant"].as_f64().unwrap() - (n - 3.0)).abs() < 1e-9);
    }
}

#[test]
fn invalid_config_is_an_error() {
    let out = run(bin().args(["fuzz", "--qubits", "11", "--samples", "5"]));
    assert_eq!(out.status.code(), Some(2));
    let out = run(bin().args(["fuzz", "--qubits", "3", "--samples", "0"]));
    assert_eq!(out.status.code(), Some(2));
    let out = run(bin().args(["fuzz", "--qubits", "3", "--format", "xml"]));
    assert!(!out.status.success());
}
