//! Validates the binary's JSON outputs against the shipped schemas.

use quadcount_core::{io, Hypergraph4};
use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quadcount"))
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(name);
    let raw: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&raw).unwrap()
}

fn assert_valid(validator: &jsonschema::Validator, value: &serde_json::Value) {
    let errors: Vec<String> = validator
        .iter_errors(value)
        .map(|e| format!("{e}"))
        .collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}\n{value}");
}

#[test]
fn reports_conform_to_their_schemas() {
    let dir = tempfile::tempdir().unwrap();
    let hg = dir.path().join("host.hg");
    let side = dir.path().join("side.json");
    let out = bin()
        .args([
            "construct",
            "b4",
            "--n",
            "10",
            "--out",
            hg.to_str().unwrap(),
            "--sidecar",
            side.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&side).unwrap()).unwrap();
    assert_valid(&schema("construction_sidecar.schema.json"), &sidecar);

    let out = bin()
        .args(["count", "--pattern", "C3", "--in", hg.to_str().unwrap()])
        .output()
        .unwrap();
    let count: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&schema("count_report.schema.json"), &count);

    let edge = sidecar["part_ranges"][0][0].as_u64().unwrap();
    let _ = edge;
    let out = bin()
        .args([
            "count-through-edge",
            "--pattern",
            "C3",
            "--in",
            hg.to_str().unwrap(),
            "--edge",
            "0,1,2,7",
        ])
        .output()
        .unwrap();
    let through: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&schema("through_edge_report.schema.json"), &through);

    let out = bin()
        .args(["cmin", "--base", "b4", "--n", "10", "--pattern", "C3"])
        .output()
        .unwrap();
    let cmin: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&schema("cmin_report.schema.json"), &cmin);

    let out = bin()
        .args([
            "partition",
            "--in",
            hg.to_str().unwrap(),
            "--mode",
            "odd-odd",
            "--restarts",
            "2",
        ])
        .output()
        .unwrap();
    let partition: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&schema("partition_report.schema.json"), &partition);

    let witness = dir.path().join("w.hg");
    let out = bin()
        .args([
            "turan",
            "--n",
            "5",
            "--pattern",
            "C3",
            "--witness-out",
            witness.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    let turan: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&schema("turan_report.schema.json"), &turan);
    assert!(io::read_hypergraph_file(&witness).is_ok());

    let vdir = dir.path().join("verify");
    let out = bin()
        .args([
            "verify-all",
            "--only",
            "c04",
            "--out-dir",
            vdir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(vdir.join("summary.json")).unwrap())
            .unwrap();
    assert_valid(&schema("verify_summary.schema.json"), &summary);

    // Count reports stay schema-valid for file-based patterns too.
    let k6 = dir.path().join("k6.hg");
    io::write_hypergraph_file(&Hypergraph4::complete(6), &k6).unwrap();
    let out = bin()
        .args(["count", "--pattern", "C3", "--in", k6.to_str().unwrap()])
        .output()
        .unwrap();
    let count: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&schema("count_report.schema.json"), &count);
}
