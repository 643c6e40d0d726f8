//! End-to-end exercises of the command-line interface, including the file
//! formats it promises: the R-matrix interchange JSON, the representation
//! bundle, and the character table in JSON and CSV.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rea"))
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("rea-cli-test-{}-{name}", std::process::id()));
    p
}

fn write_catalog(n: usize, path: &PathBuf) {
    let family = if n == 2 { "uq-sl2" } else { "standard-hecke" };
    let status = bin()
        .args([
            "catalog",
            "--family",
            family,
            "--n",
            &n.to_string(),
            "--out",
        ])
        .arg(path)
        .status()
        .expect("spawn");
    assert!(status.success());
}

#[test]
fn validate_and_decompose() {
    let rfile = tmp("r2.json");
    write_catalog(2, &rfile);
    let out = bin()
        .args(["validate", "--rmatrix"])
        .arg(&rfile)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("symmetry rank p = 2"));
    assert!(text.contains("[pass] b_chain_trace"));

    let out = bin()
        .args(["decompose", "--rmatrix"])
        .arg(&rfile)
        .args(["--k", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("= 4 (n^k = 4)"));
    std::fs::remove_file(rfile).ok();
}

#[test]
fn validate_rejects_bad_rmatrix() {
    let rfile = tmp("bad.json");
    // the permutation matrix solves Yang-Baxter but is not Hecke
    std::fs::write(
        &rfile,
        r#"{"n": 2, "entries": [["0","0","0","1"],["0","0","1","0"],["0","1","0","0"],["1","0","0","0"]]}"#,
    )
    .unwrap();
    let out = bin()
        .args(["validate", "--rmatrix"])
        .arg(&rfile)
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("INVALID"));
    std::fs::remove_file(rfile).ok();
}

#[test]
fn build_then_verify_round_trip() {
    let rfile = tmp("r2b.json");
    write_catalog(2, &rfile);
    let rep = tmp("rep.json");
    let status = bin()
        .args(["build", "--rmatrix"])
        .arg(&rfile)
        .args(["--type", "b", "--k", "2", "--shape", "(2)", "--sl", "--out"])
        .arg(&rep)
        .status()
        .unwrap();
    assert!(status.success());
    let out = bin().args(["verify", "--rep"]).arg(&rep).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[pass] quadratic relation"));
    assert!(text.contains("first central element acts as 0"));
    std::fs::remove_file(rfile).ok();
    std::fs::remove_file(rep).ok();
}

#[test]
fn characters_table_and_files() {
    let rfile = tmp("r2c.json");
    write_catalog(2, &rfile);
    let json = tmp("chars.json");
    let csv = tmp("chars.csv");
    let out = bin()
        .args(["characters", "--rmatrix"])
        .arg(&rfile)
        .args(["--type", "r", "--k", "2", "--m", "2", "--json"])
        .arg(&json)
        .arg("--csv")
        .arg(&csv)
        .output()
        .unwrap();
    assert!(out.status.success(), "all character comparisons match");
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("shape,m,closed_form,oracle,match"));
    assert!(csv_text.contains("\"(2)\",1,"));
    let json_text = std::fs::read_to_string(&json).unwrap();
    let rows: serde_json::Value = serde_json::from_str(&json_text).unwrap();
    assert!(rows
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["matches"] == true));
    for f in [rfile, json, csv] {
        std::fs::remove_file(f).ok();
    }
}

#[test]
fn equivalence_and_indecomposable_commands() {
    let rfile = tmp("r3e.json");
    write_catalog(3, &rfile);
    let out = bin()
        .args(["equivalence", "--rmatrix"])
        .arg(&rfile)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("[pass] b_r_equivalence"));
    std::fs::remove_file(rfile).ok();

    let out = bin()
        .args(["indecomposable", "--x", "q", "--y", "1", "--z", "-1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("indecomposable: no invariant complement"));

    let out = bin()
        .args(["indecomposable", "--x", "0", "--y", "1", "--z", "q"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("decomposable: invariant complement"));
}
