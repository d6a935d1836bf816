//! End-to-end tests of the command-line interface: JSON payloads, exit
//! codes, and byte-level determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lefschetz-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&output.stdout)
        )
    })
}

fn write_fixture(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn octahedron_json(dir: &Path) -> PathBuf {
    write_fixture(
        dir,
        "octahedron.json",
        r#"{"facets": [[0,1,2],[0,2,3],[0,3,4],[0,1,4],[1,2,5],[2,3,5],[3,4,5],[1,4,5]]}"#,
    )
}

#[test]
fn euler_and_betti_of_octahedron() {
    let dir = tempfile::tempdir().unwrap();
    let complex = octahedron_json(dir.path());
    let out = run(&["euler", complex.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["results"]["euler"], 2);
    assert_eq!(v["results"]["f_vector"], serde_json::json!([6, 12, 8]));

    let out = run(&["betti", complex.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["betti"], serde_json::json!([1, 0, 1]));
}

#[test]
fn spectrum_of_hollow_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let complex = write_fixture(
        dir.path(),
        "hollow.json",
        r#"{"facets": [[0,1],[1,2],[0,2]]}"#,
    );
    let out = run(&["spectrum", complex.to_str().unwrap(), "--degree", "0"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let eigs: Vec<f64> = v["results"]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert_eq!(eigs.len(), 3);
    assert!(eigs[0].abs() < 1e-8);
    assert!((eigs[1] - 3.0).abs() < 1e-8);
    assert!((eigs[2] - 3.0).abs() < 1e-8);
    assert_eq!(v["results"]["kernel_dim"], 1);

    // out-of-range degree is an input error
    let out = run(&["spectrum", complex.to_str().unwrap(), "--degree", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lefschetz_all_automorphisms_of_octahedron() {
    let dir = tempfile::tempdir().unwrap();
    let complex = octahedron_json(dir.path());
    let out = run(&[
        "lefschetz",
        complex.to_str().unwrap(),
        "--all-automorphisms",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["count"], 48);
    assert_eq!(v["results"]["all_verdicts_true"], true);
    for entry in v["results"]["reports"].as_array().unwrap() {
        assert_eq!(entry["report"]["verdict"], true);
        assert_eq!(
            entry["report"]["lefschetz_number"],
            entry["report"]["index_sum"]
        );
    }
}

#[test]
fn lefschetz_rotation_of_c4() {
    let dir = tempfile::tempdir().unwrap();
    let complex = write_fixture(
        dir.path(),
        "c4.json",
        r#"{"facets": [[0,1],[1,2],[2,3],[0,3]]}"#,
    );
    let perm = write_fixture(dir.path(), "rot.json", r#"{"perm": [1,2,3,0]}"#);
    let out = run(&[
        "lefschetz",
        complex.to_str().unwrap(),
        "--automorphism",
        perm.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let report = &v["results"]["reports"][0]["report"];
    assert_eq!(report["lefschetz_number"], 0);
    assert_eq!(report["index_sum"], 0);
    assert_eq!(report["indices"].as_array().unwrap().len(), 0);

    // a vertex map that is not simplicial is an input error
    let bad = write_fixture(dir.path(), "bad.json", r#"{"perm": [1,0,2,3]}"#);
    let out = run(&[
        "lefschetz",
        complex.to_str().unwrap(),
        "--automorphism",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lefschetz_identity_default_gives_euler() {
    let dir = tempfile::tempdir().unwrap();
    let complex = octahedron_json(dir.path());
    let out = run(&["lefschetz", complex.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["reports"][0]["report"]["lefschetz_number"], 2);
}

#[test]
fn mckean_singer_flatness_and_violation_exit() {
    let dir = tempfile::tempdir().unwrap();
    let complex = octahedron_json(dir.path());
    let out = run(&[
        "mckean-singer",
        complex.to_str().unwrap(),
        "--t-grid",
        "0,1,5",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["euler"], 2);
    assert!(v["results"]["max_deviation"].as_f64().unwrap() < 1e-8);

    // an absurdly small tolerance turns the same run into a violation
    let out = run(&[
        "mckean-singer",
        complex.to_str().unwrap(),
        "--t-grid",
        "0,1,5",
        "--tol",
        "1e-18",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "violation");
}

#[test]
fn mckean_singer_on_a_point() {
    let dir = tempfile::tempdir().unwrap();
    let complex = write_fixture(dir.path(), "point.json", r#"{"facets": [[0]]}"#);
    let out = run(&["mckean-singer", complex.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["euler"], 1);
    for pair in v["results"]["values"].as_array().unwrap() {
        assert_eq!(pair[1].as_f64().unwrap(), 1.0);
    }
}

#[test]
fn supersymmetry_of_full_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let complex = write_fixture(dir.path(), "triangle.json", r#"{"facets": [[0,1,2]]}"#);
    let out = run(&["supersymmetry", complex.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["matched"], true);
    assert_eq!(v["results"]["even"].as_array().unwrap().len(), 3);
    assert_eq!(v["results"]["odd"].as_array().unwrap().len(), 3);
}

#[test]
fn enumerate_dimension_six_lists_wallach_fixed_set() {
    let out = run(&["enumerate", "--dim", "6"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let entries = v["results"]["entries"].as_array().unwrap();
    let wallach = entries
        .iter()
        .find(|e| e["components"] == serde_json::json!(["S2", "S2", "pt", "pt"]))
        .expect("wallach entry present");
    assert_eq!(wallach["implied_euler"], 6);
    assert_eq!(wallach["admissible"], true);

    // odd dimension is an input error
    let out = run(&["enumerate", "--dim", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumeration_budget_env_var() {
    let out = bin()
        .args(["enumerate", "--dim", "8"])
        .env("LEFSCHETZ_LAB_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .args(["enumerate", "--dim", "8"])
        .env("LEFSCHETZ_LAB_BUDGET", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_configurations() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_fixture(
        dir.path(),
        "cp2pt.json",
        r#"{"ambient_dim": 6, "components": [{"label":"CP2"},{"label":"pt"}]}"#,
    );
    let out = run(&["classify", cfg.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["outcome"], "complex_projective");

    let cfg = write_fixture(
        dir.path(),
        "s4.json",
        r#"{"ambient_dim": 6, "components": [{"label":"S4"}]}"#,
    );
    let v = stdout_json(&run(&["classify", cfg.to_str().unwrap()]));
    assert_eq!(v["results"]["outcome"], "spherical_space_form");

    let cfg = write_fixture(
        dir.path(),
        "s4dim8.json",
        r#"{"ambient_dim": 8, "components": [{"label":"S4"}]}"#,
    );
    let v = stdout_json(&run(&["classify", cfg.to_str().unwrap()]));
    assert_eq!(v["results"]["outcome"], "unconstrained");

    // unknown label is an input error
    let cfg = write_fixture(
        dir.path(),
        "bad.json",
        r#"{"ambient_dim": 6, "components": [{"label":"nope"}]}"#,
    );
    let out = run(&["classify", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gap_reports() {
    let v = stdout_json(&run(&["gap", "--dim", "8"]));
    assert_eq!(v["results"]["empty"], true);
    let v = stdout_json(&run(&["gap", "--dim", "10"]));
    assert_eq!(v["results"]["empty"], false);
    let entries = v["results"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    assert_eq!(entries[0]["component_dim"], 6);
}

#[test]
fn sample_sphere_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("points.json");
    let graph = dir.path().join("graph.json");
    let complex = dir.path().join("complex.json");
    let out = run(&[
        "sample-sphere",
        "--subdivisions",
        "0",
        "--h",
        "1.1",
        "--out",
        points.to_str().unwrap(),
        "--graph-out",
        graph.to_str().unwrap(),
        "--complex-out",
        complex.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["n_points"], 12);
    assert_eq!(v["results"]["n_edges"], 30);
    assert_eq!(v["results"]["euler"], 2);
    assert_eq!(v["results"]["f_vector"], serde_json::json!([12, 30, 20]));

    // the written complex feeds back into the other commands
    let v = stdout_json(&run(&["betti", complex.to_str().unwrap()]));
    assert_eq!(v["results"]["betti"], serde_json::json!([1, 0, 1]));

    // one subdivision with a threshold in its distance window
    let out = run(&[
        "sample-sphere",
        "--subdivisions",
        "1",
        "--h",
        "0.62",
        "--out",
        points.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["results"]["n_points"], 42);
    assert_eq!(v["results"]["n_edges"], 120);
    assert_eq!(v["results"]["euler"], 2);
    assert_eq!(v["results"]["f_vector"], serde_json::json!([42, 120, 80]));

    // below the minimal distance everything is isolated
    let out = run(&[
        "sample-sphere",
        "--subdivisions",
        "0",
        "--h",
        "0.5",
        "--out",
        points.to_str().unwrap(),
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["n_edges"], 0);
    assert_eq!(v["results"]["euler"], 12);

    // non-positive threshold is an input error
    let out = run(&[
        "sample-sphere",
        "--subdivisions",
        "0",
        "--h",
        "0",
        "--out",
        points.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_fixture(dir.path(), "bad.json", "{ not json");
    let out = run(&["euler", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].is_string());

    let out = run(&["euler", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));

    let empty = write_fixture(dir.path(), "empty.json", r#"{"facets": [[]]}"#);
    let out = run(&["euler", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let complex = octahedron_json(dir.path());
    for args in [
        vec!["euler", complex.to_str().unwrap()],
        vec!["spectrum", complex.to_str().unwrap(), "--degree", "1"],
        vec![
            "lefschetz",
            complex.to_str().unwrap(),
            "--all-automorphisms",
        ],
        vec!["mckean-singer", complex.to_str().unwrap()],
        vec!["enumerate", "--dim", "6"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?} not deterministic");
    }
}

#[test]
fn pretty_flag_expands_output() {
    let dir = tempfile::tempdir().unwrap();
    let complex = octahedron_json(dir.path());
    let compact = run(&["euler", complex.to_str().unwrap()]);
    let pretty = run(&["euler", complex.to_str().unwrap(), "--pretty"]);
    assert!(pretty.stdout.len() > compact.stdout.len());
    assert_eq!(stdout_json(&compact), stdout_json(&pretty));
}
