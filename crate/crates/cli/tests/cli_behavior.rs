use std::process::Command;

fn pushforge() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pushforge"))
}

#[test]
fn build_eval_regions_cdf_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");

    let status = pushforge()
        .args(["--out", out.to_str().unwrap(), "build", "tent", "--k", "4"])
        .status()
        .unwrap();
    assert!(status.success());
    let net = out.join("tent-k4.net.json");
    assert!(net.exists() && out.join("tent-k4.cert.json").exists());

    let output = pushforge()
        .args(["--out", out.to_str().unwrap(), "eval", "--net", net.to_str().unwrap()])
        .args(["--input", "0.3"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let vals: Vec<f64> = serde_json::from_slice(&output.stdout).unwrap();
    assert!((vals[0] - 0.8).abs() < 1e-12);

    let output = pushforge()
        .args(["--out", out.to_str().unwrap(), "regions", "--net", net.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert!(String::from_utf8_lossy(&output.stdout).starts_with("4 regions"));

    let output = pushforge()
        .args(["--out", out.to_str().unwrap(), "wasserstein", "--net", net.to_str().unwrap()])
        .args(["--target", "uniform"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let w: f64 = String::from_utf8_lossy(&output.stdout).trim().parse().unwrap();
    assert!(w.abs() < 1e-12);
}

#[test]
fn artifacts_are_write_once() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let args = ["--out", out.to_str().unwrap(), "build", "tent", "--k", "2"];
    assert!(pushforge().args(args).status().unwrap().success());
    let second = pushforge().args(args).output().unwrap();
    assert!(!second.status.success());
    assert!(String::from_utf8_lossy(&second.stderr).contains("write-once"));
}

#[test]
fn invalid_build_params_name_the_violation() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let output = pushforge()
        .args(["--out", out.to_str().unwrap(), "build", "space-filling"])
        .args(["--n", "1", "--d", "2", "--nodes", "4", "--layers", "2"])
        .output()
        .unwrap();
    assert!(!output.status.success());
    assert!(!String::from_utf8_lossy(&output.stderr).is_empty());
}

#[test]
fn sweep_tent_is_reproducible_and_marks_infeasible_rows() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.toml");
    std::fs::write(
        &cfg,
        "[sweep_tent]\nnodes = [4, 12]\nlayers = [2]\nlatent_dim = 1\nambient_dim = 2\nsamples = 200\nslack = 0.08\n",
    )
    .unwrap();
    let mut csvs = Vec::new();
    for run in ["a", "b"] {
        let out = dir.path().join(run);
        let status = pushforge()
            .args(["--out", out.to_str().unwrap(), "--config", cfg.to_str().unwrap()])
            .args(["--jobs", "2", "sweep-tent"])
            .status()
            .unwrap();
        assert!(status.success());
        csvs.push(std::fs::read(out.join("sweep-tent.csv")).unwrap());
        assert!(out.join("sweep-tent.svg").exists());
    }
    assert_eq!(csvs[0], csvs[1], "same config + seed must give identical CSV");
    let text = String::from_utf8(csvs[0].clone()).unwrap();
    assert!(text.contains("skipped:N≤dL"));
}
