//! Drives the `blockade` binary end to end.

use std::process::Command;

fn blockade() -> Command {
    Command::new(env!("CARGO_BIN_EXE_blockade"))
}

fn field(stdout: &str, key: &str) -> f64 {
    let prefix = format!("{key} = ");
    let line = stdout
        .lines()
        .find(|l| l.starts_with(&prefix))
        .unwrap_or_else(|| panic!("no {key} in output:\n{stdout}"));
    line[prefix.len()..]
        .split_whitespace()
        .next()
        .unwrap()
        .parse()
        .unwrap()
}

#[test]
fn point_reports_observables_and_oracle() {
    let out = blockade()
        .args([
            "point",
            "--g",
            "3",
            "--f-a",
            "0.01",
            "--delta-b",
            "1",
            "--delta-c",
            "-1",
        ])
        .args(["--trunc", "4,2,2", "--oracle", "--oracle-time", "60"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!((field(&stdout, "g2_a") - 2.773e-3).abs() < 1e-5);
    assert!((field(&stdout, "n_a") - 4.0e-4).abs() < 1e-5);
    assert!(field(&stdout, "oracle_trace_distance") < 1e-6);
    assert_eq!(field(&stdout, "dim"), 45.0);
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("scan.conf");
    let csv = dir.path().join("scan.csv");
    std::fs::write(
        &config,
        "g = 3\nf_a = 0.01\ndelta_b = 1\ndelta_c = -1\naxis = delta_a\nstart = -1\nstop = 1\npoints = 5\n",
    )
    .unwrap();
    let status = blockade()
        .args(["sweep", "--config"])
        .arg(&config)
        .arg("--out")
        .arg(&csv)
        .args(["--trunc", "3,2,2"])
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,g2_a,n_a,n_b,n_c");
    assert_eq!(lines.len(), 6);
    assert!(lines[3].starts_with("0.000000000e0,"));

    let stdout = blockade()
        .args(["sweep", "--config"])
        .arg(&config)
        .output()
        .unwrap();
    assert!(stdout.status.success());
    assert!(String::from_utf8(stdout.stdout)
        .unwrap()
        .starts_with("x,g2_a,n_a,n_b,n_c\n"));
}

#[test]
fn sweep_reports_config_errors() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.conf");
    std::fs::write(&config, "axis = g\nstart = 1\nstop = 2\nwobble = 3\n").unwrap();
    let out = blockade()
        .args(["sweep", "--config"])
        .arg(&config)
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 4"), "{stderr}");

    let missing = blockade().arg("sweep").output().unwrap();
    assert!(!missing.status.success());
}

#[test]
fn analytic_reports_manifold_and_amplitudes() {
    let out = blockade()
        .args([
            "analytic",
            "--g",
            "3",
            "--f-a",
            "0.01",
            "--delta-b",
            "1",
            "--delta-c",
            "-1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let root2g = 3.0 * std::f64::consts::SQRT_2;
    assert!((field(&stdout, "omega_plus") - root2g).abs() < 1e-8);
    assert!((field(&stdout, "omega_minus") + root2g).abs() < 1e-8);
    assert!((field(&stdout, "splitting") - 2.0 * root2g).abs() < 1e-8);
    assert!((field(&stdout, "g2_weak") - 1.0 / 361.0).abs() < 1e-5);
    assert_eq!(field(&stdout, "delta_a_opt"), 0.0);
}

#[test]
fn rejects_bad_truncation() {
    let out = blockade()
        .args(["point", "--trunc", "0,2,2"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let out = blockade()
        .args(["point", "--trunc", "3,2"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}
