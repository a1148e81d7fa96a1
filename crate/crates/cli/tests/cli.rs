use std::fs;
use std::process::{Command, Output};

use curvtorus::distributions::{CircularDensity, TorusWeighted, VonMises};
use curvtorus::validation::{ks_critical, ks_statistic, EcdfSummary, NumericCdf, SignificanceLevel};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvtorus"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = cli(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn sample_row_count_and_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let p = path.to_str().unwrap();
    let args = [
        "sample",
        "--dist",
        "torus-uniform",
        "--sampler",
        "eau",
        "-R",
        "3",
        "-r",
        "1.5",
        "-n",
        "1000",
        "--seed",
        "42",
        "--format",
        "csv",
        "--out",
        p,
    ];
    assert!(cli(&args).status.success());
    let first = fs::read(&path).unwrap();
    let text = String::from_utf8(first.clone()).unwrap();
    assert_eq!(text.lines().count(), 1001);
    assert!(text.starts_with("theta1,theta2\n"));
    assert!(!text.contains('\r'));
    assert!(cli(&args).status.success());
    assert_eq!(fs::read(&path).unwrap(), first);
}

#[test]
fn points_lie_on_the_torus() {
    let text = stdout(&[
        "sample", "--dist", "vm-torus", "-n", "200", "--points", "-R", "2", "-r", "0.5",
    ]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y,z"));
    for line in lines {
        let v: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        let rho = v[0].hypot(v[1]) - 2.0;
        assert!((rho * rho + v[2] * v[2] - 0.25).abs() < 1e-12);
    }
}

#[test]
fn vm_torus_theta2_column_passes_ks() {
    let text = stdout(&[
        "sample", "--dist", "vm-torus", "--kappa", "1", "--mu", "0", "-R", "3", "-r", "1.5", "-n", "20000", "--seed",
        "5",
    ]);
    let t2: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    let w = TorusWeighted::new(VonMises::new(0.0, 1.0).unwrap(), 0.5).unwrap();
    let e = EcdfSummary::new(t2).unwrap();
    let cdf = NumericCdf::new(&w);
    assert!(ks_statistic(&e, |t| cdf.eval(t)) < ks_critical(e.len(), SignificanceLevel::One));
    assert!(w.pdf(0.0) > 0.0);
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        vec!["sample", "-R", "1", "-r", "2"],
        vec!["sample", "--dist", "von-mises", "--kappa", "-1"],
        vec!["sample", "--dist", "wrapped-cauchy", "--rho", "1.5"],
        vec!["sample", "--dist", "vm-torus", "--sampler", "eau"],
        vec!["sample", "-n", "0"],
        vec!["bench", "--table", "6"],
        vec!["plot", "--format", "csv"],
    ] {
        let out = cli(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unwritable_output_exits_3() {
    let out = cli(&["sample", "-n", "5", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bench_table1_rows() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["bench", "--table", "1", "--n", "10000", "--seed", "7"])).unwrap();
    assert_eq!(json["table_id"], 1);
    assert_eq!(json["n"], 10000);
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 20);
    for r in rows {
        let rate = r["rate_percent"].as_f64().unwrap();
        match r["sampler"].as_str().unwrap() {
            "EAU" => assert_eq!(rate, 100.0),
            "AUR" => assert!((47.0..=53.0).contains(&rate)),
            other => panic!("unexpected sampler {other}"),
        }
        assert!(r["ns_per_sample"].is_null());
    }
}

#[test]
fn bench_timing_is_opt_in() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["bench", "--table", "2", "--n", "500", "--timing"])).unwrap();
    assert!(json["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["ns_per_sample"].as_f64().unwrap() > 0.0));
}

#[test]
fn validate_full_suite_passes() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&["validate"])).unwrap();
    assert_eq!(json["passed"], true);
    assert!(json["checks"].as_array().unwrap().len() >= 6);
}

#[test]
fn broken_envelope_fails_dominance() {
    let out = cli(&[
        "validate",
        "--check",
        "dominance",
        "--dist",
        "von-mises",
        "--kappa",
        "100",
        "--mu",
        "1",
        "-k",
        "2",
        "--heights",
        "endpoints",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dominance"));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["checks"][0]["passed"], false);
}

#[test]
fn normalizer_check() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "validate",
        "--check",
        "normalizer",
        "--kappa",
        "1",
        "--mu",
        "0",
        "-a",
        "0.5",
    ]))
    .unwrap();
    let req = &json["checks"][0]["detail"]["requested"];
    assert!(req["relative_error"].as_f64().unwrap() < 1e-10);
    assert!((req["closed_form"].as_f64().unwrap() - 9.730426210225026).abs() < 1e-12);
}

#[test]
fn sample_file_round_trips_through_validate_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    for points in [false, true] {
        let path = dir.path().join(format!("s{points}.csv"));
        let p = path.to_str().unwrap();
        let mut args = vec!["sample", "--dist", "kj-torus", "-n", "5000", "--out", p];
        if points {
            args.push("--points");
        }
        assert!(cli(&args).status.success());
        let out = cli(&["validate", "--check", "ks", "--dist", "kj-torus", "--input", p]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
        assert!(cli(&["plot", "--input", p, "--dist", "kj-torus"]).status.success());
    }
}

#[test]
fn histogram_bars_integrate_to_one() {
    let svg = stdout(&[
        "plot",
        "--kind",
        "histogram",
        "--sampler",
        "eau",
        "-n",
        "50000",
        "--bins",
        "36",
    ]);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let mut total = 0.0;
    let mut bars = 0;
    for chunk in svg.split("data-density=\"").skip(1) {
        let d: f64 = chunk.split('"').next().unwrap().parse().unwrap();
        let w: f64 = chunk
            .split("data-width=\"")
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap()
            .parse()
            .unwrap();
        total += d * w;
        bars += 1;
    }
    assert_eq!(bars, 36);
    assert!((total - 1.0).abs() < 1e-3);
    assert!(svg.contains("class=\"density\""));
}

#[test]
fn quadrant_chart_shows_flat_deviation() {
    let dev = |dist: &str| -> f64 {
        let svg = stdout(&["plot", "--kind", "quadrant", "--dist", dist, "-n", "20000"]);
        let freqs: Vec<f64> = svg
            .split("data-frequency=\"")
            .skip(1)
            .map(|c| c.split('"').next().unwrap().parse().unwrap())
            .collect();
        let refs: Vec<f64> = svg
            .split("data-proportion=\"")
            .skip(1)
            .map(|c| c.split('"').next().unwrap().parse().unwrap())
            .collect();
        assert_eq!(freqs.len(), 16);
        freqs.iter().zip(&refs).map(|(f, r)| (f - r).abs()).fold(0.0, f64::max)
    };
    assert!(dev("uniform") > 3.0 * dev("torus-uniform"));
}

#[test]
fn empty_sample_file_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    fs::write(&path, "").unwrap();
    assert_eq!(cli(&["plot", "--input", path.to_str().unwrap()]).status.code(), Some(2));
    fs::write(&path, "theta1,theta2\n").unwrap();
    assert_eq!(
        cli(&["validate", "--check", "ks", "--input", path.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
