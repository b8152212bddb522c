use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, Output};

use casimir_cli::report::RunReport;

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .env_remove("CASIMIR_TOLERANCE_PROFILE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')))
        .unwrap_or_else(|| panic!("no `{key}` in {text}"))
        .parse()
        .unwrap()
}

#[test]
fn specfun_examples() {
    let o = casimir(&["specfun", "zeta", "--", "-3"]);
    assert!(o.status.success());
    assert!((field(&stdout(&o), "value") - 1.0 / 120.0).abs() < 1e-12);
    assert_eq!(field(&stdout(&casimir(&["specfun", "polylog", "2", "0"])), "value"), 0.0);
    let h = field(&stdout(&casimir(&["specfun", "hurwitz", "4", "0.5"])), "value");
    assert!((h / (PI.powi(4) / 6.0) - 1.0).abs() < 1e-13);
    let g = field(&stdout(&casimir(&["specfun", "gamma", "5"])), "value");
    assert!((g - 24.0).abs() < 1e-12);
}

#[test]
fn specfun_exit_codes() {
    assert_eq!(casimir(&["specfun", "polylog", "2", "1.5"]).status.code(), Some(2));
    assert_eq!(casimir(&["specfun", "zeta", "1"]).status.code(), Some(2));
    assert_eq!(casimir(&["specfun", "hurwitz", "0.5", "1"]).status.code(), Some(2));
    assert_eq!(casimir(&["specfun", "gamma", "-2"]).status.code(), Some(2));
    assert_eq!(casimir(&["specfun", "polygamma", "0", "1"]).status.code(), Some(2));
    assert_eq!(casimir(&["specfun", "zeta", "abc"]).status.code(), Some(2));
    let o = casimir(&["specfun", "polylog", "2", "2"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
}

#[test]
fn tensor_outputs() {
    let a = PI * PI / 1440.0;
    let o = stdout(&casimir(&["tensor", "--a", "1", "--xi", "0.1666666667", "--x3", "0.3"]));
    for (k, w) in [("t00", -a), ("t11", a), ("t22", a), ("t33", -3.0 * a)] {
        assert!((field(&o, k) - w).abs() < 1e-7 * a, "{k}");
    }
    let o = stdout(&casimir(&["tensor", "--a", "1", "--xi", "0", "--x3", "0.5"]));
    assert!((field(&o, "B") - PI * PI / 48.0).abs() < 1e-15);
    let o = stdout(&casimir(&["tensor", "--a", "1", "--xi", "0", "--x3", "-1"]));
    let w = 1.0 / (16.0 * PI * PI);
    assert_eq!(field(&o, "t00"), -w);
    assert_eq!(field(&o, "t33"), 0.0);
    assert!(!o.contains("milton_B"));
    for x3 in ["0", "1"] {
        assert_eq!(casimir(&["tensor", "--a", "1", "--x3", x3]).status.code(), Some(2));
    }
}

#[test]
fn pressure_outputs() {
    let o = casimir(&["pressure", "--a", "1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("x3=0 (0, 0, 0.0205616758"), "{s}");
    assert!(s.contains("x3=a (0, 0, -0.0205616758"), "{s}");
    assert_eq!(casimir(&["pressure", "--a", "0"]).status.code(), Some(2));
    assert_eq!(casimir(&["pressure", "--a", "-1"]).status.code(), Some(2));
}

#[test]
fn convergence_table() {
    let o = casimir(&["convergence", "--u", "5", "--xi", "0", "--a", "1", "--x3", "0.5", "--L-list", "100,1000,10000"]);
    assert!(o.status.success());
    let rows: Vec<Vec<String>> =
        stdout(&o).lines().skip(1).map(|l| l.split(',').map(str::to_string).collect()).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r[6] == "ok"));
    let t00: Vec<f64> = rows.iter().filter(|r| r[1] == "t00").map(|r| r[4].parse().unwrap()).collect();
    assert!(t00[0] > t00[1] && t00[1] > t00[2]);

    let at = |u: &str| -> f64 {
        let o = stdout(&casimir(&["convergence", "--u", u, "--x3", "0.5", "--L-list", "100,1000"]));
        let d: Vec<f64> = o
            .lines()
            .skip(1)
            .filter(|l| l.contains(",t33,"))
            .map(|l| l.split(',').nth(4).unwrap().parse().unwrap())
            .collect();
        d[0] / d[1]
    };
    assert!(at("6") > 5.0 * at("5"));
    assert_eq!(casimir(&["convergence", "--u", "4", "--x3", "0.5", "--L-list", "100"]).status.code(), Some(2));
    assert_eq!(casimir(&["convergence", "--u", "5", "--x3", "0.5", "--L-list", "0"]).status.code(), Some(2));
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn profile_csv_symmetry_and_conformal_column() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.csv");
    let o = casimir(&[
        "profile",
        "--a",
        "1",
        "--xi",
        "0",
        "--n-points",
        "9",
        "--x3-min",
        "0.1",
        "--x3-max",
        "0.9",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = read(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x3,region,t00,t11,t22,t33,B,milton_B"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').enumerate().filter(|(i, _)| *i != 1).map(|(_, v)| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 9);
    for (i, row) in rows.iter().enumerate() {
        for k in 1..7 {
            let (x, y) = (row[k], rows[8 - i][k]);
            assert!((x - y).abs() <= 1e-9 * x.abs(), "row {i} col {k}");
        }
    }

    let o = casimir(&["profile", "--a", "1", "--xi", "0.16666666666666666", "--n-points", "11"]);
    let t00: Vec<f64> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
    assert!(t00.iter().all(|&v| v == -PI * PI / 1440.0));
}

#[test]
fn profile_outside_rows_are_null() {
    let o = casimir(&[
        "profile",
        "--a",
        "1",
        "--n-points",
        "2",
        "--x3-min",
        "-1",
        "--x3-max",
        "2",
        "--include-outside",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["region"], "left");
    assert_eq!(rows[1]["region"], "right");
    for r in rows {
        assert!(r["B"].is_null() && r["milton_B"].is_null());
    }
    assert_eq!(v["meta"]["tolerance_profile"], "strict");
    assert_eq!(v["meta"]["inputs"]["n_points"], 2);
}

#[test]
fn profile_validation_and_io_codes() {
    let base = ["profile", "--a", "1", "--n-points", "3"];
    let code = |extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        casimir(&args).status.code()
    };
    assert_eq!(code(&["--x3-min", "0", "--x3-max", "0.5"]), Some(2));
    assert_eq!(code(&["--x3-min", "0.5", "--x3-max", "0.2"]), Some(2));
    assert_eq!(code(&["--x3-min", "-1", "--x3-max", "0.5"]), Some(2));
    assert_eq!(code(&["--x3-min", "0.1", "--x3-max", "0.9", "-o", "/nonexistent/dir/p.csv"]), Some(4));
    assert_eq!(code(&["--config", "/nonexistent/cfg.txt"]), Some(4));
    assert_eq!(casimir(&["profile", "--n-points", "3"]).status.code(), Some(2));
    assert_eq!(casimir(&["profile", "--a", "0"]).status.code(), Some(2));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# inner grid\na = 2\nxi = 0\nn-points = 5\nx3_min = 0.2\nx3_max = 1.8\nformat = json\n")
        .unwrap();
    let o = casimir(&["profile", "--config", cfg.to_str().unwrap(), "--xi", "0.25", "--format", "csv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert!(s.starts_with("x3,region"));
    assert_eq!(s.lines().count(), 6);
    assert!(s.lines().nth(1).unwrap().starts_with("0.2,between,"));

    std::fs::write(&cfg, "a = 1\ncolour = blue\n").unwrap();
    assert_eq!(casimir(&["profile", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn profile_is_deterministic_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let args = |p: &Path| {
        [
            "profile",
            "--a",
            "1.5",
            "--xi",
            "0.1",
            "--n-points",
            "57",
            "--x3-min",
            "-0.7",
            "--x3-max",
            "2.2",
            "--include-outside",
            "--format",
            "json",
            "-o",
        ]
        .iter()
        .map(|s| s.to_string())
        .chain([p.display().to_string()])
        .collect::<Vec<_>>()
    };
    let paths: Vec<_> = (0..3).map(|k| dir.path().join(format!("r{k}.json"))).collect();
    let run = |p: &Path, seq: bool| {
        let mut a = args(p);
        if seq {
            a.insert(0, "--sequential".into());
        }
        let refs: Vec<&str> = a.iter().map(String::as_str).collect();
        assert!(casimir(&refs).status.success());
    };
    run(&paths[0], false);
    run(&paths[1], false);
    run(&paths[2], true);
    let first = std::fs::read(&paths[0]).unwrap();
    assert_eq!(first, std::fs::read(&paths[1]).unwrap());
    assert_eq!(first, std::fs::read(&paths[2]).unwrap());
}

#[test]
fn json_report_round_trips_through_inspect() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let again = dir.path().join("again.json");
    assert!(casimir(&["profile", "--a", "1", "--n-points", "31", "--format", "json", "-o", json.to_str().unwrap()])
        .status
        .success());
    assert!(casimir(&["inspect", json.to_str().unwrap(), "-o", again.to_str().unwrap()]).status.success());
    assert_eq!(read(&json), read(&again));

    let original = RunReport::from_json(&read(&json)).unwrap();
    let csv = stdout(&casimir(&["inspect", json.to_str().unwrap(), "--format", "csv"]));
    for (row, line) in original.rows.iter().zip(csv.lines().skip(1)) {
        let t00: f64 = line.split(',').nth(2).unwrap().parse().unwrap();
        assert_eq!(t00.to_bits(), row.t00.to_bits());
    }

    std::fs::write(&json, "{\"meta\": 1}").unwrap();
    assert_eq!(casimir(&["inspect", json.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn tolerance_profile_from_environment() {
    let run = |v: &str| {
        Command::new(env!("CARGO_BIN_EXE_casimir"))
            .args(["profile", "--a", "1", "--n-points", "1", "--x3-min", "0.3", "--x3-max", "0.4", "--format", "json"])
            .env("CASIMIR_TOLERANCE_PROFILE", v)
            .output()
            .unwrap()
    };
    let fast: serde_json::Value = serde_json::from_slice(&run("fast").stdout).unwrap();
    assert_eq!(fast["meta"]["tolerance_profile"], "fast");
    assert_eq!(run("sloppy").status.code(), Some(2));
}
