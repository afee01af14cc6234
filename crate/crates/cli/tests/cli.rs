use std::process::{Command, Output};
use std::time::{Duration, Instant};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf-ent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn parse_rows(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines
        .next()
        .unwrap()
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn verify_default_passes_quickly() {
    let start = Instant::now();
    let o = run(&["verify"]);
    assert!(start.elapsed() < Duration::from_secs(30));
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("cubic identity: max defect ≤ 1e-10"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_below_machine_precision_fails() {
    let o = run(&["verify", "--tolerance", "1e-16"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--tolerance", "abc"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--tolerance", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let out = out.to_str().unwrap();
    assert_eq!(
        run(&["sweep-time", "--q", "1,-2", "--out", out])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["sweep-time", "--points", "1", "--out", out])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["sweep-q", "--min", "3", "--max", "2", "--out", out])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["mc-ep", "--q", "2", "--t", "1", "--samples", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["mc-ep", "--q", "2"]).status.code(), Some(2));
}

#[test]
fn unwritable_path_is_a_runtime_failure() {
    let o = run(&[
        "sweep-q",
        "--points",
        "3",
        "--out",
        "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sweep_time_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("time.csv");
    let p = path.to_str().unwrap();
    let o = run(&[
        "sweep-time",
        "--q",
        "1,2",
        "--points",
        "801",
        "--periods",
        "1",
        "--out",
        p,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(!text.contains('\r'));
    let (header, rows) = parse_rows(&text);
    assert_eq!(
        header.join(","),
        "q,t,E,E_tilde,ep,choi_vs_trace_dev,closed_vs_numeric_dev"
    );
    assert_eq!(rows.len(), 1602);

    let q1: Vec<_> = rows.iter().filter(|r| r[0] == 1.0).collect();
    assert!(q1.iter().all(|r| r[2].abs() <= 1e-12));
    let e_max_q2 = rows
        .iter()
        .filter(|r| r[0] == 2.0)
        .map(|r| r[2])
        .fold(0.0, f64::max);
    // 801 points per period: the maximum at c = −1 is sampled exactly
    assert!((e_max_q2 - 0.4608).abs() < 1e-6, "{e_max_q2}");
    for r in &rows {
        assert!((r[3] - 0.75).abs() <= 1e-10);
        assert!((0.0..=0.75).contains(&r[2]));
        assert!((-1e-12..=4.0 / 9.0 * 0.5 + 1e-12).contains(&r[4]));
        assert!(r[5] <= 1e-10 && r[6] <= 1e-10);
    }
    // (q, t) ordering
    assert!(rows
        .windows(2)
        .all(|w| w[0][0] < w[1][0] || (w[0][0] == w[1][0] && w[0][1] < w[1][1])));

    // byte-deterministic
    let path2 = dir.path().join("time2.csv");
    run(&[
        "sweep-time",
        "--q",
        "1,2",
        "--points",
        "801",
        "--periods",
        "1",
        "--out",
        path2.to_str().unwrap(),
    ]);
    assert_eq!(
        std::fs::read(&path).unwrap(),
        std::fs::read(&path2).unwrap()
    );
}

#[test]
fn sweep_q_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.csv");
    let o = run(&[
        "sweep-q",
        "--min",
        "1",
        "--max",
        "5",
        "--points",
        "50",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = parse_rows(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(header.join(","), "q,t_star,E_max,analytic_E_max,deviation");
    assert_eq!(rows.len(), 50);
    assert_eq!(rows[0][0], 1.0);
    assert!(rows[0][2].abs() <= 1e-12);
    let threshold = 1.0 + 2f64.sqrt();
    for r in &rows {
        assert!(r[4] <= 1e-8);
        if r[0] >= 2.4142136 {
            assert!((r[2] - 0.5).abs() <= 1e-9);
        }
    }
    let rising: Vec<f64> = rows
        .iter()
        .filter(|r| r[0] <= threshold)
        .map(|r| r[2])
        .collect();
    assert!(rising.windows(2).all(|w| w[1] >= w[0]));
}

#[test]
fn mc_ep_runs() {
    let o = run(&[
        "mc-ep",
        "--q",
        "1",
        "--t",
        "0.7",
        "--samples",
        "1000",
        "--seed",
        "9",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("closed_form  0.0000000000000000e0"));

    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = run(&[
            "mc-ep",
            "--q",
            "2",
            "--alpha-t",
            "3.141592653589793",
            "--samples",
            "100000",
            "--seed",
            "42",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let row: Vec<f64> = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|x| x.parse().unwrap())
        .collect();
    let (estimate, se, closed) = (row[4], row[5], row[6]);
    assert!((closed - 0.2048).abs() < 1e-12);
    assert!((estimate - 0.2048).abs() <= 3.0 * se);
}
