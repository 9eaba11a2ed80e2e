use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeta-bound")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_theorem_passes_with_defaults() {
    let o = run(&["check-theorem"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("D1 = "), "{s}");
    assert!(s.trim_end().ends_with("RESULT: PASS"), "{s}");
}

#[test]
fn check_theorem_fails_for_low_target() {
    let o = run(&["check-theorem", "--target", "0.5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("RESULT: FAIL"));
}

#[test]
fn check_theorem_reads_parameter_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    std::fs::write(&path, "# standard point\nk = 1.16\ntheta = 7.5\na0 = 3.37\nt0 = 5.867e9\n").unwrap();
    let o = run(&["check-theorem", "--params", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));

    std::fs::write(&path, "k = 1.16\ntheta = 7.5\na0 = 3.37\n").unwrap();
    let o = run(&["check-theorem", "--params", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn infeasible_parameters_are_reported() {
    let o = run(&["check-theorem", "--a0", "40"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("RESULT: FAIL") || !o.stderr.is_empty());
}

#[test]
fn eval_prints_enclosure_and_method() {
    let o = run(&["eval", "--t", "14.134725141734693", "--digits", "12"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("method EM"), "{s}");
    let o = run(&["eval", "--t", "1000", "--t-hi", "1000.0005"]);
    assert!(stdout(&o).contains("method RS"));
}

#[test]
fn verify_range_small_interval() {
    let o = run(&["verify-range", "--lo", "2", "--hi", "3", "--a", "0.732"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("failures 0"), "{s}");
    let o = run(&["verify-range", "--lo", "2", "--hi", "3", "--a", "0.1", "--fail-fast"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn records_then_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rec.txt");
    let p = path.to_str().unwrap();
    let o = run(&["records", "--lo", "2", "--hi", "6", "--out", p]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# zeta-records v1"));
    let o = run(&["table", "--records", p, "--lo", "2", "--hi", "6"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("constant 0."), "{s}");
}

#[test]
fn records_refuse_long_ranges_without_flag() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.txt");
    let o = run(&["records", "--lo", "1e5", "--hi", "1e8", "--out", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!p.exists());
}

#[test]
fn crossover_and_min_q() {
    let o = run(&["crossover", "--lo", "200", "--hi", "300"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("t in [226.70"), "{s}");
    let o = run(&["min-q", "--check", "4.678"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.contains("certified"), "{s}");
}

#[test]
fn check_lemmas_small_batteries() {
    let o = run(&[
        "check-lemmas",
        "--lemma1-trials",
        "50",
        "--lemma2-max-len",
        "8",
        "--lemma3-samples",
        "3",
        "--moments-max",
        "200",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn optimize_params_writes_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("best.txt");
    let o = run(&[
        "optimize-params",
        "--k-range",
        "1.15,1.17",
        "--theta-range",
        "7,8",
        "--a0-range",
        "3.3,3.4",
        "--grid",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("theta = "));
}

#[test]
fn bad_flags_use_usage_exit_code() {
    let o = run(&["eval"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eval", "--t", "abc"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify-range", "--lo", "0.1", "--hi", "3", "--a", "0.732"]);
    assert_ne!(o.status.code(), Some(0));
}
