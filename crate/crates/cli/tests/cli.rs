use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bessel-bounds")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

/// Value of `col` in the first data row of a CSV document.
fn field(csv: &str, col: &str) -> String {
    let mut lines = csv.lines();
    let head: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    row[head.iter().position(|h| *h == col).unwrap()].to_string()
}

fn value(args: &[&str]) -> f64 {
    let o = run(args);
    assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    field(&stdout(&o), "value").parse().unwrap()
}

#[test]
fn eval_examples() {
    assert!((value(&["eval", "--func", "K", "--nu", "0.5", "--x", "1"]) - 0.461_068_504_4).abs() < 1e-10);
    assert_eq!(value(&["eval", "--func", "I", "--nu", "0", "--x", "0"]), 1.0);
    // √(2/(πx))(cosh x − 1) at x = 1
    let l = value(&["eval", "--func", "L", "--nu", "0.5", "--x", "1"]);
    let want = (2.0 / std::f64::consts::PI).sqrt() * (1f64.cosh() - 1.0);
    assert!((l - want).abs() < 1e-14);
    let o = run(&["eval", "--func", "I", "--nu", "0", "--x", "800"]);
    assert!(field(&stdout(&o), "value").contains("e345"));
}

#[test]
fn eval_json_has_sorted_keys() {
    let o = run(&["eval", "--func", "K", "--nu", "1", "--x", "2", "--scaled", "--format", "json"]);
    let s = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["status"], "ok");
    assert!(s.find("\"abs_err\"").unwrap() < s.find("\"value\"").unwrap());
}

#[test]
fn domain_and_usage_errors_exit_2() {
    for args in [
        &["eval", "--func", "I", "--nu", "0", "--x", "-1"][..],
        &["eval", "--func", "Q", "--nu", "0", "--x", "1"],
        &["eval", "--func", "K", "--x", "1"],
        &["integral", "--nu", "0.5", "--beta", "1.5", "--family", "upper-k", "--x", "1"],
        &["integral", "--nu", "0", "--beta", "0.1", "--gamma", "0.1", "--x", "1"],
        &["verify", "--case", "no-such-case"],
        &["sharp", "--const", "a", "--nu", "-0.75"],
        &["sharp", "--const", "sup", "--expr", "open3", "--nu", "0", "--beta", "0.5"],
        &["tables", "--which", "3"],
    ] {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
}

#[test]
fn io_errors_exit_3() {
    assert_eq!(code(&run(&["tables", "--out", "/nonexistent-dir/t.csv"])), 3);
    assert_eq!(code(&run(&["eval", "--config", "/nonexistent-dir/c.cfg"])), 3);
}

#[test]
fn gamma_is_negated_beta() {
    let a = value(&["integral", "--nu", "0", "--gamma", "0.5", "--power", "0", "--x", "2"]);
    let b = value(&["integral", "--nu", "0", "--beta", "-0.5", "--power", "0", "--x", "2"]);
    assert_eq!(a, b);
    // between e^{−γx} x^ν I_{ν+1} and 2(ν+1)/((2ν+1)(1−γ)−γ) times it
    assert!(a > 0.2 && a < 1.7);
}

#[test]
fn integral_families() {
    let v = value(&["integral", "--family", "lower-i", "--nu", "0.5", "--power", "1.5", "--x", "1"]);
    assert!((v - 0.293_525_326_347_479_6).abs() < 1e-12);
    let v = value(&["integral", "--family", "full-line", "--nu", "0.5", "--beta", "0.6"]);
    assert!((v - (2.0 * std::f64::consts::PI).sqrt() / 0.64).abs() < 1e-12);
}

#[test]
fn config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# defaults\nfunc = K\nnu = 0.5\nx = 2\n").unwrap();
    let c = cfg.to_str().unwrap();
    let from_cfg = value(&["eval", "--config", c]);
    let flag_wins = value(&["eval", "--config", c, "--x", "1"]);
    assert!((from_cfg - (std::f64::consts::PI / 4.0).sqrt() * (-2f64).exp()).abs() < 1e-14);
    assert!((flag_wins - 0.461_068_504_4).abs() < 1e-10);

    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(code(&run(&["eval", "--config", c])), 2);
}

#[test]
fn verify_single_case() {
    let o = run(&["verify", "--case", "lowerk2.upper", "--nu", "2", "--beta", "0.3"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().skip(1).collect();
    assert_eq!(rows.len(), 25);
    assert!(rows.iter().all(|r| r.starts_with("lowerk2.upper,2,0.3,")));
}

#[test]
fn verify_reports_violations_with_exit_1() {
    let o = run(&["verify", "--case", "doubleivb.lower", "--beta", "-0.5", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["violations"], v["summary"]["records"]);
}

#[test]
fn verify_exit_code_follows_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("all.csv");
    let o = run(&["verify", "--suite", "all", "--out", out.to_str().unwrap()]);
    let csv = std::fs::read_to_string(&out).unwrap();
    let violating =
        csv.lines().skip(1).filter(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap() < -1e-9).count();
    assert!(csv.lines().count() > 10_000);
    assert_eq!(code(&o), if violating == 0 { 0 } else { 1 });
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--case", "nasell,besi22", "--nu", "1"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains('\r'));
    let t = ["tables", "--which", "1,2", "--compare"];
    assert_eq!(run(&t).stdout, run(&t).stdout);
}

#[test]
fn sharp_examples() {
    let a = value(&["sharp", "--const", "a", "--nu", "0"]);
    assert!((0.23..=0.27).contains(&a));
    let b = value(&["sharp", "--const", "b", "--nu", "0"]);
    assert!((0.70..=0.80).contains(&b));
    let o = run(&["sharp", "--const", "sup", "--expr", "open3", "--nu", "0", "--beta", "-0.5"]);
    let s = stdout(&o);
    assert!(field(&s, "value").parse::<f64>().unwrap().is_finite());
    assert!(field(&s, "argmin_x").parse::<f64>().unwrap() > 0.0);
    assert_eq!(field(&s, "label"), "empirical — not a proof");
}

#[test]
fn tables_output() {
    let o = run(&["tables", "--which", "1", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 43);

    let o = run(&["tables", "--which", "2", "--compare"]);
    assert_eq!(code(&o), 0);
    let worst =
        stdout(&o).lines().skip(1).map(|l| l.rsplit(',').next().unwrap().parse::<f64>().unwrap()).fold(0.0, f64::max);
    assert!(worst <= 5e-4);

    let o = run(&["tables", "--which", "1,2", "--format", "json", "--compare"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["T1"]["cells"].as_array().unwrap().len(), 42);
    assert_eq!(v["T2"]["cells"].as_array().unwrap().len(), 42);
    assert!(v["T2"]["max_abs_diff"].as_f64().unwrap() <= 5e-4);
}
