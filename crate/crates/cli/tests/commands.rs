use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathgarden")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn values(o: &Output) -> String {
    stdout(o).lines().map(|l| l.split('\t').nth(1).unwrap()).collect::<Vec<_>>().join(",")
}

#[test]
fn printed_sequences() {
    let o = run(&["seq", "--family", "a002212", "--n", "8"]);
    assert_eq!(values(&o), "1,1,3,10,36,137,543,2219,9285");
    let o = run(&["seq", "--family", "skew-sj", "--j", "2", "--n", "14"]);
    assert_eq!(values(&o), "1,3,10,37,145,589,2455");
}

#[test]
fn checks_pass() {
    for args in [
        &["check", "--family", "skew", "--max", "12"][..],
        &["check", "--family", "deutsch-strip", "--m", "5", "--max", "12"],
        &["check", "--family", "bijections", "--max", "6"],
        &["check", "--family", "dual-skew", "--max", "10"],
        &["check", "--family", "a002212", "--max", "7"],
        &["check", "--family", "kdyck", "--k", "2", "--max", "5"],
        &["check", "--family", "amplitude", "--max", "10"],
        &["check", "--family", "ternary", "--max", "6"],
        &["check", "--family", "horton", "--a", "0", "--max", "8"],
        &["check", "--family", "marked", "--max", "7"],
        &["check", "--family", "retakh", "--max", "8"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("PASS"), "{args:?}");
        assert!(!stdout(&o).contains("FAIL"), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["seq", "--family", "nope", "--n", "3"][..],
        &["seq", "--family", "skew-sj", "--n", "3"],
        &["seq", "--family", "a002212"],
        &["check", "--family", "nope", "--max", "3"],
        &["check", "--family", "deutsch-strip", "--max", "3"],
        &["bij", "--family", "marked-skew", "--n", "0"],
        &["asym", "--family", "nope"],
        &["seq", "--family", "a002212", "--n", "x"],
        &["frobnicate"],
        &["seq", "--family", "deutsch-phi", "--t", "3", "--j", "0", "--m", "3", "--n", "4"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn bijection_tables() {
    let o = run(&["bij", "--family", "multiedge-motzkin", "--n", "3"]);
    assert_eq!(stdout(&o).lines().count(), 10);
    let o = run(&["bij", "--family", "marked-skew", "--n", "4"]);
    assert_eq!(stdout(&o).lines().count(), 10);
    let o = run(&["bij", "--family", "rotation", "--n", "1"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn asym_report_shape() {
    let o = run(&["asym", "--family", "amplitude_avg", "--n", "40", "--max", "160"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,exact,asymptotic,rel_dev"));
    let devs: Vec<f64> = lines.map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(devs.len(), 3);
    assert!(devs.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn json_lines_parse() {
    let o = run(&["seq", "--family", "kemp-peak", "--n", "3", "--format", "json-lines"]);
    for (i, line) in stdout(&o).lines().enumerate() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["n"], i);
        assert!(v["value"].is_string());
    }
}
