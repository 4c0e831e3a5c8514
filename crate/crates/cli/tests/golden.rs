use std::path::Path;
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("seq_a002212.tsv", &["seq", "--family", "a002212", "--n", "9"]),
    ("seq_a002212.csv", &["seq", "--family", "a002212", "--n", "9", "--format", "csv"]),
    ("seq_a002212.jsonl", &["seq", "--family", "a002212", "--n", "9", "--format", "json-lines"]),
    ("seq_skew-sj_j2.tsv", &["seq", "--family", "skew-sj", "--j", "2", "--n", "14"]),
    ("seq_skew-sj_j0.tsv", &["seq", "--family", "skew-sj", "--j", "0", "--n", "15"]),
    ("seq_dual-gj_j2.tsv", &["seq", "--family", "dual-gj", "--j", "2", "--n", "17"]),
    ("seq_dual-gj_j3.tsv", &["seq", "--family", "dual-gj", "--j", "3", "--n", "17"]),
    ("seq_hoppy-neg_k2.tsv", &["seq", "--family", "hoppy-neg", "--k", "2", "--n", "5"]),
    ("seq_hoppy-neg_k3.tsv", &["seq", "--family", "hoppy-neg", "--k", "3", "--n", "5"]),
    ("seq_hoppy-neg_k4.tsv", &["seq", "--family", "hoppy-neg", "--k", "4", "--n", "5"]),
    ("seq_ternary-T.tsv", &["seq", "--family", "ternary-T", "--n", "6"]),
    ("seq_deutsch-phi.tsv", &["seq", "--family", "deutsch-phi", "--t", "1", "--j", "2", "--m", "4", "--n", "12"]),
    ("seq_amplitude.tsv", &["seq", "--family", "amplitude", "--n", "12"]),
    ("seq_amplitude_k3.tsv", &["seq", "--family", "amplitude", "--k", "3", "--n", "12"]),
    ("seq_kemp-valley.tsv", &["seq", "--family", "kemp-valley", "--n", "6"]),
    ("seq_kemp-peak.tsv", &["seq", "--family", "kemp-peak", "--n", "6"]),
    ("seq_horton-Rp.tsv", &["seq", "--family", "horton-Rp", "--k", "2", "--a", "1", "--n", "12"]),
    ("seq_marked-ph.tsv", &["seq", "--family", "marked-ph", "--k", "3", "--n", "10"]),
    ("seq_retakh.tsv", &["seq", "--family", "retakh", "--n", "12"]),
    ("seq_retakh-Gk.tsv", &["seq", "--family", "retakh-Gk", "--k", "3", "--n", "12"]),
    ("seq_skew-red.tsv", &["seq", "--family", "skew-red", "--n", "5"]),
    ("seq_skew-red_w2.tsv", &["seq", "--family", "skew-red", "--w-power", "2", "--n", "10"]),
    ("seq_ubar.tsv", &["seq", "--family", "ubar", "--k", "2", "--n", "10"]),
    ("bij_multiedge-motzkin_3.tsv", &["bij", "--family", "multiedge-motzkin", "--n", "3"]),
    ("bij_marked-skew_4.tsv", &["bij", "--family", "marked-skew", "--n", "4"]),
    ("bij_rotation_1.tsv", &["bij", "--family", "rotation", "--n", "1"]),
    ("asym_red-edges.csv", &["asym", "--family", "red-edges", "--n", "25", "--max", "100"]),
];

#[test]
fn fixtures_match_byte_for_byte() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    for (name, args) in CASES {
        let want = std::fs::read(dir.join(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        let out = Command::new(env!("CARGO_BIN_EXE_pathgarden")).args(*args).output().unwrap();
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&want), "{name}");
    }
}

#[test]
fn every_fixture_is_exercised() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    for entry in std::fs::read_dir(dir).unwrap() {
        let name = entry.unwrap().file_name().into_string().unwrap();
        assert!(CASES.iter().any(|(n, _)| *n == name), "orphan fixture {name}");
    }
}

#[test]
fn every_seq_family_has_a_fixture() {
    let families = [
        "a002212", "skew-sj", "dual-gj", "hoppy-neg", "ternary-T", "deutsch-phi", "amplitude", "kemp-valley",
        "kemp-peak", "horton-Rp", "marked-ph", "retakh", "skew-red", "ubar", "retakh-Gk",
    ];
    for f in families {
        assert!(
            CASES.iter().any(|(_, args)| args[0] == "seq" && args[2] == f),
            "no fixture for {f}"
        );
    }
}
