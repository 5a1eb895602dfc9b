use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_commensura"));
    for a in args {
        match a.strip_prefix('@') {
            Some(name) => cmd.arg(fixture(name)),
            None => cmd.arg(a),
        };
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn expect_value(args: &[&str], value: &str) {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), value, "{args:?}");
}

#[test]
fn ia_of_z_against_z_plus_c2() {
    expect_value(&["ia", "@z.json", "@z_c2.json"], "2");
    expect_value(&["ia", "@z_c2.json", "@z.json"], "1/2");
}

#[test]
fn ia_of_identical_files_is_one() {
    expect_value(&["ia", "@z_c2.json", "@z_c2.json"], "1");
}

#[test]
fn ia_rank_mismatch_is_a_precondition_error() {
    assert_eq!(run(&["ia", "@z.json", "@z2.json"]).status.code(), Some(2));
}

#[test]
fn ie_upper_triangular_alpha() {
    expect_value(&["ie", "@ut2_regular.json", "--alpha", "@alpha_diag_1_2.json"], "2");
    expect_value(&["ie", "@ut2_regular.json", "--alpha", "@alpha_identity.json"], "1");
}

#[test]
fn ie_pair_regular_against_trivial_plus_sign() {
    expect_value(&["ie", "@c2_regular.json", "@c2_trivial_sign.json"], "2");
    expect_value(&["ie", "@c2_regular.json", "@c2_trivial_sign.json", "--choice", "1"], "2");
    expect_value(&["ie", "@c2_trivial_sign.json", "@c2_regular.json"], "1/2");
}

#[test]
fn compose_multiplies_indices() {
    let o = run(&["--format", "json", "compose", "@corr_z4_z2.json", "@corr_z2_z8.json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["index"], "2");
    assert_eq!(v["result"]["composite"]["apex"]["torsion"], serde_json::json!(["4"]));
}

#[test]
fn check_welldef_s3() {
    let o = run(&["check", "welldef", "--group", "S3", "--trials", "100", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("seed: 42"), "{text}");
    assert!(text.contains("welldef: 100/100 pass"), "{text}");
}

#[test]
fn check_welldef_permutation_lattices() {
    for g in ["c2", "c3", "s3"] {
        let o = run(&["check", "welldef", "--group", g, "--lattice", "permutation", "--trials", "20"]);
        assert_eq!(o.status.code(), Some(0), "{g}");
    }
}

#[test]
fn check_theorem_w_m2_f3() {
    let o = run(&["--format", "json", "check", "theorem-w", "--n", "2", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["exponent"], "2");
    assert_eq!(v["result"]["divides"], true);
}

#[test]
fn check_theorem_o_catalog() {
    let o = run(&["check", "theorem-o"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn check_multiplicativity() {
    let o = run(&["--format", "json", "check", "multiplicativity", "--trials", "500", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["result"]["passed"], 500);
    assert_eq!(v["result"]["failures"], serde_json::json!([]));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["--format", "json", "check", "welldef", "--group", "c3", "--trials", "30", "--seed", "5"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let args = ["check", "multiplicativity", "--trials", "20", "--seed", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn malformed_input_exits_one() {
    assert_eq!(run(&["ia", "@malformed.json", "@z.json"]).status.code(), Some(1));
    assert_eq!(run(&["ia", "@does_not_exist.json", "@z.json"]).status.code(), Some(1));
    assert_eq!(run(&["check", "theorem-w", "--n", "two", "--q", "3"]).status.code(), Some(1));
}

#[test]
fn cap_exceeded_exits_three() {
    assert_eq!(run(&["--cap", "10", "oracle", "aut-order", "@c2_4.json"]).status.code(), Some(3));
}

#[test]
fn oracle_and_finring_outputs() {
    expect_value(&["oracle", "aut-order", "@c2_4.json"], "20160");
    expect_value(&["oracle", "homs", "@c2_4.json", "@c4.json"], "16");
    let o = run(&["--format", "json", "finring", "units", "@z8.json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["count"], 4);
    let o = run(&["--format", "json", "finring", "radical", "@f4.json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["count"], 1);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
