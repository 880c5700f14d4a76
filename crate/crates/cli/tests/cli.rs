//! End-to-end runs of the `rsfan` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/v1").join(rel).display().to_string()
}

fn rsfan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsfan")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn f2_dot_is_the_representation_figure() {
    let o = rsfan(&["examples", "f2", "--dot"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), std::fs::read_to_string(data("golden/fig4_repr.dot")).unwrap());
    let o = rsfan(&["examples", "f4", "--dot", "--spec"]);
    assert_eq!(stdout(&o), std::fs::read_to_string(data("golden/fig5_spec.dot")).unwrap());
}

#[test]
fn verify_rs_exit_status() {
    let o = rsfan(&["verify-rs", &data("structures/three.ts")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: all axioms pass"));

    let sq = data("structures/three-squared.ts");
    assert_eq!(rsfan(&["verify-rs", &sq]).status.code(), Some(1));
    assert_eq!(rsfan(&["verify-rs", &sq, "--chars", "h3,h4"]).status.code(), Some(0));
}

#[test]
fn characterize_a_non_fan() {
    let o = rsfan(&["characterize", &data("structures/three-squared.ts"), "--chars", "3,4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("fan: no\n"), "{text}");
    assert!(text.contains("(2.i) condition [Z]: no\n"), "{text}");
    assert!(text.contains("fan ⟺ (2.i) ∧ (2.ii) ∧ (2.iii): yes\n"), "{text}");
}

#[test]
fn structure_files_round_trip_through_the_cli() {
    for name in ["three", "f1", "f1-idem", "f2", "f3", "f4"] {
        let o = rsfan(&["examples", name, "--structure"]);
        let file = std::fs::read_to_string(data(&format!("structures/{name}.ts"))).unwrap();
        assert_eq!(stdout(&o), file, "{name}");
        let check = rsfan(&["check-ts", &data(&format!("structures/{name}.ts"))]);
        assert!(check.status.success(), "{name}");
        assert!(stdout(&check).contains("condition [Z]: holds"), "{name}");
    }
}

#[test]
fn parse_errors_report_positions() {
    let dir = std::env::temp_dir().join(format!("rsfan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.ts");
    std::fs::write(&path, "structure t\nconstants 1 0 -1\ngenerators x\nrelations\n  x^2 = w\nend\n").unwrap();
    let o = rsfan(&["check-ts", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 5, column 9"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();

    let o = rsfan(&["quotient", "example:f3", "--ideal", "0,q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("unknown element name `q`"));
}

#[test]
fn quotient_by_zero_ideal_identifies_z_with_one() {
    let o = rsfan(&["quotient", "example:f3", "--ideal", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("{1, z, x², z²}"));
    let o = rsfan(&["--json", "quotient", "example:f1", "--chars", "h1,h2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["fan"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--json", "characterize", "example:f2"][..],
        &["rs3-search", "--max", "3", "--count", "6"][..],
        &["order", "example:f4"][..],
    ] {
        let a = rsfan(args);
        let b = rsfan(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = rsfan(&["--seed", "7", "rs3-search", "--max", "2", "--count", "4"]);
    let b = rsfan(&["--seed", "8", "rs3-search", "--max", "2", "--count", "4"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn pring_lex_check() {
    let o = rsfan(&["pring", "check", "--preorder", "lex", "--range", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("support on the sample: {0X+0}"), "{text}");
    assert!(text.contains("radical: fails at"), "{text}");
    assert_eq!(rsfan(&["pring", "check", "--preorder", "sos", "--range", "3"]).status.code(), Some(1));
}

#[test]
fn reproduce_writes_into_the_output_directory() {
    let dir = std::env::temp_dir().join(format!("rsfan-reproduce-{}", std::process::id()));
    let o = rsfan(&["reproduce", "--criterion", "1", "--criterion", "6", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("[PASS]  1 cardinalities"), "{text}");
    assert!(text.contains("2/2 criteria pass"), "{text}");
    assert_eq!(std::fs::read_to_string(dir.join("reproduce.txt")).unwrap(), text);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("reproduce.json")).unwrap()).unwrap();
    assert_eq!(v["passed"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
