use std::path::PathBuf;
use std::process::Command;

use pseudalg_cli::specfile::{emit_spec, parse_spec};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pseudalg"))
}

fn spec_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn json_report_schema() {
    let file = spec_path("coboundary.spec");
    let (code, out, _) = run(&["check", file.to_str().unwrap(), "--suite", "assoc", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["suite"], "assoc");
    assert_eq!(value["verdict"], "pass");
    for check in value["checks"].as_array().unwrap() {
        assert!(check["name"].is_string() && check["inputs"].is_array());
        assert_eq!(check["verdict"], "pass");
        assert!(check.get("defect").is_none());
    }
}

#[test]
fn failing_check_prints_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(spec_path("twisted-square.spec")).unwrap().replace("[d1 # 1]", "[d1 # d1^2]");
    let file = write_temp(&dir, "g.spec", &text);
    let (code, out, _) = run(&["check", &file, "--suite", "compat"]);
    assert_eq!(code, 1);
    assert!(out.contains("fail  A/compatibility"), "{out}");
    assert!(out.contains("at (e1, e1): "), "{out}");

    let (_, json, _) = run(&["check", &file, "--suite", "compat", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let check = &value["checks"][0];
    assert_eq!(check["inputs"], serde_json::json!(["e1", "e1"]));
    assert!(check["defect"].as_str().unwrap().contains("@H"));
}

#[test]
fn errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_temp(&dir, "bad.spec", "hopf polynomial 1\nalgebra A generators e1\nproduct e1 e1 = [d1 # 1 e1\n");
    let (code, _, err) = run(&["check", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3, column"), "{err}");

    let unknown = write_temp(&dir, "unknown.spec", "hopf polynomial 1\nalgebra A generators e1 e2\nproduct e1 e3 = 0\n");
    let (code, _, err) = run(&["check", &unknown]);
    assert_eq!(code, 2);
    assert!(err.contains("e3"), "{err}");

    let file = spec_path("coboundary.spec");
    assert_eq!(run(&["check", file.to_str().unwrap(), "--suite", "nope"]).0, 2);
    assert_eq!(run(&["check", "/nonexistent/file.spec"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["aybe", spec_path("twisted-square.spec").to_str().unwrap()]).0, 2);
}

#[test]
fn dual_and_cur_write_new_spec_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dual.spec");
    let (code, _, err) = run(&["dual", spec_path("coboundary.spec").to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let dual = std::fs::read_to_string(&out).unwrap();
    assert!(dual.contains("delta a1 = (a2, a1)") && dual.contains("delta a2 = (a2, a2)"), "{dual}");
    assert_eq!(emit_spec(&parse_spec(&dual).unwrap()), dual);
    assert_eq!(run(&["check", out.to_str().unwrap()]).0, 0);

    let cur = dir.path().join("cur.spec");
    let input = spec_path("twisted-square-at-k.spec");
    for target in ["polynomial 2", "cyclic 3"] {
        let (code, _, err) = run(&["cur", input.to_str().unwrap(), "--target-hopf", target, "-o", cur.to_str().unwrap()]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(run(&["check", cur.to_str().unwrap()]).0, 0, "{target}");
    }
    let over_kd = spec_path("twisted-square.spec");
    assert_eq!(run(&["cur", over_kd.to_str().unwrap(), "--target-hopf", "polynomial 1", "-o", cur.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["cur", input.to_str().unwrap(), "--target-hopf", "lattice", "-o", cur.to_str().unwrap()]).0, 2);
}

#[test]
fn d0_of_r_is_the_coboundary() {
    let file = spec_path("coboundary.spec");
    let (code, out, _) = run(&["d0", file.to_str().unwrap(), "--element", "(e2, e1) - (e1, e2)"]);
    assert_eq!(code, 0);
    assert!(out.contains("d0 e1 = (e1, e1)\n") && out.contains("d0 e2 = (e2, e1)\n"), "{out}");
    let (code, out, _) = run(&["d0", file.to_str().unwrap(), "--element", "e2"]);
    assert_eq!(code, 0);
    assert!(out.contains("d0 e1 = -e1\n") && out.contains("d0 e2 = 0\n"), "{out}");
    assert_eq!(run(&["d0", file.to_str().unwrap(), "--element", "(e2, e9)"]).0, 2);
}

#[test]
fn suites_with_group_hopf_algebras() {
    let dir = tempfile::tempdir().unwrap();
    let text = "hopf group 3\n1 2 3\n2 3 1\n3 1 2\nidentity 1\n\nalgebra G generators x y\nproduct y x = [1 # 1] @H x\nproduct y y = [1 # 1] @H y\nr = (y, x) - (x, y)\n";
    let file = write_temp(&dir, "z3.spec", text);
    let (code, out, _) = run(&["check", &file]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["thm61", &file]);
    assert_eq!(code, 0);
    assert!(out.contains("anti-symmetric"), "{out}");
}

#[test]
fn degree_bound_flag_and_option() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(spec_path("coboundary.spec")).unwrap() + "option degree-bound 2\n";
    let file = write_temp(&dir, "b.spec", &text);
    let (_, out, _) = run(&["check", &file, "--suite", "hopf"]);
    assert!(out.contains("degree bound 2"), "{out}");
    let (_, out, _) = run(&["check", &file, "--suite", "hopf", "--degree-bound", "3"]);
    assert!(out.contains("degree bound 3"), "{out}");
}
