use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gemlink-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gemlink")).arg("-o").arg(out).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn wings_writes_outputs() {
    let out = scratch("wings");
    let o = run(&out, &["wings", data("synthetic_n12.movelog").to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    for f in ["wing_left.json", "wing_right.svg", "h1.obj"] {
        assert!(out.join(f).exists(), "{f}");
    }
}

#[test]
fn dq_reports_invariants() {
    let out = scratch("dq");
    let o = run(&out, &["dq", data("weber_seifert.dq").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("genus 0"), "{text}");
    assert!(out.join("linking_matrix.csv").exists());
}

#[test]
fn gauss_frame_and_link_agree() {
    let out = scratch("gauss");
    let o = run(&out, &["gauss", data("r524.gauss").to_str().unwrap(), "--frame=-3,-3,-3", "--realize"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let cyl = out.join("cylinders.json");
    let o = run(&out, &["link", cyl.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = std::fs::read_to_string(out.join("linking_matrix.csv")).unwrap();
    assert_eq!(csv.lines().next().unwrap().split(',').next().unwrap().trim(), "-3");
}

#[test]
fn input_errors_exit_2() {
    let out = scratch("bad");
    let bad = out.join("bad.gauss");
    std::fs::write(&bad, "((+1,+1))").unwrap();
    assert_eq!(code(&run(&out, &["gauss", bad.to_str().unwrap()])), 2);
    let garbage = out.join("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    assert_eq!(code(&run(&out, &["link", garbage.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&out, &["--tolerance", "-1", "dq", data("weber_seifert.dq").to_str().unwrap()])), 2);
    let log = out.join("bad.movelog");
    std::fs::write(&log, "n=2\n1 1 a9 1 2 3 4 P1 split=4,3|2,1 newz=1,4\n").unwrap();
    assert_eq!(code(&run(&out, &["wings", log.to_str().unwrap()])), 2);
}

#[test]
fn geometric_failures_exit_3() {
    let out = scratch("geom");
    let cone = out.join("cone.json");
    std::fs::write(&cone, r#"{"apex": [3, 0, 0], "base": [[0, 0, 0], [1, 0, 0]]}"#).unwrap();
    assert_eq!(code(&run(&out, &["cone", cone.to_str().unwrap()])), 3);
    let link = out.join("close.json");
    std::fs::write(&link, r#"{"components": [[[0,0,0],[1,0,0],[0,1,0]], [[0,0,0],[1,0,1],[0,1,1]]]}"#).unwrap();
    assert_eq!(code(&run(&out, &["link", link.to_str().unwrap()])), 3);
}

#[test]
fn check_bounds_exit_codes() {
    let out = scratch("bounds");
    let o = run(&out, &["gauss", data("r524.gauss").to_str().unwrap(), "--realize"]);
    assert_eq!(code(&o), 0);
    let realized = out.join("realized.json");
    assert_eq!(code(&run(&out, &["check-bounds", realized.to_str().unwrap(), "-n", "12"])), 0);
    assert_eq!(code(&run(&out, &["check-bounds", realized.to_str().unwrap(), "-n", "1"])), 3);
}
