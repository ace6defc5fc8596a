use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lefschetz"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lefschetz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn class_of_small_matrices() {
    for (m, want) in [
        ("[[1,0],[0,1]]", "+2·(x−1)"),
        ("[[0,-1],[1,0]]", "+1·(x²+1)"),
        ("[[0]]", "+1·(x)"),
        ("[]", "0"),
    ] {
        let o = run(&["class", m]);
        assert!(o.status.success(), "{m}: {}", stderr(&o));
        assert_eq!(first_line(&o), want, "{m}");
    }
}

#[test]
fn class_rejects_non_square() {
    let o = run(&["class", "[[1,2]]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("square"));
}

#[test]
fn factor_prints_irreducible_factors() {
    let o = run(&["factor", "[-1,0,0,0,1]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x⁴−1 = (x−1)·(x+1)·(x²+1)\n");
}

#[test]
fn invariants_of_the_builtins() {
    let o = run(&["invariants", "example1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("u = [−g]"), "{text}");
    assert!(text.contains("ℓ = 0 ⊕ 0"), "{text}");

    let o = run(&["invariants", "example2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("u = −[−1]"), "{text}");
    assert!(text.contains("L = 2"), "{text}");

    let o = run(&["invariants", "example3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("L = 2  quotient L = 1"), "{text}");
}

#[test]
fn realize_reports_the_target_class() {
    for (a, b, want) in [
        ("[]", "[]", "0"),
        ("[[2]]", "[]", "+1·(x−2)"),
        ("[[0,1],[1,0]]", "[[3]]", "+1·(x−1) +1·(x+1) −1·(x−3)"),
    ] {
        let o = run(&["realize", "--a", a, "--b-prime", b]);
        assert!(o.status.success(), "{}", stderr(&o));
        let text = stdout(&o);
        assert_eq!(text.lines().last().unwrap(), format!("class: {want}"));
    }
}

#[test]
fn realize_output_is_a_valid_document() {
    let dir = std::env::temp_dir().join(format!("lefschetz-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wedge.json");
    let o = run(&["realize", "--a", "[[2]]", "--output", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "class: +1·(x−2)\n");
    let o = run(&["check", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&["invariants", path.to_str().unwrap()]);
    assert!(stdout(&o).contains("u in U(Z) = +1·(x−2)"), "{}", stdout(&o));
}

#[test]
fn check_accepts_builtins_and_stdin() {
    for name in ["example1", "example2", "example3"] {
        let o = run(&["check", name]);
        assert!(o.status.success(), "{name}: {}", stderr(&o));
    }
    let doc = stdout(&run(&["realize", "--a", "[[1]]"]));
    let doc: String = doc.lines().take_while(|l| !l.starts_with("class:")).collect::<Vec<_>>().join("\n");
    let mut child = bin()
        .args(["check", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write as _;
    child.stdin.take().unwrap().write_all(doc.as_bytes()).unwrap();
    assert!(child.wait_with_output().unwrap().status.success());
}

#[test]
fn check_rejects_a_boundary_that_does_not_square_to_zero() {
    let path = scratch(
        "dd.json",
        r#"{"name":"bad","description":"","group":"Zn:1","iso_classes":[{"subgroup_class":["1"],"component":"X","chain":[
            {"degree":0,"rank":1,"map":[[1]]},
            {"degree":1,"rank":1,"map":[[1]],"boundary":[[1]]},
            {"degree":2,"rank":1,"map":[[1]],"boundary":[[1]]}]}]}"#,
    );
    let o = run(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("degree 2"), "{}", stderr(&o));
}

#[test]
fn check_rejects_inconsistent_orbit_indices() {
    let doc = stdout(&run(&["example", "example2", "--json"]));
    let mut v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    let complex = &mut v["complex"];
    complex["iso_classes"][0]["fixed_points"][1]["index"] = serde_json::json!(-1);
    let path = scratch("orbit.json", &complex.to_string());
    let o = run(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("fixed-point indices must agree on an orbit"), "{}", stderr(&o));
}

#[test]
fn json_output_is_byte_stable() {
    for name in ["example1", "example2", "example3"] {
        let a = run(&["invariants", name, "--json"]);
        let b = run(&["invariants", name, "--json"]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{name}");
    }
}

#[test]
fn json_and_summary_agree() {
    let json: serde_json::Value = serde_json::from_slice(&run(&["invariants", "example3", "--json"]).stdout).unwrap();
    let text = stdout(&run(&["invariants", "example3"]));
    for class in json["classes"].as_array().unwrap() {
        let l = class["lefschetz"].as_i64().unwrap();
        let q = class["quotient_lefschetz"].as_i64().unwrap();
        assert!(text.contains(&format!("L = {l}  quotient L = {q}")), "{class}");
        let u = class["u_rendered"].as_str().unwrap();
        assert!(text.contains(&format!("u = {u}")), "{u}");
    }
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("lefschetz-cli-flag-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = run(&["invariants", "example2", "--json", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, run(&["invariants", "example2", "--json"]).stdout);
}

#[test]
fn usage_and_input_errors_exit_with_one() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["class", "not json"]).status.code(), Some(1));
    assert_eq!(run(&["check", "/nonexistent/complex.json"]).status.code(), Some(1));
    assert_eq!(run(&["example", "example9"]).status.code(), Some(1));
}
