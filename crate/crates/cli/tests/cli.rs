use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffrec"))
        .args(args)
        .output()
        .expect("spawn ffrec")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn tempdir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("ffrec-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    d
}

#[test]
fn arithmetic_commands() {
    assert_eq!(ok(&["factor", "x^3-x"]).trim(), "(x-1)*(x)*(x+1)");
    assert_eq!(ok(&["factor", "6*x^3-6*x"]).trim(), "6*(x-1)*(x)*(x+1)");
    assert_eq!(ok(&["factor", "(x+1)^2"]).trim(), "(x+1)^2");
    assert_eq!(ok(&["height", "(x^2+1)/x^5"]).trim(), "5");
    assert_eq!(ok(&["height", "7/3"]).trim(), "0");
    assert_eq!(ok(&["val", "--place", "inf", "x^3"]).trim(), "-3");
    assert_eq!(ok(&["val", "--place", "x+1", "(x+1)^2/x"]).trim(), "2");
    assert_eq!(ok(&["val", "--place", "x", "0"]).trim(), "inf");
    assert_eq!(ok(&["indep", "x", "x+1"]).trim(), "independent");
    assert_eq!(ok(&["indep", "x^2", "x^3"]).trim(), "dependent r=3 s=-2");
}

#[test]
fn printed_expressions_parse_back() {
    let e = ok(&["eval", &fixture("recurrence.json"), "3"]);
    let first = e.lines().next().unwrap();
    assert_eq!(first, "4*x^3+3*x^2+3*x+1");
    // the printed value is valid input and has the expected height
    assert_eq!(ok(&["height", first]).trim(), "3");
    let f = ok(&["factor", "2*x^4-2"]);
    assert_eq!(ok(&["factor", f.trim()]), f);
}

#[test]
fn eval_with_pi_form() {
    let out = ok(&["eval", &fixture("recurrence.json"), "3", "--pi"]);
    assert!(out.contains("root 1 = x"), "{out}");
    assert!(out.contains("root 2 = x+1"), "{out}");
}

#[test]
fn growth_profile_csv() {
    let out = ok(&["growth", &fixture("recurrence.json"), "--n-max", "5"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,gap");
    assert_eq!(lines.len(), 7);
    assert!(lines[6].starts_with("# C-=0 C+=0"), "{out}");
}

#[test]
fn constants_json() {
    let out = ok(&["constants", &fixture("sum_vs_trinomial.json")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["C_aux"], 15);
    assert_eq!(v["case3"], "15");
    assert_eq!(v["case4"], "vacuous");
    assert_eq!(v["case5_Lprime"]["1"], "15");
    assert_eq!(v["S"], serde_json::json!(["x", "x+1", "x^2+x+1", "inf"]));
}

#[test]
fn scan_writes_csv_and_constants() {
    let dir = tempdir("csv");
    let out = ok(&["scan", &fixture("monomial.json"), "--theorem", "1", "--grid", "10", "10", "--dir", dir.to_str().unwrap()]);
    assert!(out.contains("[ok  ]"), "{out}");
    assert!(out.contains("C_aux = 3"), "{out}");
    assert!(out.contains("empirical_C = 1"), "{out}");
    let csv = std::fs::read_to_string(dir.join("scan.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,m,mu_diff,mu_Gn,gap"));
    assert_eq!(lines.count(), 100);
    assert!(csv.contains("\n3,3,-2,-3,1\n"), "{csv}");
    let c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.join("constants.json")).unwrap()).unwrap();
    assert_eq!(c["C_aux"], 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn scan_json_is_deterministic() {
    let (a, b) = (tempdir("json-a"), tempdir("json-b"));
    for d in [&a, &b] {
        ok(&["scan", &fixture("cancellation.json"), "--theorem", "2", "--out", "json", "--dir", d.to_str().unwrap()]);
    }
    let (ja, jb) = (std::fs::read(a.join("scan.json")).unwrap(), std::fs::read(b.join("scan.json")).unwrap());
    assert_eq!(ja, jb);
    let v: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["empirical_C"], 1);
    let seq = Command::new(env!("CARGO_BIN_EXE_ffrec"))
        .env("FFREC_THREADS", "1")
        .args(["scan", &fixture("cancellation.json"), "--theorem", "2", "--out", "json", "--dir", a.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(seq.status.success());
    assert_eq!(std::fs::read(a.join("scan.json")).unwrap(), jb);
    std::fs::remove_dir_all(a).unwrap();
    std::fs::remove_dir_all(b).unwrap();
}

#[test]
fn inequality_checks() {
    assert_eq!(ok(&["check", "--bm", &fixture("bm.json")]).trim(), "lhs=1 rhs=3 holds=true");
    assert_eq!(ok(&["check", "--zannier", &fixture("zannier.json")]).trim(), "lhs=0 rhs=0 holds=true");
    assert!(ok(&["check", "--bm", &fixture("bm_cubic.json")]).contains("holds=true"));
    assert!(ok(&["check", "--zannier", &fixture("zannier_quadratic.json")]).contains("holds=true"));
    let o = run(&["check", "--bm", &fixture("bm_malformed.json")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("identity fails"));
}

#[test]
fn exit_codes() {
    // usage and parse errors
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["height", "1/(x"]), 2);
    let o = run(&["height", "x+*2"]);
    assert!(stderr(&o).contains('^'), "{}", stderr(&o));
    assert_eq!(code(&["check"]), 2);
    // domain errors
    assert_eq!(code(&["val", "--place", "x^2-1", "x"]), 3);
    assert_eq!(code(&["scan", &fixture("dependent.json")]), 3);
    let o = run(&["scan", &fixture("constant_root.json"), "--theorem", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("constant characteristic root"));
    assert_eq!(code(&["scan", &fixture("constant_beta.json")]), 3);
    // missing file
    assert_eq!(code(&["constants", "/nonexistent/instance.json"]), 1);
}

#[test]
fn config_errors_name_the_field() {
    let dir = tempdir("cfg");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"G": {"terms": [{"coeff": ["1"], "root": "x"}]}, "H": {"terms": [{"coeff": ["1"], "root": "x+"}]}}"#).unwrap();
    let o = run(&["constants", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("H.terms[0].root"), "{}", stderr(&o));
    std::fs::write(&bad, r#"{"G": {"terms": []}, "H": {"terms": []}, "extra": 1}"#).unwrap();
    assert_eq!(code(&["constants", bad.to_str().unwrap()]), 2);
    std::fs::remove_dir_all(dir).unwrap();
}
