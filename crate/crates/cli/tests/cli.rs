use std::io::Write;
use std::process::{Command, Output};

fn heaporth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heaporth"))
        .args(args)
        .env_remove("HEAPORTH_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = heaporth(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn basis_polynomials() {
    assert_eq!(stdout(&["--spec", "fib", "poly", "-n", "3"]).trim(), "x^3 + 2*x");
    assert_eq!(stdout(&["--spec", "catalan", "poly", "-n", "2"]).trim(), "x^2 - 1");
    let all = stdout(&["--spec", "fib", "poly", "-n", "2", "--all"]);
    assert_eq!(all.lines().collect::<Vec<_>>(), ["P_0 = 1", "P_1 = x", "P_2 = x^2 + 1"]);
    let sym = stdout(&["poly", "-n", "1"]);
    assert_eq!(sym.trim(), "x - c0");
}

#[test]
fn moments_json() {
    assert_eq!(stdout(&["--spec", "fib", "moments", "--nmax", "6", "--format", "json"]).trim(), r#"{"moments":[1,0,-1,0,2,0,-5]}"#);
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--spec", "catalan", "moments", "--nmax", "8", "--format", "json"])).unwrap();
    assert_eq!(v["moments"], serde_json::json!([1, 0, 1, 0, 2, 0, 5, 0, 14]));
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_heaporth"))
        .args(["--spec", "fib", "moments", "--nmax", "2"])
        .env("HEAPORTH_FORMAT", "json")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"moments":[1,0,-1]}"#);
}

#[test]
fn custom_spec_file() {
    let dir = std::env::temp_dir().join(format!("heaporth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("unit.json");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, r#"{{"c":[1,1,1,1],"lambda":[1,1,1,1]}}"#).unwrap();
    let spec = format!("custom:{}", path.display());
    // unit weights count Motzkin paths
    assert_eq!(stdout(&["--spec", &spec, "moments", "--nmax", "6", "--format", "json"]).trim(), r#"{"moments":[1,1,2,4,9,21,51]}"#);
    let missing = heaporth(&["--spec", "custom:/nonexistent/spec.json", "moments"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn hankel_and_expansion() {
    let d = stdout(&["hankel", "--which", "d", "-n", "2"]);
    assert_eq!(d.lines().last().unwrap(), "d_2 = l1^2*l2");
    let chi = stdout(&["--spec", "fib", "hankel", "--which", "chi", "-n", "1"]);
    assert!(chi.ends_with("chi_1 = 0\n"), "{chi}");
    assert_eq!(stdout(&["--spec", "fib", "expand", "--target", "x^8"]).trim(), "x^8 = 14*P0 - 28*P2 + 20*P4 - 7*P6 + P8");
    assert_eq!(stdout(&["--spec", "catalan", "expand", "--target", "x^4"]).trim(), "x^4 = 2*Q0 + 3*Q2 + Q4");
}

#[test]
fn continued_fraction() {
    let out = stdout(&["--spec", "catalan", "cf", "--depth", "2"]);
    assert!(out.starts_with("J^(2) = "), "{out}");
    let tex = stdout(&["--spec", "catalan", "cf", "--depth", "1", "--format", "latex"]);
    assert!(tex.contains("\\cfrac{1}{1 - \\cfrac{x^{2}}{1}}"), "{tex}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--spec", "fib", "cf", "--depth", "2", "--format", "json"])).unwrap();
    assert_eq!(v["depth"], 2);
}

#[test]
fn heap_commands() {
    let settled = stdout(&["heap", "settle", "m0", "d2", "m2"]);
    assert_eq!(settled, "  1 | . . m\n  0 | m < >\n    + 0 1 2\nm0 d2 m2\n");
    assert_eq!(stdout(&["heap", "canon", "m2", "m0"]).trim(), "m0 m2");
    assert_eq!(stdout(&["heap", "eq", "m0 m2", "m2 m0"]).trim(), "equivalent");
    assert_eq!(stdout(&["heap", "eq", "m1 d1", "d1 m1"]).trim(), "not equivalent");
    let fp = stdout(&["heap", "from-path", "a0", "c1", "b1"]);
    assert_eq!(fp.lines().next().unwrap(), "m1 d1");
    assert_eq!(stdout(&["heap", "to-path", "m1", "d1"]), "NE,E,SE@0\na0 c1 b1\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&["heap", "settle", "m0", "--format", "json"])).unwrap();
    assert_eq!(v["pieces"][0]["kind"], "m");
}

#[test]
fn path_commands() {
    let all = stdout(&["path", "enum", "-n", "4"]);
    assert_eq!(all.lines().count(), 9);
    assert_eq!(all.lines().next().unwrap(), "NE,NE,SE,SE@0");
    assert_eq!(stdout(&["path", "enum", "--from", "0", "--to", "2", "-n", "2"]).trim(), "NE,NE@0");
    assert_eq!(stdout(&["path", "word", "NE,E,SE@0"]).trim(), "a0 c1 b1");
    assert_eq!(stdout(&["path", "weight", "a0", "c1", "b1"]).trim(), "c1*l1");
    assert_eq!(stdout(&["--spec", "fib", "path", "weight", "a0", "b1"]).trim(), "-1");
}

#[test]
fn verify_reports() {
    let out = stdout(&["verify", "P5.1", "I5", "--nmax", "4"]);
    assert!(out.starts_with("P5.1 PASS (nmax=4)"), "{out}");
    assert!(out.contains("\nI5 PASS (nmax=4)"));
    assert!(out.trim_end().ends_with("2/2 verifiers passed"));
    let parallel = stdout(&["verify", "P5.1", "I5", "--nmax", "4", "--jobs", "2"]);
    assert_eq!(out, parallel);
}

#[test]
fn exit_codes() {
    assert_eq!(heaporth(&["bogus"]).status.code(), Some(2));
    assert_eq!(heaporth(&["heap", "settle", "zz"]).status.code(), Some(2));
    assert_eq!(heaporth(&["verify", "NOPE"]).status.code(), Some(2));
    assert_eq!(heaporth(&["--spec", "nonsense", "poly", "-n", "2"]).status.code(), Some(2));
    // an open path has no heap image
    let open = heaporth(&["heap", "from-path", "a0"]);
    assert_eq!(open.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&open.stderr).starts_with("error:"));
}
