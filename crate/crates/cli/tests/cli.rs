use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use ordlen::Ordinal;
use serde_json::Value;

fn ordlen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordlen"))
        .args(args)
        .env_remove("ORDLEN_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn ordlen_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ordlen"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const EXAMPLE: [&str; 4] = ["--vars", "x,y", "--ideal", "x^2,x*y"];

/// Commands with golden text and JSON output, all on `k[x,y]/(x², xy)`.
fn golden_cases() -> Vec<(&'static str, Vec<&'static str>)> {
    let with = |cmd: &'static str, extra: &[&'static str]| {
        let mut v = vec![cmd];
        v.extend(EXAMPLE);
        v.extend(extra);
        v
    };
    vec![
        ("len", with("len", &[])),
        ("fcyc", with("fcyc", &[])),
        ("profile", with("profile", &[])),
        ("ass", with("ass", &[])),
        ("filtration", with("filtration", &[])),
        ("prim", with("prim", &["--prime", "x"])),
        ("endo", with("endo", &["--mult", "y"])),
    ]
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in golden_cases() {
        for (ext, format) in [("txt", "text"), ("json", "json")] {
            let mut full = args.clone();
            full.extend(["--format", format]);
            let out = ordlen(&full);
            assert!(out.status.success(), "{name}: {}", stderr(&out));
            let path = golden_path(&format!("{name}.{ext}"));
            if update {
                fs::write(&path, stdout(&out)).unwrap();
            }
            let want = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
            assert_eq!(stdout(&out), want, "{name} ({format})");
        }
    }
}

/// Every scalar JSON field has a `key: value` text line carrying the same
/// value; ordinals are compared after parsing both forms.
#[test]
fn text_and_json_agree() {
    for (name, args) in golden_cases() {
        let text = stdout(&ordlen(&args));
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let json: Value = serde_json::from_str(&stdout(&ordlen(&json_args))).unwrap();
        let obj = json.as_object().unwrap();
        let lines: Vec<&str> = text.lines().collect();
        for (key, value) in obj {
            let text_value = if obj.len() == 1 {
                lines[0].to_string()
            } else {
                match lines.iter().find_map(|l| l.strip_prefix(&format!("{key}: "))) {
                    Some(v) => v.to_string(),
                    None => continue,
                }
            };
            let is_ordinal = value.as_array().is_some_and(|a| {
                a.iter().all(|t| t.as_array().is_some_and(|p| p.len() == 2 && p.iter().all(Value::is_u64)))
            }) && !key.starts_with("ass");
            if is_ordinal {
                let from_json: Ordinal = serde_json::from_value(value.clone()).unwrap();
                let from_text: Ordinal = text_value.parse().unwrap();
                assert_eq!(from_json, from_text, "{name}/{key}");
            } else if value.is_boolean() || value.is_u64() {
                assert_eq!(value.to_string(), text_value, "{name}/{key}");
            } else if value.is_null() {
                assert_eq!(text_value, "none", "{name}/{key}");
            }
        }
    }
}

#[test]
fn documented_examples() {
    let out = ordlen(&["len", "--vars", "x,y", "--ideal", "x^2,x*y"]);
    assert_eq!(stdout(&out), "w + 1\n");
    assert!(out.status.success());

    let out = ordlen(&["len", "--vars", "x,y", "--ideal", ""]);
    assert_eq!(stdout(&out), "w^2\n");

    let out = ordlen(&["len", "--vars", "x,y", "--ideal", "1"]);
    assert_eq!(stdout(&out), "0\n");

    let out = ordlen(&["len", "--vars", "x,y", "--module", "y", "x^2,x*y"]);
    assert_eq!(stdout(&out), "w\n");
    let out = ordlen(&["len", "--vars", "x,y", "--module", "x,y", "x^2,x*y"]);
    assert_eq!(stdout(&out), "w + 1\n");
}

#[test]
fn check_all_passes() {
    let out = ordlen(&["check", "all", "--max-vars", "2", "--max-deg", "3"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.lines().filter(|l| l.starts_with("CHECK")).all(|l| l.contains(" PASS ")));
    assert!(text.trim_end().ends_with("checks passed"));

    let out = ordlen(&["check", "latt", "--format", "json"]);
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["passed"], Value::Bool(true));
    assert!(json["checks"].as_array().unwrap().iter().any(|c| c["name"] == "latt/strict-join"));
}

#[test]
fn check_output_is_deterministic() {
    let args = ["check", "semiadd", "--max-vars", "3", "--seed", "7"];
    assert_eq!(stdout(&ordlen(&args)), stdout(&ordlen(&args)));
}

#[test]
fn parse_errors_exit_2_with_location() {
    let out = ordlen(&["len", "--vars", "x,y", "--ideal", "x^2,z"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("--ideal at line 1, column 5"), "{err}");
    assert!(err.contains("unknown variable 'z'"), "{err}");

    let out = ordlen_stdin(&["len", "-"], "vars: x,y\nJ: x^2, x*q\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("stdin at line 2, column 11"), "{}", stderr(&out));

    for args in [
        vec!["len", "--vars", "x,x", "--ideal", "x"],
        vec!["len", "--vars", "x,y", "--module", "x", "y^"],
        vec!["len", "--ideal", "x"],
        vec!["prim", "--vars", "x,y", "--ideal", "x*y", "--prime", "w"],
        vec!["endo", "--vars", "x,y", "--ideal", "x*y", "--mult", "2*x"],
        vec!["check", "nonsense"],
        vec!["frobnicate"],
    ] {
        assert_eq!(ordlen(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn guards_exit_3() {
    for args in [
        vec!["len", "--vars", "x,y", "--ideal", "x^100000,y^100000"],
        vec!["check", "all", "--max-vars", "13"],
        vec!["check", "semiadd", "--max-deg", "9"],
        vec!["check", "endo-fixture", "--truncation", "2"],
        vec!["check", "semiadd", "--max-deg", "0"],
    ] {
        let out = ordlen(&args);
        assert_eq!(out.status.code(), Some(3), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn stdin_json_and_text_inputs_agree() {
    let text = ordlen_stdin(&["profile", "-"], "vars: x,y ; I: x,y ; J: x^2, x*y");
    let json = ordlen_stdin(
        &["profile", "-"],
        r#"{"I":{"vars":["x","y"],"gens":[[1,0],[0,1]]},"J":{"vars":["x","y"],"gens":[[2,0],[1,1]]}}"#,
    );
    assert!(text.status.success() && json.status.success());
    assert_eq!(stdout(&text), stdout(&json));
    assert!(stdout(&text).contains("length: w + 1"));
}
