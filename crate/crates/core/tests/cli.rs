use std::io::Write;
use std::process::{Command, Stdio};

use flowroots::cli::run;
use flowroots::enumerate::three_edge_connected;
use flowroots::graph::format;

fn call(args: &[&str], stdin: &[u8]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("flowroots").chain(args.iter().copied());
    let code = run(argv, &mut &stdin[..], &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str], stdin: &[u8]) -> std::process::Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_flowroots"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn script_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn corpus() -> Vec<u8> {
    let mut s = String::new();
    for n in 4..=6 {
        for g in three_edge_connected(n) {
            s.push_str(&format::to_graph6(&g).unwrap());
            s.push('\n');
        }
    }
    s.into_bytes()
}

#[test]
fn flow_polynomial_of_k4() {
    let (code, out, _) = call(&["poly", "--kind", "flow", "-g", "C~"], b"");
    assert_eq!(code, 0);
    assert_eq!(out, "(x-1)(x-2)(x-3)\ncoeffs [-6, 11, -6, 1]\n");
}

#[test]
fn malformed_graph6_reports_an_offset() {
    let out = binary(&["poly", "-g", "B"], b"");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error:") && err.contains("byte"), "{err}");
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    assert_eq!(binary(&["frobnicate"], b"").status.code(), Some(1));
    assert_eq!(binary(&["poly", "--kind", "nope", "-g", "C~"], b"").status.code(), Some(1));
    let help = binary(&["--help"], b"");
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8(help.stdout).unwrap().contains("verify"));
}

#[test]
fn other_kinds_and_stdin_input() {
    let (code, out, _) = call(&["poly", "--kind", "chromatic"], b"C~\n");
    assert_eq!(code, 0);
    assert_eq!(out, "x(x-1)(x-2)(x-3)\ncoeffs [0, -6, 11, -6, 1]\n");
    let (code, out, _) = call(&["poly", "--kind", "charpoly", "-g", "C~"], b"");
    assert_eq!(code, 0);
    assert!(out.contains("coeffs [-6, 11, -6, 1]"));
    let (code, out, _) = call(&["poly"], b"2 3\n0 1\n0 1\n0 1\n");
    assert_eq!(code, 0);
    assert!(out.contains("coeffs [2, -3, 1]"), "{out}");
}

#[test]
fn verify_summary_and_exit_code() {
    let out = binary(&["verify"], &corpus());
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["inconsistent"], 0);
    assert_eq!(last["summary"]["total"], text.lines().count() as u64 - 1);
}

#[test]
fn empty_stream_gives_a_zero_summary() {
    let (code, out, _) = call(&["verify"], b"");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["summary"]["total"], 0);
    assert_eq!(v["summary"]["inconsistent"], 0);
}

#[test]
fn bad_record_names_its_line() {
    let (code, _, err) = call(&["verify"], b"C~\nB\n");
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn json_round_trips() {
    let input = corpus();
    let mut lines = Vec::new();
    for args in [
        vec!["--json", "poly", "-g", "C~"],
        vec!["--json", "roots", "-g", "C~"],
        vec!["--json", "stats", "-g", "C~"],
        vec!["--json", "cutsets", "-g", "C~"],
        vec!["--json", "dual", "-g", "C~"],
        vec!["--json", "check", "-g", "C~"],
        vec!["--json", "decompose", "-g", "C~"],
        vec!["--json", "gen", "--n", "7", "--seed", "4"],
        vec!["verify"],
    ] {
        let (code, out, err) = call(&args, &input);
        assert_eq!(code, 0, "{args:?}: {err}");
        lines.extend(out.lines().map(str::to_string));
    }
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), line);
    }
}

#[test]
fn parallel_output_is_deterministic() {
    let input = corpus();
    let (_, serial, _) = call(&["verify"], &input);
    for k in ["2", "3", "8"] {
        let (code, out, _) = call(&["--parallel", k, "verify"], &input);
        assert_eq!(code, 0);
        assert_eq!(out, serial, "--parallel {k}");
    }
}

#[test]
fn gen_is_seeded_and_replayable() {
    let a = call(&["gen", "--family", "triangulation", "--n", "9", "--seed", "11"], b"");
    let b = call(&["gen", "--family", "triangulation", "--n", "9", "--seed", "11"], b"");
    assert_eq!(a, b);
    let (_, out, _) = a;
    let script: String = out
        .lines()
        .filter_map(|l| l.strip_prefix("# "))
        .map(|l| format!("{l}\n"))
        .collect();
    let graph6 = out.lines().last().unwrap();
    let file = script_file(&script);
    let (code, replay, err) = call(&["gen", "--script", file.path().to_str().unwrap()], b"");
    assert_eq!(code, 0, "{err}");
    assert_eq!(replay.lines().last().unwrap(), graph6);
}

#[test]
fn gen_rejects_bad_scripts() {
    let file = script_file("E 0 1\nF 0 1 9\n");
    let (code, _, err) = call(&["gen", "--script", file.path().to_str().unwrap()], b"");
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
}
