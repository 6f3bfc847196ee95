use std::io::Write;
use std::process::{Command, Output, Stdio};

fn hfs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfs"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hfs"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_prints_canonical_text() {
    let o = hfs(&["eval", "-e", "ord(2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{{},{{}}}\n");

    let o = hfs(&["eval", "-e", "card pow(ord(2))"]);
    assert_eq!(stdout(&o), "{{},{{}},{{},{{}}},{{},{{}},{{},{{}}}}}\n");
}

#[test]
fn syntax_errors_exit_with_two() {
    let o = hfs(&["eval", "-e", "{,}"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1, column 2"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn limits_come_from_flags() {
    assert_eq!(hfs(&["eval", "-e", "ord(5)"]).status.code(), Some(0));
    let o = hfs(&["--max-size", "4", "eval", "-e", "ord(5)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hfs(&["--fuel", "2", "eval", "-e", "chain id"]);
    assert_eq!(stdout(&o), "[{},{{}}]\n");
}

#[test]
fn check_passes_and_is_reproducible() {
    let args = ["check", "--suite", "bcs", "--size", "32", "--seed", "42"];
    let first = hfs(&args);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    let text = stdout(&first);
    assert!(text.starts_with("suite bcs size 32 seed 42\n"), "{text}");
    assert!(text.ends_with("ok\n"), "{text}");
    let second = hfs(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let o = hfs(&["check", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("nope"));
}

#[test]
fn a_failing_suite_exits_with_one() {
    // Too small a size limit for the suite's own constructions.
    let o = hfs(&["--max-size", "1", "check", "--suite", "numerals", "--size", "8"]);
    assert_eq!(o.status.code(), Some(1), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("FAIL "));
    assert!(stdout(&o).ends_with("FAILED\n"));
}

#[test]
fn batch_runs_keep_bindings_and_skip_comments() {
    let script = "# setup\nlet x = ord(2)\n\npair(x, {})  # trailing note\nordinal? x\n";
    let o = with_stdin(&["run", "-"], script);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "{{{{},{{}}}},{{},{{},{{}}}}}\ntrue\n");
}

#[test]
fn batch_errors_name_the_line() {
    let o = with_stdin(&["run", "-"], "ord(1)\nmissing\nord(2)\n");
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "{{}}\n");
    assert!(stderr(&o).starts_with("-:2: "), "{}", stderr(&o));
}

#[test]
fn missing_file_is_reported() {
    let o = hfs(&["run", "/nonexistent/script.hfs"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cannot read"));
}

#[test]
fn repl_reads_until_quit() {
    let o = with_stdin(&["repl"], "let y = {{}}\ny\nbad(\n:q\nord(1)\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{{}}\n");
    assert!(stderr(&o).contains("error:"));
}
