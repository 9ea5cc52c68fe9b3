//! End-to-end checks of the installed binary: stdin input, stream layout,
//! and exit codes, via real subprocesses.

use std::io::Write;
use std::process::{Command, Stdio};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lorentz-turns"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = binary()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn binary");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("write stdin");
    let out = child.wait_with_output().expect("binary exits");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("stdout utf-8"),
        String::from_utf8(out.stderr).expect("stderr utf-8"),
    )
}

#[test]
fn reads_stdin_and_matches_the_in_process_runner() {
    let input = r#"{"left":{"a0":[1,0],"a":[[0,0],[0,0],[0,0]]},
                    "right":{"a0":[1,0],"a":[[0,0],[0,0],[0,0]]}}"#;
    let (code, stdout, stderr) = run_with_stdin(&["compose", "--input", "-"], input);
    assert_eq!(code, 0);
    assert!(stderr.is_empty());

    let dir = std::env::temp_dir().join("lorentz_turns_cli_io");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("identity_pair.json");
    std::fs::write(&path, input).unwrap();
    let expected = lorentz_turns_cli::run_from_args([
        "lorentz-turns".to_string(),
        "compose".to_string(),
        "--input".to_string(),
        path.display().to_string(),
    ])
    .unwrap();
    assert_eq!(stdout, format!("{expected}\n"));
}

#[test]
fn input_errors_exit_2_with_a_json_error_object() {
    let (code, stdout, _) = run_with_stdin(
        &["polar", "--input", "-"],
        r#"{"a0":[1,0],"a":[[1,0],[0,0],[0,0]]}"#,
    );
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("error object is JSON");
    assert_eq!(v["error"]["exit_code"], 2);

    let (code, stdout, _) = run_with_stdin(&["classify", "--input", "-"], "not json");
    assert_eq!(code, 2);
    assert!(stdout.starts_with("{\"error\":"));
}

#[test]
fn pretty_and_compact_agree_on_content() {
    let input = r#"{"a0":[1.5430806348152437,0],"a":[[0,1.1752011936438014],[0,0],[0,0]]}"#;
    let (code, compact, _) = run_with_stdin(&["polar", "--input", "-"], input);
    assert_eq!(code, 0);
    let (code, pretty, _) = run_with_stdin(&["polar", "--input", "-", "--pretty"], input);
    assert_eq!(code, 0);
    let a: serde_json::Value = serde_json::from_str(&compact).unwrap();
    let b: serde_json::Value = serde_json::from_str(&pretty).unwrap();
    assert_eq!(a, b);
    assert!(pretty.lines().count() > 1);
    assert_eq!(a["output"]["beta"].as_f64(), Some(2.0));
}
