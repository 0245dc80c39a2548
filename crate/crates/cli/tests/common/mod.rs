//! Process-spawning helpers shared by the binary-level test suites.

use std::io::Write;
use std::process::{Command, Output, Stdio};

pub fn graphgeom(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_graphgeom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("piped stdin")
        .write_all(stdin.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

pub fn stdout_of(args: &[&str], stdin: &str) -> String {
    let out = graphgeom(args, stdin);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

pub fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}
