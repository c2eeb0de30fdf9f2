//! Helpers for driving the built `quiv` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

pub fn run_quiv(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiv"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("failed to spawn the quiv binary")
}

pub fn write_file(dir: &Path, name: &str, contents: &str) {
    fs::write(dir.join(name), contents).expect("failed to write test file");
}

pub fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is utf-8")
}

pub fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is utf-8")
}

pub fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process exited without a code")
}

/// The running example: a loop `e` at vertex 0 and a parallel pair `f`, `g`
/// from 0 to 1.
pub const EXAMPLE_QUIVER: &str = "\
vertex 0
vertex 1
edge e 0 0
edge f 0 1
edge g 0 1
";

/// One vertex 2 carrying two loops `h` and `i`.
pub const TWO_LOOPS: &str = "\
vertex 2
edge h 2 2
edge i 2 2
";

/// The collapsing map from the example quiver onto the two loops.
pub const COLLAPSE_MORPHISM: &str = "\
dom g.qv
cod h.qv
vmap 0 -> 2
vmap 1 -> 2
emap e -> h
emap f -> i
emap g -> i
";
